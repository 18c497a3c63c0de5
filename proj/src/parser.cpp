#include <cctype>
#include <limits>

#include "behrend/error.hpp"
#include "behrend/polynomial.hpp"

namespace behrend {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "empty expression");
    Polynomial p = expr();
    skip_ws();
    if (!at_end())
      throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    if (peek() == '-') throw Error(ErrorCode::NegativeExponent,
                                   "negative exponent at byte " + std::to_string(pos_));
    std::size_t start = pos_;
    std::string digits = read_digits();
    if (digits.empty()) throw SyntaxError(start, "expected exponent");
    mpz_class e(digits);
    if (e > std::numeric_limits<Exponent>::max())
      throw Error(ErrorCode::ExponentOverflow,
                  "exponent " + digits + " exceeds 32 bits at byte " + std::to_string(start));
    return b.pow(e.get_ui());
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw Error(ErrorCode::UnknownVariable, name);
      return Polynomial::variable(ring_, *idx);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      skip_ws();
      mpq_class q{mpz_class(num)};
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        std::string den = read_digits();
        if (den.empty()) throw SyntaxError(start, "expected denominator");
        mpz_class d(den);
        if (d == 0) throw SyntaxError(start, "zero denominator");
        q = mpq_class(mpz_class(num), d);
        q.canonicalize();
      }
      return Polynomial::constant(ring_, Scalar(q, ring_->domain()));
    }
    if (at_end()) throw SyntaxError(pos_, "unexpected end of input");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

mpq_class parse_rational(std::string_view text) {
  static const RingPtr empty = Ring::make({});
  Polynomial p = parse_polynomial(text, empty);
  return p.constant_term().rational();
}

}  // namespace behrend
