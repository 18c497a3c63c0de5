#ifndef BEHREND_POLYNOMIAL_HPP
#define BEHREND_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "behrend/monomial.hpp"
#include "behrend/scalar.hpp"

namespace behrend {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Variable names plus coefficient domain. Variables are addressed by
/// position; names only matter for parsing and printing.
class Ring {
 public:
  Ring(std::vector<std::string> names, CoefficientDomain domain);

  static RingPtr make(std::vector<std::string> names,
                      CoefficientDomain domain = {});

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  CoefficientDomain domain() const { return domain_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Same names in a different coefficient domain.
  RingPtr with_domain(CoefficientDomain domain) const;

  bool operator==(const Ring& o) const {
    return names_ == o.names_ && domain_ == o.domain_;
  }

 private:
  std::vector<std::string> names_;
  CoefficientDomain domain_;
};

/// Throws RingMismatch unless both rings agree.
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial. Terms are unique, nonzero, and stored in descending
/// degrevlex order, so equal polynomials have identical term sequences.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, const Scalar& c);
  /// Combines duplicate monomials, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Largest total degree of a term; 0 for the zero polynomial.
  std::uint64_t total_degree() const;
  /// Smallest total degree of a term; 0 for the zero polynomial.
  std::uint64_t lowest_degree() const;
  std::uint64_t degree_in(std::size_t var) const;
  Scalar constant_term() const;
  Scalar coefficient_of(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator*(const Scalar& c) const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(std::uint64_t e) const;

  /// Formal partial derivative. Throws IndexOutOfRange.
  Polynomial derivative(std::size_t var) const;
  /// Throws ArityMismatch.
  Scalar evaluate(std::span<const Scalar> point) const;
  /// Order-maximal term. Throws ZeroPolynomial.
  const Term& leading_term(const MonomialOrder& order) const;

  /// Substitutes images[i] for variable i; every image lives in `target`.
  Polynomial substitute(const RingPtr& target,
                        std::span<const Polynomial> images) const;
  /// f(x + point): moves `point` to the origin.
  Polynomial translate(std::span<const Scalar> point) const;
  /// Renames variable i to target variable index_map[i].
  Polynomial embed(const RingPtr& target,
                   std::span<const std::size_t> index_map) const;
  /// Substitutes `value` for variable `var` and drops it from the ring.
  Polynomial specialize(std::size_t var, const Scalar& value,
                        const RingPtr& smaller) const;
  /// Divides by the leading coefficient under `order`.
  Polynomial monic(const MonomialOrder& order) const;
  /// Reduces rational coefficients modulo p.
  Polynomial reduce_mod(const RingPtr& modular_ring) const;

  std::string to_string() const;

  bool operator==(const Polynomial& o) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Monomial& m, const Ring& ring);

/// Parses `text` under the expression grammar
///   expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
///   factor := base ('^' uint)?; base := ident | rational | '(' expr ')'.
/// Throws UnknownVariable, SyntaxError (with byte offset), NegativeExponent.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Parses "3", "-3/4" into a rational. Throws SyntaxError.
mpq_class parse_rational(std::string_view text);

}  // namespace behrend

#endif  // BEHREND_POLYNOMIAL_HPP
