#ifndef BEHREND_MONOMIAL_HPP
#define BEHREND_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace behrend {

using Exponent = std::uint32_t;

/// Exponent vector of a coordinate monomial. Its length is the arity of the
/// ring it lives in.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t arity, std::size_t index,
                           Exponent power = 1);

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  /// Total degree, widened so sums of 32-bit exponents cannot wrap.
  std::uint64_t degree() const;
  bool is_one() const;

  /// Throws ExponentOverflow if an exponent leaves 32 bits.
  Monomial operator*(const Monomial& o) const;
  Monomial pow(std::uint64_t e) const;
  bool divides(const Monomial& o) const;
  /// Precondition: divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

/// A monomial ordering. Global orders have 1 smallest; local orders have 1
/// largest.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, LocalDegRevLex, Elimination };

  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(Kind kind, std::size_t block = 0)
      : kind_(kind), block_(block) {}

  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static constexpr MonomialOrder degrevlex() {
    return MonomialOrder(Kind::DegRevLex);
  }
  static constexpr MonomialOrder local_degrevlex() {
    return MonomialOrder(Kind::LocalDegRevLex);
  }
  /// Degrevlex on the first `block` variables, ties broken by degrevlex on
  /// the remaining ones. Eliminates the first block.
  static constexpr MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::Elimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  bool is_global() const { return kind_ != Kind::LocalDegRevLex; }
  bool is_local() const { return !is_global(); }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  Kind kind_ = Kind::DegRevLex;
  std::size_t block_ = 0;
};

}  // namespace behrend

#endif  // BEHREND_MONOMIAL_HPP
