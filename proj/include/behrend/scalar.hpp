#ifndef BEHREND_SCALAR_HPP
#define BEHREND_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace behrend {

/// Coefficient domain of a ring: the rationals (prime == 0) or F_p.
struct CoefficientDomain {
  std::uint32_t prime = 0;

  bool is_rational() const { return prime == 0; }
  bool operator==(const CoefficientDomain&) const = default;

  static CoefficientDomain rationals() { return {}; }
  /// Throws InvalidArgument unless 2 <= p < 2^31 and p is prime.
  static CoefficientDomain prime_field(std::uint32_t p);
};

/// An exact coefficient: a rational in lowest terms, or a residue in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }
  Scalar(std::int64_t v, CoefficientDomain domain);
  Scalar(const mpq_class& v, CoefficientDomain domain);

  CoefficientDomain domain() const { return {prime_}; }
  bool is_zero() const { return prime_ ? residue_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return prime_ ? residue_ == 1 : q_ == 1; }

  /// Rational value; only meaningful in the rational domain.
  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return residue_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws InvalidArgument on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.prime_ == b.prime_ &&
           (a.prime_ ? a.residue_ == b.residue_ : a.q_ == b.q_);
  }

  /// "3", "-3/4"; residues print as their representative in [0, p).
  std::string to_string() const;

 private:
  void check_domain(const Scalar& o) const;

  mpq_class q_;
  std::uint32_t prime_ = 0;
  std::uint32_t residue_ = 0;
};

}  // namespace behrend

#endif  // BEHREND_SCALAR_HPP
