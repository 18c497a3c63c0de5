#include "behrend/scalar.hpp"

#include "behrend/error.hpp"

namespace behrend {

namespace {

std::uint32_t mod_reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_of_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

CoefficientDomain CoefficientDomain::prime_field(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31))
    throw Error(ErrorCode::InvalidArgument, "prime must satisfy 2 <= p < 2^31");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw Error(ErrorCode::InvalidArgument,
                  std::to_string(p) + " is not prime");
  return {p};
}

Scalar::Scalar(std::int64_t v, CoefficientDomain domain) : prime_(domain.prime) {
  if (prime_)
    residue_ = mod_reduce(v, prime_);
  else
    q_ = mpq_class(mpz_class(std::to_string(v)));
}

Scalar::Scalar(const mpq_class& v, CoefficientDomain domain)
    : prime_(domain.prime) {
  if (!prime_) {
    q_ = v;
    q_.canonicalize();
    return;
  }
  std::uint32_t den = mod_of_mpz(v.get_den(), prime_);
  if (den == 0)
    throw Error(ErrorCode::InvalidArgument,
                "denominator vanishes modulo " + std::to_string(prime_));
  std::uint64_t num = mod_of_mpz(v.get_num(), prime_);
  residue_ = static_cast<std::uint32_t>(num * mod_pow(den, prime_ - 2, prime_) % prime_);
}

void Scalar::check_domain(const Scalar& o) const {
  if (prime_ != o.prime_)
    throw Error(ErrorCode::RingMismatch, "coefficient domains differ");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (prime_)
    r.residue_ = residue_ ? prime_ - residue_ : 0;
  else
    r.q_ = -q_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_domain(o);
  if (prime_)
    residue_ = static_cast<std::uint32_t>((std::uint64_t(residue_) + o.residue_) % prime_);
  else
    q_ += o.q_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_domain(o);
  if (prime_)
    residue_ = static_cast<std::uint32_t>((std::uint64_t(residue_) + prime_ - o.residue_) % prime_);
  else
    q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_domain(o);
  if (prime_)
    residue_ = static_cast<std::uint32_t>(std::uint64_t(residue_) * o.residue_ % prime_);
  else
    q_ *= o.q_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  Scalar r = *this;
  if (prime_)
    r.residue_ = mod_pow(residue_, prime_ - 2, prime_);
  else
    r.q_ = 1 / q_;
  return r;
}

std::string Scalar::to_string() const {
  if (prime_) return std::to_string(residue_);
  return q_.get_str();
}

}  // namespace behrend
