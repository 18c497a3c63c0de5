#include "behrend/monomial.hpp"

#include <algorithm>
#include <limits>

#include "behrend/error.hpp"

namespace behrend {

namespace {

Exponent checked(std::uint64_t v) {
  if (v > std::numeric_limits<Exponent>::max())
    throw Error(ErrorCode::ExponentOverflow, "exponent exceeds 32 bits");
  return static_cast<Exponent>(v);
}

// Degree compare, then reverse lexicographic tie break on [lo, hi): the
// monomial with the smaller exponent in the last differing variable wins.
int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                    std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Monomial Monomial::variable(std::size_t arity, std::size_t index,
                            Exponent power) {
  Monomial m(arity);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = checked(std::uint64_t(exps_[i]) + o.exps_[i]);
  return r;
}

Monomial Monomial::pow(std::uint64_t e) const {
  Monomial r(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] && e > std::numeric_limits<Exponent>::max())
      throw Error(ErrorCode::ExponentOverflow, "exponent exceeds 32 bits");
    r.exps_[i] = checked(std::uint64_t(exps_[i]) * e);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = o.exps_[i] - exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::max(exps_[i], o.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::min(exps_[i], o.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] && o.exps_[i]) return false;
  return true;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.arity();
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::DegRevLex:
      return degrevlex_range(a, b, 0, n);
    case Kind::LocalDegRevLex: {
      std::uint64_t da = a.degree(), db = b.degree();
      if (da != db) return da < db ? 1 : -1;
      return degrevlex_range(a, b, 0, n);
    }
    case Kind::Elimination: {
      std::size_t k = std::min(block_, n);
      if (int c = degrevlex_range(a, b, 0, k)) return c;
      return degrevlex_range(a, b, k, n);
    }
  }
  return 0;
}

}  // namespace behrend
