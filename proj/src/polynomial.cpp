#include "behrend/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "behrend/error.hpp"

namespace behrend {

namespace {

constexpr MonomialOrder kStorageOrder = MonomialOrder::degrevlex();

bool storage_greater(const Term& a, const Term& b) {
  return kStorageOrder.greater(a.monomial, b.monomial);
}

// Merges a + sign*b for two sorted term lists.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = kStorageOrder.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
    } else {
      Scalar s = subtract ? a[i].coefficient - b[j].coefficient
                          : a[i].coefficient + b[j].coefficient;
      if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Ring::Ring(std::vector<std::string> names, CoefficientDomain domain)
    : names_(std::move(names)), domain_(domain) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw Error(ErrorCode::InvalidArgument,
                    "duplicate variable name '" + names_[i] + "'");
}

RingPtr Ring::make(std::vector<std::string> names, CoefficientDomain domain) {
  return std::make_shared<const Ring>(std::move(names), domain);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr Ring::with_domain(CoefficientDomain domain) const {
  return make(names_, domain);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && !(*a == *b))
    throw Error(ErrorCode::RingMismatch, "operands live in different rings");
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->arity()), c});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Scalar s(std::int64_t{c}, ring->domain());
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity())
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Monomial m = Monomial::variable(ring->arity(), index);
  Scalar one(std::int64_t{1}, ring->domain());
  return monomial(std::move(ring), std::move(m), one);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  std::sort(terms.begin(), terms.end(), storage_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero())
        p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero())
    p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::uint64_t Polynomial::total_degree() const {
  // degrevlex storage puts a maximal-degree term first
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::uint64_t Polynomial::lowest_degree() const {
  return terms_.empty() ? 0 : terms_.back().monomial.degree();
}

std::uint64_t Polynomial::degree_in(std::size_t var) const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max<std::uint64_t>(d, t.monomial[var]);
  return d;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one())
    return terms_.back().coefficient;
  return Scalar(std::int64_t{0}, ring_->domain());
}

Scalar Polynomial::coefficient_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return Scalar(std::int64_t{0}, ring_->domain());
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      prod.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->arity())
    throw Error(ErrorCode::IndexOutOfRange,
                "derivative index " + std::to_string(var) + " out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial[var] == 0) continue;
    Monomial m = t.monomial;
    Scalar c = t.coefficient * Scalar(std::int64_t{m[var]}, ring_->domain());
    m[var] -= 1;
    if (!c.is_zero()) out.push_back({std::move(m), std::move(c)});
  }
  return from_terms(ring_, std::move(out));
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->arity())
    throw Error(ErrorCode::ArityMismatch, "point has " +
                                              std::to_string(point.size()) +
                                              " coordinates, ring has " +
                                              std::to_string(ring_->arity()));
  Scalar sum(std::int64_t{0}, ring_->domain());
  for (const auto& t : terms_) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (Exponent k = 0; k < t.monomial[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty())
    throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  std::span<const Polynomial> images) const {
  if (images.size() != ring_->arity())
    throw Error(ErrorCode::ArityMismatch, "substitution arity mismatch");
  std::vector<std::vector<Polynomial>> powers(images.size());
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i) {
      Exponent e = t.monomial[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      term *= pw[e];
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::translate(std::span<const Scalar> point) const {
  if (point.size() != ring_->arity())
    throw Error(ErrorCode::ArityMismatch, "point arity mismatch");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < point.size(); ++i)
    images.push_back(variable(ring_, i) + constant(ring_, point[i]));
  return substitute(ring_, images);
}

Polynomial Polynomial::embed(const RingPtr& target,
                             std::span<const std::size_t> index_map) const {
  if (index_map.size() != ring_->arity())
    throw Error(ErrorCode::ArityMismatch, "embedding arity mismatch");
  if (!(ring_->domain() == target->domain()))
    throw Error(ErrorCode::RingMismatch, "embedding changes coefficient domain");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < index_map.size(); ++i)
      m[index_map[i]] += t.monomial[i];
    out.push_back({std::move(m), t.coefficient});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::specialize(std::size_t var, const Scalar& value,
                                  const RingPtr& smaller) const {
  if (smaller->arity() + 1 != ring_->arity())
    throw Error(ErrorCode::ArityMismatch, "specialization ring mismatch");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Scalar c = t.coefficient;
    for (Exponent k = 0; k < t.monomial[var]; ++k) c *= value;
    if (c.is_zero()) continue;
    Monomial m(smaller->arity());
    for (std::size_t i = 0, j = 0; i < ring_->arity(); ++i)
      if (i != var) m[j++] = t.monomial[i];
    out.push_back({std::move(m), std::move(c)});
  }
  return from_terms(smaller, std::move(out));
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return *this * leading_term(order).coefficient.inverse();
}

Polynomial Polynomial::reduce_mod(const RingPtr& modular_ring) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    out.push_back({t.monomial, Scalar(t.coefficient.rational(), modular_ring->domain())});
  return from_terms(modular_ring, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(*ring_ == *o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == o.terms_[i].monomial) ||
        !(terms_[i].coefficient == o.terms_[i].coefficient))
      return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coefficient.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (t.monomial.is_one()) {
      os << c;
    } else {
      if (c != "1") os << c << '*';
      os << monomial_to_string(t.monomial, *ring_);
    }
  }
  return os.str();
}

}  // namespace behrend
