#include "behrend/arcs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "behrend/error.hpp"

namespace behrend {

// ---------------------------------------------------------------- Series

Series::Series(RingPtr params, std::size_t order)
    : params_(std::move(params)), coeffs_(order + 1, Polynomial(params_)) {}

Series Series::constant(RingPtr params, std::size_t order, const Polynomial& c) {
  Series s(std::move(params), order);
  s[0] = c;
  return s;
}

Series& Series::operator+=(const Series& o) {
  if (o.order() != order()) throw Error(ErrorCode::InvalidArgument, "series orders differ");
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] += o.coeffs_[p];
  return *this;
}

Series Series::operator*(const Series& o) const {
  if (o.order() != order()) throw Error(ErrorCode::InvalidArgument, "series orders differ");
  Series out(params_, order());
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; a + b < coeffs_.size(); ++b)
      if (!o.coeffs_[b].is_zero()) out.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  return out;
}

Series Series::operator*(const Polynomial& c) const {
  Series out(params_, order());
  for (std::size_t p = 0; p < coeffs_.size(); ++p) out.coeffs_[p] = coeffs_[p] * c;
  return out;
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t p = 0; p < coeffs_.size(); ++p)
    if (!coeffs_[p].is_zero()) return p;
  return std::nullopt;
}

// ---------------------------------------------------------------- ArcSeries

ArcSeries::ArcSeries(RingPtr params, std::vector<Series> components)
    : params_(std::move(params)), order_(0), components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorCode::InvalidArgument, "an arc needs coordinates");
  order_ = components_.front().order();
  for (const auto& c : components_) {
    require_same_ring(params_, c.params());
    if (c.order() != order_)
      throw Error(ErrorCode::InvalidArgument, "arc components truncated at different orders");
  }
}

ArcSeries ArcSeries::from_polynomials(const RingPtr& params, const RingPtr& with_t,
                                      std::span<const Polynomial> components, std::size_t order) {
  const std::size_t k = params->arity();
  if (with_t->arity() != k + 1)
    throw Error(ErrorCode::ArityMismatch, "arc ring must be the parameters plus t");
  std::vector<Series> out;
  for (const auto& c : components) {
    require_same_ring(with_t, c.ring());
    std::vector<std::vector<Term>> by_power(order + 1);
    for (const auto& term : c.terms()) {
      Exponent p = term.monomial[k];
      if (p > order) continue;
      Monomial m(k);
      for (std::size_t j = 0; j < k; ++j) m[j] = term.monomial[j];
      by_power[p].push_back({std::move(m), term.coefficient});
    }
    Series s(params, order);
    for (std::size_t p = 0; p <= order; ++p)
      s[p] = Polynomial::from_terms(params, std::move(by_power[p]));
    out.push_back(std::move(s));
  }
  return ArcSeries(params, std::move(out));
}

std::string ArcSeries::to_string(const Ring& coordinates) const {
  std::ostringstream os;
  os << "order: " << order_ << "\n";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    os << coordinates.name(i) << " =";
    bool any = false;
    for (std::size_t p = 0; p <= order_; ++p) {
      const Polynomial& c = components_[i][p];
      if (c.is_zero()) continue;
      os << (any ? " + " : " ") << "(" << c.to_string() << ")";
      if (p == 1) os << "*t";
      if (p > 1) os << "*t^" << p;
      any = true;
    }
    if (!any) os << " 0";
    os << "\n";
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> identifiers(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    char ch = text[i];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.emplace_back(text.substr(i, j - i));
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace

ArcSeries parse_arc(std::string_view text, const RingPtr& coordinates) {
  std::size_t order = 8;
  std::vector<std::optional<std::string>> rhs(coordinates->arity());
  std::vector<std::string> params;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(offset, end - offset));
    std::size_t line_start = offset;
    offset = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("order:")) {
      std::string_view num = trim(line.substr(6));
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), order);
      if (ec != std::errc() || ptr != num.data() + num.size())
        throw SyntaxError(line_start, "bad order header");
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw SyntaxError(line_start, "expected 'name = series'");
    std::string name(trim(line.substr(0, eq)));
    auto idx = coordinates->index_of(name);
    if (!idx) throw Error(ErrorCode::UnknownVariable, name);
    if (rhs[*idx]) throw Error(ErrorCode::InvalidArgument, "coordinate " + name + " given twice");
    std::string body(line.substr(eq + 1));
    for (const auto& id : identifiers(body)) {
      if (id == "t") continue;
      if (coordinates->index_of(id))
        throw Error(ErrorCode::InvalidArgument,
                    "arc parameter '" + id + "' collides with a coordinate name");
      if (std::find(params.begin(), params.end(), id) == params.end()) params.push_back(id);
    }
    rhs[*idx] = std::move(body);
  }
  for (std::size_t i = 0; i < rhs.size(); ++i)
    if (!rhs[i])
      throw Error(ErrorCode::InvalidArgument, "arc is missing coordinate " + coordinates->name(i));
  RingPtr param_ring = Ring::make(params, coordinates->domain());
  std::vector<std::string> with_t_names = params;
  with_t_names.push_back("t");
  RingPtr with_t = Ring::make(with_t_names, coordinates->domain());
  std::vector<Polynomial> comps;
  for (const auto& r : rhs) comps.push_back(parse_polynomial(*r, with_t));
  return ArcSeries::from_polynomials(param_ring, with_t, comps, order);
}

Series compose_along_arc(const Polynomial& f, const ArcSeries& gamma) {
  const std::size_t n = f.ring()->arity();
  if (n != gamma.arity())
    throw Error(ErrorCode::ArityMismatch, "arc has " + std::to_string(gamma.arity()) +
                                              " components, polynomial has arity " +
                                              std::to_string(n));
  const RingPtr& params = gamma.params();
  const std::size_t N = gamma.order();
  std::vector<std::vector<Series>> powers(n);
  Series result(params, N);
  for (const auto& term : f.terms()) {
    Series s = Series::constant(params, N, Polynomial::constant(params, term.coefficient));
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e = term.monomial[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Series::constant(params, N, Polynomial::constant(params, 1)));
      while (pw.size() <= e) pw.push_back(pw.back() * gamma[i]);
      s = s * pw[e];
    }
    result += s;
  }
  return result;
}

std::optional<std::size_t> arc_vanishing_order(const OneForm& omega, const ArcSeries& gamma) {
  std::optional<std::size_t> m;
  for (const auto& f : omega.components()) {
    auto v = compose_along_arc(f, gamma).valuation();
    if (v && (!m || *v < *m)) m = v;
  }
  return m;
}

// ---------------------------------------------------------------- ParameterForm

ParameterForm::ParameterForm(RingPtr params, unsigned degree)
    : params_(std::move(params)), degree_(degree) {
  if (degree_ != 1 && degree_ != 2)
    throw Error(ErrorCode::InvalidArgument, "parameter forms have degree 1 or 2");
}

void ParameterForm::add(std::vector<std::size_t> key, const Polynomial& c) {
  if (c.is_zero()) return;
  Polynomial coef = c;
  if (key.size() == 2) {
    if (key[0] == key[1]) return;
    if (key[0] > key[1]) {
      std::swap(key[0], key[1]);
      coef = -coef;
    }
  }
  auto [it, fresh] = terms_.emplace(key, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParameterForm ParameterForm::differential(const Polynomial& f) {
  ParameterForm out(f.ring(), 1);
  for (std::size_t j = 0; j < f.ring()->arity(); ++j) out.add({j}, f.derivative(j));
  return out;
}

ParameterForm ParameterForm::wedge(const ParameterForm& o) const {
  if (degree_ != 1 || o.degree_ != 1)
    throw Error(ErrorCode::InvalidArgument, "only 1-forms wedge to 2-forms here");
  require_same_ring(params_, o.params_);
  ParameterForm out(params_, 2);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) out.add({a[0], b[0]}, ca * cb);
  return out;
}

ParameterForm ParameterForm::exterior_derivative() const {
  if (degree_ != 1) throw Error(ErrorCode::InvalidArgument, "d of a 2-form is not needed");
  ParameterForm out(params_, 2);
  for (const auto& [key, c] : terms_)
    for (std::size_t j = 0; j < params_->arity(); ++j) out.add({j, key[0]}, c.derivative(j));
  return out;
}

ParameterForm& ParameterForm::operator+=(const ParameterForm& o) {
  require_same_ring(params_, o.params_);
  if (degree_ != o.degree_) throw Error(ErrorCode::InvalidArgument, "form degrees differ");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

ParameterForm& ParameterForm::operator-=(const ParameterForm& o) {
  return *this += o * Scalar(std::int64_t{-1}, params_->domain());
}

ParameterForm ParameterForm::operator*(const Polynomial& c) const {
  ParameterForm out(params_, degree_);
  for (const auto& [k, v] : terms_) out.add(k, v * c);
  return out;
}

ParameterForm ParameterForm::operator*(const Scalar& c) const {
  ParameterForm out(params_, degree_);
  for (const auto& [k, v] : terms_) out.add(k, v * c);
  return out;
}

bool ParameterForm::operator==(const ParameterForm& o) const {
  return degree_ == o.degree_ && *params_ == *o.params_ && terms_ == o.terms_;
}

std::string ParameterForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string basis;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) basis += "∧";
      basis += "d" + params_->name(key[i]);
    }
    if (c == Polynomial::constant(params_, 1))
      out += basis;
    else
      out += "(" + c.to_string() + ")*" + basis;
  }
  return out;
}

// ---------------------------------------------------------------- arc identities

namespace {

mpq_class factorial(std::size_t p) {
  mpz_class r = 1;
  for (std::size_t k = 2; k <= p; ++k) r *= static_cast<unsigned long>(k);
  return mpq_class(r);
}

mpq_class binomial(std::size_t p, std::size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), p, k);
  return mpq_class(r);
}

Scalar as_scalar(const mpq_class& q, const RingPtr& ring) { return Scalar(q, ring->domain()); }

std::vector<Series> compositions(const OneForm& omega, const ArcSeries& gamma) {
  std::vector<Series> out;
  for (const auto& f : omega.components()) out.push_back(compose_along_arc(f, gamma));
  return out;
}

void require_order(const OneForm& omega, const ArcSeries& gamma, std::size_t m) {
  if (omega.ring()->arity() != gamma.arity())
    throw Error(ErrorCode::ArityMismatch, "arc and 1-form live on different spaces");
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  if (m > gamma.order())
    throw Error(ErrorCode::OrderTooLow, "arc truncated at order " +
                                            std::to_string(gamma.order()) + " < m = " +
                                            std::to_string(m));
  auto v = arc_vanishing_order(omega, gamma);
  if (v && *v < m)
    throw Error(ErrorCode::OrderTooLow, "certified vanishing order " + std::to_string(*v) +
                                            " is below m = " + std::to_string(m));
}

}  // namespace

ParameterForm lagrangian_obstruction(const OneForm& omega, const ArcSeries& gamma, std::size_t m) {
  require_order(omega, gamma, m);
  auto comp = compositions(omega, gamma);
  ParameterForm out(gamma.params(), 2);
  for (std::size_t i = 0; i < gamma.arity(); ++i)
    out += ParameterForm::differential(gamma.coefficient(i, 0))
               .wedge(ParameterForm::differential(comp[i][m]));
  return out;
}

ParameterForm lagrangian_obstruction_via_derivatives(const OneForm& omega,
                                                    const ArcSeries& gamma, std::size_t m) {
  require_order(omega, gamma, m);
  auto comp = compositions(omega, gamma);
  const RingPtr& params = gamma.params();
  ParameterForm sum(params, 1);
  for (std::size_t i = 0; i < gamma.arity(); ++i) {
    Polynomial F = comp[i][m] * as_scalar(factorial(m), params);
    ParameterForm dc = ParameterForm::differential(gamma.coefficient(i, 0));
    sum += dc * F;
  }
  return sum.exterior_derivative() * as_scalar(-1 / factorial(m), params);
}

ParameterForm pullback_dt_coefficient(const OneForm& omega, const ArcSeries& gamma,
                                      std::size_t p) {
  const std::size_t n = omega.ring()->arity();
  if (n != gamma.arity()) throw Error(ErrorCode::ArityMismatch, "arc and 1-form differ in arity");
  if (p + 1 > gamma.order())
    throw Error(ErrorCode::OrderTooLow, "need the arc through order p + 1");
  const RingPtr& params = gamma.params();
  // dgamma_a = alpha_a(t) + A_a(t) dt
  auto alpha = [&](std::size_t a, std::size_t s) {
    return ParameterForm::differential(gamma.coefficient(a, s));
  };
  auto A = [&](std::size_t a, std::size_t s) {
    return gamma.coefficient(a, s + 1) * Scalar(std::int64_t(s + 1), params->domain());
  };
  ParameterForm out(params, 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Polynomial h = omega[b].derivative(a) - omega[a].derivative(b);
      if (h.is_zero()) continue;
      Series H = compose_along_arc(h, gamma);
      for (std::size_t r = 0; r <= p; ++r) {
        if (H[r].is_zero()) continue;
        // (A_b alpha_a - A_a alpha_b) at t^(p - r)
        ParameterForm wedge_dt(params, 1);
        std::size_t s = p - r;
        for (std::size_t u = 0; u <= s; ++u) {
          wedge_dt += alpha(a, s - u) * A(b, u);
          wedge_dt -= alpha(b, s - u) * A(a, u);
        }
        out += wedge_dt * H[r];
      }
    }
  return out;
}

ParameterForm pullback_dt_coefficient_binomial(const OneForm& omega, const ArcSeries& gamma,
                                               std::size_t p) {
  if (omega.ring()->arity() != gamma.arity())
    throw Error(ErrorCode::ArityMismatch, "arc and 1-form differ in arity");
  if (p + 1 > gamma.order())
    throw Error(ErrorCode::OrderTooLow, "need the arc through order p + 1");
  const RingPtr& params = gamma.params();
  auto comp = compositions(omega, gamma);
  auto c = [&](std::size_t i, std::size_t q) {
    return gamma.coefficient(i, q) * as_scalar(factorial(q), params);
  };
  auto F = [&](std::size_t i, std::size_t q) { return comp[i][q] * as_scalar(factorial(q), params); };
  ParameterForm out(params, 1);
  for (std::size_t k = 0; k <= p; ++k) {
    Scalar w = as_scalar(binomial(p, k), params);
    for (std::size_t i = 0; i < gamma.arity(); ++i) {
      out += ParameterForm::differential(F(i, k)) * (c(i, p + 1 - k) * w);
      out -= ParameterForm::differential(c(i, p - k)) * (F(i, k + 1) * w);
    }
  }
  return out * as_scalar(1 / factorial(p), params);
}

}  // namespace behrend
