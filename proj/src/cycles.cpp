#include "behrend/cycles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "behrend/error.hpp"
#include "behrend/monomial_ideal.hpp"

namespace behrend {

namespace {

std::int64_t sign_power(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string point_text(const Point& p) {
  std::vector<std::string> parts;
  for (const auto& c : p) parts.push_back(c.to_string());
  return "(" + join(parts, ", ") + ")";
}

std::vector<std::string> basis_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  StandardBasis gb = groebner_basis(ideal);
  for (const auto& g : gb.elements()) out.push_back(g.to_string());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- PrimeCycle

PrimeCycle PrimeCycle::point(RingPtr ring, Point p) {
  if (p.size() != ring->arity()) throw Error(ErrorCode::ArityMismatch, "point arity mismatch");
  PrimeCycle c;
  c.kind_ = Kind::Point;
  c.ring_ = std::move(ring);
  c.point_ = std::move(p);
  c.finish();
  return c;
}

PrimeCycle PrimeCycle::smooth_variety(Ideal ideal) {
  PrimeCycle c;
  c.kind_ = Kind::SmoothVariety;
  c.ring_ = ideal.ring();
  c.ideal_ = std::make_shared<const Ideal>(std::move(ideal));
  c.finish();
  return c;
}

PrimeCycle PrimeCycle::curve(Ideal ideal) {
  PrimeCycle c;
  c.kind_ = Kind::Curve;
  c.ring_ = ideal.ring();
  c.ideal_ = std::make_shared<const Ideal>(std::move(ideal));
  c.finish();
  return c;
}

PrimeCycle PrimeCycle::monomial_prime(RingPtr ring, std::vector<std::size_t> vanishing) {
  std::sort(vanishing.begin(), vanishing.end());
  vanishing.erase(std::unique(vanishing.begin(), vanishing.end()), vanishing.end());
  for (std::size_t v : vanishing)
    if (v >= ring->arity()) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  PrimeCycle c;
  c.kind_ = Kind::MonomialPrime;
  c.ring_ = std::move(ring);
  c.vars_ = std::move(vanishing);
  c.finish();
  return c;
}

PrimeCycle PrimeCycle::conormal_of(const PrimeCycle& base) {
  if (base.kind_ == Kind::ConormalOf)
    throw Error(ErrorCode::KindMismatch, "conormal of a conormal");
  PrimeCycle c;
  c.kind_ = Kind::ConormalOf;
  c.ring_ = base.ring_;
  c.base_ = std::make_shared<const PrimeCycle>(base);
  c.finish();
  return c;
}

std::size_t PrimeCycle::ambient_arity() const {
  return kind_ == Kind::ConormalOf ? 2 * ring_->arity() : ring_->arity();
}

int PrimeCycle::dimension() const { return dim_; }

std::string PrimeCycle::kind_name() const {
  switch (kind_) {
    case Kind::Point: return "point";
    case Kind::SmoothVariety: return "smooth-variety";
    case Kind::Curve: return "curve";
    case Kind::MonomialPrime: return "monomial-prime";
    case Kind::ConormalOf: return "conormal-of";
  }
  return "?";
}

std::string PrimeCycle::describe() const {
  switch (kind_) {
    case Kind::Point: return point_text(point_);
    case Kind::SmoothVariety:
    case Kind::Curve: {
      std::vector<std::string> gens;
      for (const auto& g : ideal_->generators()) gens.push_back(g.to_string());
      return "V(" + join(gens, ", ") + ")";
    }
    case Kind::MonomialPrime: {
      std::vector<std::string> names;
      for (std::size_t v : vars_) names.push_back(ring_->name(v));
      return "V(" + join(names, ", ") + ")";
    }
    case Kind::ConormalOf: return "N*" + base_->describe();
  }
  return "?";
}

void PrimeCycle::finish() {
  const int n = static_cast<int>(ring_->arity());
  std::ostringstream key;
  key << kind_name() << "[" << join(ring_->names(), ",") << "]";
  switch (kind_) {
    case Kind::Point:
      dim_ = 0;
      key << point_text(point_);
      break;
    case Kind::SmoothVariety:
      dim_ = krull_dimension(*ideal_);
      key << "{" << join(basis_strings(*ideal_), ";") << "}";
      break;
    case Kind::Curve:
      dim_ = 1;
      key << "{" << join(basis_strings(*ideal_), ";") << "}";
      break;
    case Kind::MonomialPrime: {
      dim_ = n - static_cast<int>(vars_.size());
      std::vector<std::string> idx;
      for (std::size_t v : vars_) idx.push_back(std::to_string(v));
      key << "{" << join(idx, ",") << "}";
      break;
    }
    case Kind::ConormalOf:
      dim_ = n;
      key << "(" << base_->key() << ")";
      break;
  }
  key_ = key.str();
}

// ---------------------------------------------------------------- Cycle

void Cycle::add(std::int64_t coefficient, const PrimeCycle& prime) {
  if (coefficient == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), prime.key(),
                             [](const CycleTerm& t, const std::string& k) { return t.prime.key() < k; });
  if (it != terms_.end() && it->prime.key() == prime.key()) {
    it->coefficient += coefficient;
    if (it->coefficient == 0) terms_.erase(it);
    return;
  }
  terms_.insert(it, CycleTerm{coefficient, prime});
}

Cycle& Cycle::operator+=(const Cycle& o) {
  for (const auto& t : o.terms_) add(t.coefficient, t.prime);
  return *this;
}

bool Cycle::operator==(const Cycle& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coefficient != o.terms_[i].coefficient ||
        terms_[i].prime.key() != o.terms_[i].prime.key())
      return false;
  return true;
}

std::string Cycle::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += t.coefficient < 0 ? " - " : " + ";
    else if (t.coefficient < 0) out += "-";
    std::int64_t a = t.coefficient < 0 ? -t.coefficient : t.coefficient;
    if (a != 1) out += std::to_string(a) + "*";
    out += "[" + t.prime.describe() + "]";
  }
  return out;
}

// ---------------------------------------------------------------- cone ideals

namespace {

std::string fresh_prefix(const Ring& ring) {
  std::string prefix = "p";
  for (;;) {
    bool clash = std::any_of(ring.names().begin(), ring.names().end(), [&](const std::string& n) {
      return n.rfind(prefix, 0) == 0;
    });
    if (!clash) return prefix;
    prefix += "p";
  }
}

bool is_monomial_ideal(const Ideal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return g.term_count() == 1; });
}

}  // namespace

bool is_conic(const Ideal& cone_ideal, std::size_t fiber_start) {
  const std::size_t n = cone_ideal.ring()->arity();
  if (fiber_start > n) throw Error(ErrorCode::IndexOutOfRange, "fiber block out of range");
  StandardBasis gb = groebner_basis(cone_ideal);
  for (const auto& g : gb.elements()) {
    std::optional<std::uint64_t> degree;
    for (const auto& t : g.terms()) {
      std::uint64_t d = 0;
      for (std::size_t v = fiber_start; v < n; ++v) d += t.monomial[v];
      if (degree && *degree != d) return false;
      degree = d;
    }
  }
  return true;
}

ConeIdealReport normal_cone_ideal(const Ideal& ideal) {
  const RingPtr& base = ideal.ring();
  const std::size_t n = base->arity();
  if (groebner_basis(ideal).is_unit()) throw Error(ErrorCode::UnitIdeal, "I is the unit ideal");
  const auto gens = ideal.generators();
  const std::size_t r = gens.size();

  std::string prefix = fresh_prefix(*base);
  std::vector<std::string> cone_names = base->names();
  for (std::size_t j = 0; j < r; ++j) cone_names.push_back(prefix + std::to_string(j + 1));
  RingPtr cone_ring = Ring::make(cone_names, base->domain());

  // Q[t, x..., p...] with t eliminated
  std::vector<std::string> rees_names{"t"};
  for (const auto& nm : cone_names) rees_names.push_back(nm == "t" ? "t_" : nm);
  if (std::count(rees_names.begin(), rees_names.end(), "t") > 1) rees_names[0] = "t__";
  RingPtr rees = Ring::make(rees_names, base->domain());
  std::vector<std::size_t> base_into(n);
  for (std::size_t i = 0; i < n; ++i) base_into[i] = i + 1;
  Polynomial t = Polynomial::variable(rees, 0);
  std::vector<Polynomial> graph;
  for (std::size_t j = 0; j < r; ++j)
    graph.push_back(Polynomial::variable(rees, n + 1 + j) - t * gens[j].embed(rees, base_into));
  std::vector<std::size_t> drop{0};
  Ideal kernel = eliminate(Ideal(rees, graph), drop);
  // eliminate() returns the ideal over the kept names in order: rename
  std::vector<Polynomial> cone_gens;
  for (const auto& g : kernel.generators()) {
    std::vector<Term> terms(g.terms().begin(), g.terms().end());
    cone_gens.push_back(Polynomial::from_terms(cone_ring, std::move(terms)));
  }
  std::vector<std::size_t> into_cone(n);
  std::iota(into_cone.begin(), into_cone.end(), 0);
  for (const auto& g : gens) cone_gens.push_back(g.embed(cone_ring, into_cone));

  ConeIdealReport report;
  report.ring = cone_ring;
  report.base_arity = n;
  StandardBasis gb = groebner_basis(Ideal(cone_ring, cone_gens));
  report.ideal = Ideal(cone_ring, {gb.elements().begin(), gb.elements().end()});
  report.dimension = krull_dimension(report.ideal);
  report.conic = is_conic(report.ideal, n);
  if (is_monomial_ideal(ideal)) report.components = monomial_cone_components(ideal);
  return report;
}

// ---------------------------------------------------------------- toric components

namespace {

using IntVec = std::vector<mpz_class>;

mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  // Bareiss fraction-free elimination
  const std::size_t k = m.size();
  if (k == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (m[i][i] == 0) {
      std::size_t s = i + 1;
      while (s < k && m[s][i] == 0) ++s;
      if (s == k) return 0;
      std::swap(m[i], m[s]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r)
      for (std::size_t c = i + 1; c < k; ++c)
        m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
    prev = m[i][i];
  }
  return sign * m[k - 1][k - 1];
}

/// gcd of the maximal minors of the rows (each of length cols), rows >= cols - 1.
mpz_class minor_gcd(const std::vector<IntVec>& rows, std::size_t size) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  mpz_class g = 0;
  std::vector<std::size_t> rsel(size), csel(size);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t at, std::size_t from) {
    if (at == size) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t r = from; r < rows.size(); ++r) {
      rsel[at] = r;
      pick_rows(at + 1, r + 1);
    }
  };
  pick_cols = [&](std::size_t at, std::size_t from) {
    if (at == size) {
      std::vector<std::vector<mpz_class>> m(size, std::vector<mpz_class>(size));
      for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b) m[a][b] = rows[rsel[a]][csel[b]];
      mpz_class d = determinant(std::move(m));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t c = from; c < cols; ++c) {
      csel[at] = c;
      pick_cols(at + 1, c + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

/// Normal to n independent vectors in Z^(n+1), via signed maximal minors.
IntVec normal_vector(const std::vector<IntVec>& rows) {
  const std::size_t dim = rows.front().size();
  IntVec u(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<std::vector<mpz_class>> m;
    for (const auto& r : rows) {
      std::vector<mpz_class> row;
      for (std::size_t c = 0; c < dim; ++c)
        if (c != k) row.push_back(r[c]);
      m.push_back(std::move(row));
    }
    mpz_class d = determinant(std::move(m));
    u[k] = (k % 2 == 0) ? d : mpz_class(-d);
  }
  mpz_class g = 0;
  for (const auto& x : u) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return {};
  for (auto& x : u) x /= g;
  return u;
}

mpz_class dot(const IntVec& a, const IntVec& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<ConeComponent> monomial_cone_components(const Ideal& ideal) {
  if (!is_monomial_ideal(ideal))
    throw Error(ErrorCode::UnsupportedPresentation, "generators are not monomials");
  const std::size_t n = ideal.ring()->arity();
  const auto gens = ideal.generators();
  for (const auto& g : gens)
    if (g.terms()[0].monomial.is_one()) throw Error(ErrorCode::UnitIdeal, "I is the unit ideal");

  // cone generators in Z^(n+1): e_i, (alpha_j, 1), w = (0, ..., 0, -1)
  std::vector<IntVec> coords, fibers;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n + 1, 0);
    e[i] = 1;
    coords.push_back(e);
  }
  for (const auto& g : gens) {
    IntVec a(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) a[i] = g.terms()[0].monomial[i];
    a[n] = 1;
    fibers.push_back(a);
  }
  IntVec w(n + 1, 0);
  w[n] = -1;
  std::vector<IntVec> all = coords;
  for (const auto& f : fibers)
    if (std::find(all.begin(), all.end(), f) == all.end()) all.push_back(f);
  all.push_back(w);

  std::set<IntVec> facets;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t at, std::size_t from) {
    if (at == n) {
      std::vector<IntVec> rows;
      for (std::size_t k : pick) rows.push_back(all[k]);
      IntVec u = normal_vector(rows);
      if (u.empty()) return;
      bool pos = true, neg = true;
      for (const auto& g : all) {
        int s = sgn(dot(u, g));
        if (s < 0) pos = false;
        if (s > 0) neg = false;
      }
      if (!pos && !neg) return;
      if (!pos)
        for (auto& x : u) x = -x;
      if (u[n] < 0) facets.insert(u);
      return;
    }
    for (std::size_t k = from; k < all.size(); ++k) {
      pick[at] = k;
      rec(at + 1, k + 1);
    }
  };
  rec(0, 0);

  std::vector<ConeComponent> out;
  for (const auto& u : facets) {
    const mpz_class d = -u[n];
    ConeComponent comp;
    std::vector<IntVec> on;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] > 0)
        comp.base_vanishing.push_back(i);
      else
        on.push_back(coords[i]);
    }
    for (std::size_t j = 0; j < fibers.size(); ++j) {
      if (dot(u, fibers[j]) > 0)
        comp.fiber_vanishing.push_back(j);
      else
        on.push_back(fibers[j]);
    }
    mpz_class index = minor_gcd(on, n);
    mpz_class mult = d * index;
    comp.multiplicity = mult.get_ui();
    comp.projection_dimension = static_cast<int>(n - comp.base_vanishing.size());
    comp.linear = on.size() == n;
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const ConeComponent& a, const ConeComponent& b) {
    return std::tie(a.base_vanishing, a.fiber_vanishing) <
           std::tie(b.base_vanishing, b.fiber_vanishing);
  });
  return out;
}

// ---------------------------------------------------------------- rational points

namespace {

std::vector<mpz_class> prime_factors(mpz_class a) {
  std::vector<mpz_class> out;
  if (a < 0) a = -a;
  for (unsigned long p = 2; p <= 1000000 && a > 1; ++p) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(a.get_mpz_t(), p)) a /= p;
    }
    if (mpz_class(p) * p > a) break;
  }
  if (a > 1) {
    if (mpz_probab_prime_p(a.get_mpz_t(), 30) == 0)
      throw Error(ErrorCode::TooLarge, "coefficient too large to factor for root finding");
    out.push_back(a);
  }
  return out;
}

std::vector<mpz_class> divisors(mpz_class a) {
  if (a < 0) a = -a;
  std::vector<mpz_class> out{1};
  for (const auto& p : prime_factors(a)) {
    mpz_class rest = a;
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

/// Distinct rational roots of a polynomial in one variable (coefficients by
/// ascending degree).
std::vector<mpq_class> rational_roots(std::vector<mpq_class> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::vector<mpq_class> roots;
  if (coeffs.size() <= 1) return roots;
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : coeffs) z.push_back(mpz_class(c * den));
  std::size_t shift = 0;
  while (z[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(shift));
  if (z.size() <= 1) return roots;
  auto value = [&](const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t k = z.size(); k-- > 0;) acc = acc * x + mpq_class(z[k]);
    return acc;
  };
  std::set<mpq_class> found;
  for (const auto& p : divisors(z.front()))
    for (const auto& q : divisors(z.back()))
      for (int s : {1, -1}) {
        mpq_class x(s * p, q);
        x.canonicalize();
        if (!found.count(x) && value(x) == 0) found.insert(x);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Point> points_rec(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->arity();
  if (n == 0) return ideal.is_zero() ? std::vector<Point>{Point{}} : std::vector<Point>{};
  StandardBasis gb = groebner_basis(ideal, MonomialOrder::lex());
  if (gb.is_unit()) return {};
  const Polynomial* uni = nullptr;
  for (const auto& g : gb.elements()) {
    bool only_last = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (t.monomial[i]) return false;
      return true;
    });
    if (only_last) {
      uni = &g;
      break;
    }
  }
  if (!uni) throw Error(ErrorCode::InvalidArgument, "ideal is not zero-dimensional");
  std::vector<mpq_class> coeffs(uni->degree_in(n - 1) + 1, 0);
  for (const auto& t : uni->terms()) coeffs[t.monomial[n - 1]] = t.coefficient.rational();
  std::vector<std::size_t> drop{n - 1};
  RingPtr smaller = subring_without(ring, drop);
  std::vector<Point> out;
  for (const auto& root : rational_roots(coeffs)) {
    Scalar r(root);
    std::vector<Polynomial> spec;
    for (const auto& g : gb.elements()) spec.push_back(g.specialize(n - 1, r, smaller));
    for (auto p : points_rec(Ideal(smaller, std::move(spec)))) {
      p.push_back(r);
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

std::vector<Point> rational_points(const Ideal& ideal) {
  if (!ideal.ring()->domain().is_rational())
    throw Error(ErrorCode::InvalidArgument, "point splitting needs rational coefficients");
  Colength total = colength(ideal, MonomialOrder::degrevlex());
  if (total.is_infinite()) throw Error(ErrorCode::InvalidArgument, "ideal is not zero-dimensional");
  std::vector<Point> pts = points_rec(ideal);
  std::uint64_t local_sum = 0;
  for (const auto& p : pts)
    local_sum += *colength(ideal.translate(p), MonomialOrder::local_degrevlex()).value;
  if (local_sum != *total.value)
    throw Error(ErrorCode::IrrationalPoint,
                "rational points carry " + std::to_string(local_sum) + " of the total length " +
                    std::to_string(*total.value) + "; the rest sits at non-rational points");
  return pts;
}

// ---------------------------------------------------------------- cycles

std::string presentation_class_name(PresentationClass c) {
  switch (c) {
    case PresentationClass::Smooth: return "smooth";
    case PresentationClass::RegularSequence: return "regular-sequence";
    case PresentationClass::Monomial: return "monomial";
  }
  return "?";
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Polynomial det_poly(std::vector<std::vector<Polynomial>> m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  Polynomial acc(m[0][0].ring());
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * det_poly(std::move(sub));
    if (c % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/// X = Z(I) is smooth of dimension d everywhere: I plus the (n-d)-minors of
/// the Jacobian matrix generate the unit ideal.
void require_smooth(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->arity();
  int d = krull_dimension(ideal);
  if (d < 0) throw Error(ErrorCode::UnitIdeal, "X is empty");
  const std::size_t c = n - static_cast<std::size_t>(d);
  if (c == 0) return;
  const auto gens = ideal.generators();
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(g.derivative(j));
    jac.push_back(std::move(row));
  }
  std::vector<Polynomial> sing(gens.begin(), gens.end());
  for (const auto& rows : subsets(gens.size(), c))
    for (const auto& cols : subsets(n, c)) {
      std::vector<std::vector<Polynomial>> m;
      for (std::size_t r : rows) {
        std::vector<Polynomial> row;
        for (std::size_t cc : cols) row.push_back(jac[r][cc]);
        m.push_back(std::move(row));
      }
      sing.push_back(det_poly(std::move(m)));
    }
  if (!groebner_basis(Ideal(ring, sing)).is_unit())
    throw Error(ErrorCode::UnsupportedPresentation,
                "declared smooth, but the Jacobian criterion finds singular points");
}

}  // namespace

Cycle distinguished_cycle(const Ideal& ideal, PresentationClass cls) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->arity();
  Cycle out;
  switch (cls) {
    case PresentationClass::Smooth: {
      require_smooth(ideal);
      PrimeCycle x = PrimeCycle::smooth_variety(ideal);
      out.add(sign_power(x.dimension()), x);
      return out;
    }
    case PresentationClass::RegularSequence: {
      if (ideal.generators().size() != n)
        throw Error(ErrorCode::UnsupportedPresentation,
                    "a regular sequence here has exactly one generator per variable");
      if (groebner_basis(ideal).is_unit()) throw Error(ErrorCode::UnitIdeal, "X is empty");
      if (krull_dimension(ideal) != 0)
        throw Error(ErrorCode::UnsupportedPresentation, "Z(I) is not zero-dimensional");
      for (const auto& p : rational_points(ideal)) {
        auto mu = colength(ideal.translate(p), MonomialOrder::local_degrevlex());
        out.add(static_cast<std::int64_t>(*mu.value), PrimeCycle::point(ring, p));
      }
      return out;
    }
    case PresentationClass::Monomial: {
      for (const auto& comp : monomial_cone_components(ideal))
        out.add(sign_power(comp.projection_dimension) * static_cast<std::int64_t>(comp.multiplicity),
                PrimeCycle::monomial_prime(ring, comp.base_vanishing));
      return out;
    }
  }
  return out;
}

std::int64_t euler_obstruction(const Cycle& c, std::span<const Scalar> point) {
  std::int64_t total = 0;
  for (const auto& t : c.terms()) {
    const PrimeCycle& v = t.prime;
    if (point.size() != v.ring()->arity())
      throw Error(ErrorCode::ArityMismatch, "point arity mismatch");
    std::int64_t eu = 0;
    switch (v.kind()) {
      case PrimeCycle::Kind::Point:
        eu = std::equal(point.begin(), point.end(), v.coordinates().begin()) ? 1 : 0;
        break;
      case PrimeCycle::Kind::MonomialPrime:
        eu = std::all_of(v.vanishing().begin(), v.vanishing().end(),
                         [&](std::size_t i) { return point[i].is_zero(); })
                 ? 1
                 : 0;
        break;
      case PrimeCycle::Kind::SmoothVariety:
        if (v.ideal().vanishes_at(point)) {
          if (!is_smooth_at(v.ideal(), point).smooth)
            throw Error(ErrorCode::UnsupportedCycleKind,
                        "smooth-variety cycle is singular at the point");
          eu = 1;
        }
        break;
      case PrimeCycle::Kind::Curve:
        if (v.ideal().vanishes_at(point))
          eu = static_cast<std::int64_t>(hs_multiplicity(v.ideal().translate(point)));
        break;
      case PrimeCycle::Kind::ConormalOf:
        throw Error(ErrorCode::UnsupportedCycleKind, "Euler obstruction of a conormal cycle");
    }
    total += t.coefficient * eu;
  }
  return total;
}

std::int64_t nu_from_cycle(const Ideal& ideal, PresentationClass cls,
                           std::span<const Scalar> point) {
  if (point.size() != ideal.ring()->arity())
    throw Error(ErrorCode::ArityMismatch, "point arity mismatch");
  if (!ideal.vanishes_at(point)) throw Error(ErrorCode::PointNotOnX, "the point is not on X");
  return euler_obstruction(distinguished_cycle(ideal, cls), point);
}

Cycle conormal_L(const Cycle& c) {
  Cycle out;
  for (const auto& t : c.terms()) {
    if (t.prime.kind() == PrimeCycle::Kind::ConormalOf)
      throw Error(ErrorCode::KindMismatch, "L expects base cycles");
    out.add(sign_power(t.prime.dimension()) * t.coefficient, PrimeCycle::conormal_of(t.prime));
  }
  return out;
}

Cycle projection_pi(const Cycle& c) {
  Cycle out;
  for (const auto& t : c.terms()) {
    if (t.prime.kind() != PrimeCycle::Kind::ConormalOf)
      throw Error(ErrorCode::KindMismatch, "pi expects conormal cycles");
    out.add(sign_power(t.prime.base().dimension()) * t.coefficient, t.prime.base());
  }
  return out;
}

}  // namespace behrend
