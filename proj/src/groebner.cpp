#include "behrend/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "behrend/error.hpp"
#include "behrend/monomial_ideal.hpp"

namespace behrend {

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::parse(const RingPtr& ring, std::span<const std::string> texts) {
  std::vector<Polynomial> gens;
  for (const auto& t : texts) gens.push_back(parse_polynomial(t, ring));
  return Ideal(ring, std::move(gens));
}

Ideal Ideal::operator+(const Ideal& o) const {
  require_same_ring(ring_, o.ring_);
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), o.generators_.begin(), o.generators_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::embed(const RingPtr& target, std::span<const std::size_t> index_map) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(g.embed(target, index_map));
  return Ideal(target, std::move(gens));
}

Ideal Ideal::translate(std::span<const Scalar> point) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(g.translate(point));
  return Ideal(ring_, std::move(gens));
}

bool Ideal::vanishes_at(std::span<const Scalar> point) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Polynomial& g) { return g.evaluate(point).is_zero(); });
}

// ---------------------------------------------------------------- StandardBasis

StandardBasis::StandardBasis(Ideal source, MonomialOrder order,
                             std::vector<Polynomial> elements)
    : source_(std::move(source)), order_(order), elements_(std::move(elements)) {}

std::vector<Monomial> StandardBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& e : elements_) out.push_back(e.leading_term(order_).monomial);
  return out;
}

bool StandardBasis::is_unit() const {
  return std::any_of(elements_.begin(), elements_.end(), [&](const Polynomial& p) {
    return p.leading_term(order_).monomial.is_one();
  });
}

// ---------------------------------------------------------------- engine

namespace {

using Work = std::vector<Term>;  // sorted descending under the working order

struct Element {
  Work poly;
  std::vector<Work> rep;  // cofactors over the input generators, when tracked
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t degree;
};

class Engine {
 public:
  Engine(RingPtr ring, MonomialOrder order, bool track, std::size_t n_inputs)
      : ring_(std::move(ring)), order_(order), track_(track), n_inputs_(n_inputs) {}

  Work to_work(const Polynomial& p) const {
    Work w(p.terms().begin(), p.terms().end());
    std::sort(w.begin(), w.end(), [&](const Term& a, const Term& b) {
      return order_.greater(a.monomial, b.monomial);
    });
    return w;
  }

  Polynomial to_poly(const Work& w) const { return Polynomial::from_terms(ring_, w); }

  // a - c*m*b for sorted a (from index `from` on) and b
  Work sub_mul(const Work& a, std::size_t from, const Scalar& c, const Monomial& m,
               const Work& b) const {
    Work out;
    out.reserve(a.size() - from + b.size());
    std::size_t i = from, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Monomial mb = m * b[j].monomial;
      int cmp = i == a.size() ? -1 : order_.compare(a[i].monomial, mb);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({std::move(mb), -(c * b[j].coefficient)});
        ++j;
      } else {
        Scalar s = a[i].coefficient - c * b[j].coefficient;
        if (!s.is_zero()) out.push_back({std::move(mb), std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void sub_mul_rep(std::vector<Work>& rep, const Scalar& c, const Monomial& m,
                   const std::vector<Work>& other) const {
    for (std::size_t k = 0; k < rep.size(); ++k) rep[k] = sub_mul(rep[k], 0, c, m, other[k]);
  }

  void scale(Work& w, const Scalar& c) const {
    for (auto& t : w) t.coefficient *= c;
  }

  void make_monic(Element& e) const {
    if (e.poly.empty()) return;
    Scalar inv = e.poly.front().coefficient.inverse();
    scale(e.poly, inv);
    for (auto& r : e.rep) scale(r, inv);
  }

  static std::uint64_t ecart(const Work& w) {
    std::uint64_t top = 0;
    for (const auto& t : w) top = std::max(top, t.monomial.degree());
    return top - w.front().monomial.degree();
  }

  Element spoly(const Element& f, const Element& g) const {
    const Monomial& lf = f.poly.front().monomial;
    const Monomial& lg = g.poly.front().monomial;
    Monomial l = lf.lcm(lg);
    Monomial mf = lf.quotient_of(l), mg = lg.quotient_of(l);
    Scalar one(std::int64_t{1}, ring_->domain());
    Element s;
    Work fm = sub_mul(Work{}, 0, -one, mf, f.poly);
    s.poly = sub_mul(fm, 0, one, mg, g.poly);
    if (track_) {
      s.rep.assign(n_inputs_, Work{});
      sub_mul_rep(s.rep, -one, mf, f.rep);
      sub_mul_rep(s.rep, one, mg, g.rep);
    }
    return s;
  }

  // Global division. full: reduce every term; otherwise stop once the leading
  // term is irreducible.
  Element reduce(Element h, const std::vector<Element>& basis, bool full) const {
    Work remainder;
    std::size_t pos = 0;
    while (pos < h.poly.size()) {
      const Term& lead = h.poly[pos];
      const Element* red = nullptr;
      for (const auto& g : basis)
        if (!g.poly.empty() && g.poly.front().monomial.divides(lead.monomial)) {
          red = &g;
          break;
        }
      if (!red) {
        if (!full) break;
        remainder.push_back(lead);
        ++pos;
        continue;
      }
      Scalar c = lead.coefficient / red->poly.front().coefficient;
      Monomial m = red->poly.front().monomial.quotient_of(lead.monomial);
      h.poly = sub_mul(h.poly, pos, c, m, red->poly);
      pos = 0;
      if (track_) sub_mul_rep(h.rep, c, m, red->rep);
    }
    if (full) {
      remainder.insert(remainder.end(), h.poly.begin() + pos, h.poly.end());
      h.poly = std::move(remainder);
    } else if (pos > 0) {
      remainder.insert(remainder.end(), h.poly.begin() + pos, h.poly.end());
      h.poly = std::move(remainder);
    }
    return h;
  }

  // Mora's normal form: reducer of minimal ecart; a reducer of larger ecart
  // than the current remainder adds the remainder to the reducer set.
  Work mora(Work h, const std::vector<Element>& basis) const {
    std::vector<Work> extra;
    while (!h.empty()) {
      const Work* best = nullptr;
      std::uint64_t best_ecart = 0;
      auto consider = [&](const Work& g) {
        if (g.empty() || !g.front().monomial.divides(h.front().monomial)) return;
        std::uint64_t e = ecart(g);
        if (!best || e < best_ecart) {
          best = &g;
          best_ecart = e;
        }
      };
      for (const auto& g : basis) consider(g.poly);
      for (const auto& g : extra) consider(g);
      if (!best) break;
      Work reducer = *best;
      if (best_ecart > ecart(h)) extra.push_back(h);
      Scalar c = h.front().coefficient / reducer.front().coefficient;
      Monomial m = reducer.front().monomial.quotient_of(h.front().monomial);
      h = sub_mul(h, 0, c, m, reducer);
    }
    return h;
  }

  Element normal_form(Element h, const std::vector<Element>& basis) const {
    if (order_.is_global()) return reduce(std::move(h), basis, true);
    h.poly = mora(std::move(h.poly), basis);
    return h;
  }

  std::vector<Element> initial(std::span<const Polynomial> gens) const {
    std::vector<Element> out;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element e;
      e.poly = to_work(gens[k]);
      if (track_) {
        e.rep.assign(n_inputs_, Work{});
        e.rep[k] = {Term{Monomial(ring_->arity()), Scalar(std::int64_t{1}, ring_->domain())}};
      }
      make_monic(e);
      out.push_back(std::move(e));
    }
    return out;
  }

  // Buchberger/Mora completion. Global orders use the product and chain
  // criteria; local orders process every pair.
  std::vector<Element> complete(std::vector<Element> basis) const {
    const bool global = order_.is_global();
    std::vector<Pair> pairs;
    std::vector<std::vector<bool>> pending;
    auto add_element = [&](Element e) {
      std::size_t idx = basis.size();
      basis.push_back(std::move(e));
      for (auto& row : pending) row.push_back(false);
      pending.emplace_back(basis.size(), false);
      for (std::size_t k = 0; k < idx; ++k) {
        Monomial l = basis[k].poly.front().monomial.lcm(basis[idx].poly.front().monomial);
        std::uint64_t d = l.degree();
        pairs.push_back({k, idx, std::move(l), d});
        pending[k][idx] = pending[idx][k] = true;
      }
    };
    std::vector<Element> start = std::move(basis);
    basis.clear();
    for (auto& e : start)
      if (!e.poly.empty()) add_element(std::move(e));

    while (!pairs.empty()) {
      auto best = pairs.begin();
      for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
        if (it->degree != best->degree) {
          if (it->degree < best->degree) best = it;
          continue;
        }
        int c = order_.compare(it->lcm, best->lcm);
        if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j)))
          best = it;
      }
      Pair p = std::move(*best);
      pairs.erase(best);
      pending[p.i][p.j] = pending[p.j][p.i] = false;

      const Monomial& li = basis[p.i].poly.front().monomial;
      const Monomial& lj = basis[p.j].poly.front().monomial;
      if (global) {
        if (li.coprime(lj)) continue;
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
          if (k == p.i || k == p.j) continue;
          if (basis[k].poly.front().monomial.divides(p.lcm) && !pending[p.i][k] &&
              !pending[p.j][k])
            chain = true;
        }
        if (chain) continue;
      }
      Element h = normal_form(spoly(basis[p.i], basis[p.j]), basis);
      if (h.poly.empty()) continue;
      make_monic(h);
      add_element(std::move(h));
    }
    return basis;
  }

  std::vector<Polynomial> finalize(std::vector<Element> basis) const {
    std::vector<Polynomial> out;
    for (const auto& e : basis)
      if (e.poly.front().monomial.is_one())
        return {Polynomial::constant(ring_, 1)};
    std::sort(basis.begin(), basis.end(), [&](const Element& a, const Element& b) {
      const Monomial& ma = a.poly.front().monomial;
      const Monomial& mb = b.poly.front().monomial;
      if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
      return order_.compare(ma, mb) < 0;
    });
    std::vector<Element> kept;
    for (auto& e : basis) {
      const Monomial& m = e.poly.front().monomial;
      bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Element& k) {
        return k.poly.front().monomial.divides(m);
      });
      if (!redundant) kept.push_back(std::move(e));
    }
    if (order_.is_global()) {
      for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Element> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
          if (j != i) others.push_back(Element{kept[j].poly, {}});
        Element tail{kept[i].poly, {}};
        kept[i].poly = reduce(std::move(tail), others, true).poly;
      }
    }
    std::sort(kept.begin(), kept.end(), [&](const Element& a, const Element& b) {
      return order_.compare(a.poly.front().monomial, b.poly.front().monomial) < 0;
    });
    for (auto& e : kept) {
      make_monic(e);
      out.push_back(to_poly(e.poly));
    }
    return out;
  }

  const RingPtr& ring() const { return ring_; }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  bool track_;
  std::size_t n_inputs_;
};

std::vector<Element> as_elements(const Engine& engine, std::span<const Polynomial> polys) {
  std::vector<Element> out;
  for (const auto& p : polys) out.push_back(Element{engine.to_work(p), {}});
  return out;
}

}  // namespace

StandardBasis compute_basis(const Ideal& ideal, MonomialOrder order) {
  Engine engine(ideal.ring(), order, false, 0);
  auto completed = engine.complete(engine.initial(ideal.generators()));
  StandardBasis basis(ideal, order, engine.finalize(std::move(completed)));
#ifndef NDEBUG
  assert(satisfies_buchberger_criterion(basis));
#endif
  return basis;
}

StandardBasis groebner_basis(const Ideal& ideal, MonomialOrder order) {
  if (!order.is_global())
    throw Error(ErrorCode::InvalidArgument, "groebner_basis needs a global order");
  return compute_basis(ideal, order);
}

StandardBasis standard_basis(const Ideal& ideal, MonomialOrder order) {
  if (!order.is_local())
    throw Error(ErrorCode::InvalidArgument, "standard_basis needs a local order");
  return compute_basis(ideal, order);
}

Polynomial normal_form(const Polynomial& f, const StandardBasis& basis) {
  require_same_ring(f.ring(), basis.ring());
  Engine engine(basis.ring(), basis.order(), false, 0);
  auto elems = as_elements(engine, basis.elements());
  Element h{engine.to_work(f), {}};
  return engine.to_poly(engine.normal_form(std::move(h), elems).poly);
}

bool satisfies_buchberger_criterion(const StandardBasis& basis) {
  Engine engine(basis.ring(), basis.order(), false, 0);
  auto elems = as_elements(engine, basis.elements());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!engine.normal_form(engine.spoly(elems[i], elems[j]), elems).poly.empty())
        return false;
  return true;
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  return normal_form(f, groebner_basis(ideal)).is_zero();
}

std::optional<std::vector<Polynomial>> membership_certificate(const Polynomial& f,
                                                              const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  const auto gens = ideal.generators();
  Engine engine(ideal.ring(), MonomialOrder::degrevlex(), true, gens.size());
  auto basis = engine.complete(engine.initial(gens));
  Element h{engine.to_work(f), std::vector<Work>(gens.size())};
  h = engine.reduce(std::move(h), basis, true);
  if (!h.poly.empty()) return std::nullopt;
  std::vector<Polynomial> cofactors;
  Polynomial check(ideal.ring());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    // reduction tracks h = f + sum rep_k g_k, and h reached zero
    cofactors.push_back(-engine.to_poly(h.rep[k]));
    check += cofactors.back() * gens[k];
  }
  if (!(check == f)) throw std::logic_error("membership certificate failed to verify");
  return cofactors;
}

RingPtr subring_without(const RingPtr& ring, std::span<const std::size_t> drop,
                        std::vector<std::size_t>* index_map) {
  std::vector<std::string> names;
  if (index_map) index_map->clear();
  for (std::size_t i = 0; i < ring->arity(); ++i) {
    if (std::find(drop.begin(), drop.end(), i) != drop.end()) continue;
    names.push_back(ring->name(i));
    if (index_map) index_map->push_back(i);
  }
  return Ring::make(std::move(names), ring->domain());
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->arity();
  for (std::size_t d : drop)
    if (d >= n) throw Error(ErrorCode::IndexOutOfRange, "eliminated variable out of range");
  std::vector<std::size_t> kept_map;
  RingPtr sub = subring_without(ring, drop, &kept_map);
  if (kept_map.empty())
    throw Error(ErrorCode::InvalidArgument, "cannot eliminate every variable");
  if (kept_map.size() == n) return Ideal(sub, {ideal.generators().begin(), ideal.generators().end()});

  // reorder so dropped variables come first
  std::vector<std::string> names;
  std::vector<std::size_t> to_work(n);
  std::vector<std::size_t> dropped(drop.begin(), drop.end());
  std::sort(dropped.begin(), dropped.end());
  dropped.erase(std::unique(dropped.begin(), dropped.end()), dropped.end());
  for (std::size_t d : dropped) {
    to_work[d] = names.size();
    names.push_back(ring->name(d));
  }
  for (std::size_t k : kept_map) {
    to_work[k] = names.size();
    names.push_back(ring->name(k));
  }
  RingPtr work_ring = Ring::make(names, ring->domain());
  Ideal moved = ideal.embed(work_ring, to_work);
  StandardBasis gb = groebner_basis(moved, MonomialOrder::elimination(dropped.size()));

  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    bool free = true;
    for (const auto& t : g.terms())
      for (std::size_t d = 0; d < dropped.size(); ++d)
        if (t.monomial[d]) free = false;
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m(sub->arity());
      for (std::size_t k = 0; k < sub->arity(); ++k) m[k] = t.monomial[dropped.size() + k];
      terms.push_back({std::move(m), t.coefficient});
    }
    out.push_back(Polynomial::from_terms(sub, std::move(terms)));
  }
  return Ideal(sub, std::move(out));
}

Colength colength(const StandardBasis& basis, std::uint64_t degree_bound) {
  if (basis.is_unit()) return {0, false};
  auto staircase = count_standard_monomials(basis.leading_monomials(),
                                            basis.ring()->arity(), degree_bound);
  return {staircase.count, staircase.bound_limited};
}

Colength colength(const Ideal& ideal, MonomialOrder order, std::uint64_t degree_bound) {
  return colength(compute_basis(ideal, order), degree_bound);
}

int krull_dimension(const Ideal& ideal) {
  StandardBasis gb = groebner_basis(ideal);
  if (gb.is_unit()) return -1;
  return monomial_ideal_dimension(gb.leading_monomials(), ideal.ring()->arity());
}

int local_dimension(const Ideal& ideal) {
  StandardBasis sb = standard_basis(ideal);
  if (sb.is_unit()) return -1;
  return monomial_ideal_dimension(sb.leading_monomials(), ideal.ring()->arity());
}

std::uint64_t hs_multiplicity(const Ideal& ideal) {
  std::vector<Scalar> origin(ideal.ring()->arity(),
                             Scalar(std::int64_t{0}, ideal.ring()->domain()));
  if (!ideal.vanishes_at(origin))
    throw Error(ErrorCode::OriginNotOnVariety, "origin is not on Z(I)");
  StandardBasis sb = standard_basis(ideal);
  return monomial_ideal_degree(sb.leading_monomials(), ideal.ring()->arity());
}

}  // namespace behrend
