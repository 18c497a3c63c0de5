#include "behrend/monomial_ideal.hpp"

#include <algorithm>
#include <functional>

#include "behrend/error.hpp"

namespace behrend {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  constexpr MonomialOrder order = MonomialOrder::degrevlex();
  std::sort(gens.begin(), gens.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

StaircaseCount count_standard_monomials(const std::vector<Monomial>& gens,
                                        std::size_t arity,
                                        std::uint64_t degree_bound) {
  if (in_monomial_ideal(Monomial(arity), gens)) return {0, false};
  for (std::size_t v = 0; v < arity; ++v) {
    bool has_power = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      for (std::size_t i = 0; i < arity; ++i)
        if (i != v && g[i]) return false;
      return g[v] > 0;
    });
    if (!has_power) return {std::nullopt, false};
  }
  // Standard monomials form an order ideal: once x1^e1..xk^ek (remaining
  // exponents zero) lies in the ideal, every extension does too.
  std::uint64_t count = 0;
  bool exceeded = false;
  Monomial m(arity);
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t var,
                                                             std::uint64_t deg) {
    if (exceeded) return;
    if (var == arity) {
      ++count;
      return;
    }
    for (Exponent e = 0;; ++e) {
      m[var] = e;
      if (in_monomial_ideal(m, gens)) break;
      if (deg + e > degree_bound) {
        exceeded = true;
        break;
      }
      walk(var + 1, deg + e);
      if (exceeded) break;
    }
    m[var] = 0;
  };
  walk(0, 0);
  if (exceeded) return {std::nullopt, true};
  return {count, false};
}

int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t arity) {
  if (in_monomial_ideal(Monomial(arity), gens)) return -1;
  if (arity > 24) throw Error(ErrorCode::TooLarge, "too many variables for subset search");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < arity; ++i)
      if (g[i]) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << arity); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

std::vector<std::vector<std::size_t>> minimal_primes(const std::vector<Monomial>& gens,
                                                     std::size_t arity) {
  if (arity > 24) throw Error(ErrorCode::TooLarge, "too many variables for subset search");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < arity; ++i)
      if (g[i]) s |= 1u << i;
    if (s == 0) return {};  // unit ideal
    supports.push_back(s);
  }
  std::vector<std::uint32_t> covers;
  for (std::uint32_t set = 0; set < (1u << arity); ++set) {
    bool covers_all = std::all_of(supports.begin(), supports.end(),
                                  [&](std::uint32_t s) { return (s & set) != 0; });
    if (covers_all) covers.push_back(set);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t c : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(), [&](std::uint32_t d) {
      return d != c && (d & c) == d;
    });
    if (!minimal) continue;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < arity; ++i)
      if (c & (1u << i)) vars.push_back(i);
    out.push_back(std::move(vars));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using TPoly = std::vector<std::int64_t>;

void add_shifted(TPoly& acc, const TPoly& p, std::uint64_t shift, std::int64_t sign) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += sign * p[i];
}

TPoly numerator(std::vector<Monomial> gens, std::size_t arity) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!gens[i].coprime(gens[j])) coprime = false;
  if (coprime) {
    TPoly acc{1};
    for (const auto& g : gens) {
      TPoly next(acc.size() + g.degree(), 0);
      add_shifted(next, acc, 0, 1);
      add_shifted(next, acc, g.degree(), -1);
      acc = std::move(next);
    }
    return acc;
  }
  // N(I) = N(I') - t^deg(m) N(I' : m), I = I' + (m)
  Monomial pivot = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g.gcd(pivot).quotient_of(g));
  TPoly acc = numerator(gens, arity);
  add_shifted(acc, numerator(std::move(colon), arity), pivot.degree(), -1);
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& gens,
                                            std::size_t arity) {
  return numerator(gens, arity);
}

std::uint64_t monomial_ideal_degree(const std::vector<Monomial>& gens, std::size_t arity) {
  int dim = monomial_ideal_dimension(gens, arity);
  if (dim < 0) return 0;
  TPoly q = numerator(gens, arity);
  // divide by (1 - t) exactly (arity - dim) times; the quotient at t = 1 is
  // the degree
  for (std::size_t k = 0; k < arity - static_cast<std::size_t>(dim); ++k) {
    TPoly quot(q.size() > 1 ? q.size() - 1 : 1, 0);
    std::int64_t carry = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      carry += q[i];
      quot[i] = carry;
    }
    q = std::move(quot);
  }
  std::int64_t e = 0;
  for (auto c : q) e += c;
  return static_cast<std::uint64_t>(e);
}

}  // namespace behrend
