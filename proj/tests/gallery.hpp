#ifndef BEHREND_TESTS_GALLERY_HPP
#define BEHREND_TESTS_GALLERY_HPP

// Shared inputs for the module tests and the acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "behrend/arcs.hpp"
#include "behrend/singularities.hpp"
#include "support.hpp"

namespace behrend::gallery {

struct CriticalCase {
  std::string label;
  Polynomial f;
};

/// x^3; x^3 + y^3; A_k = x^(k+1) + y^2 for k = 1..8; sums of x*y products.
inline std::vector<CriticalCase> critical_gallery() {
  std::vector<CriticalCase> out;
  auto R1 = Ring::make({"x"});
  auto R2 = Ring::make({"x", "y"});
  auto R3 = Ring::make({"x", "y", "z"});
  auto R4 = Ring::make({"x", "y", "z", "w"});
  out.push_back({"x^3", testing::P(R1, "x^3")});
  out.push_back({"x^3 + y^3", testing::P(R2, "x^3 + y^3")});
  for (int k = 1; k <= 8; ++k) {
    std::string text = "x^" + std::to_string(k + 1) + " + y^2";
    out.push_back({"A_" + std::to_string(k) + ": " + text, testing::P(R2, text)});
  }
  out.push_back({"x*y", testing::P(R2, "x*y")});
  out.push_back({"x*y + z^2", testing::P(R3, "x*y + z^2")});
  out.push_back({"x*y + z*w", testing::P(R4, "x*y + z*w")});
  out.push_back({"x*y + z^3", testing::P(R3, "x*y + z^3")});
  return out;
}

struct SmoothChart {
  Ideal ideal;
  Point point;
  int dimension;
};

/// A complete intersection through a random rational point whose linear
/// parts are independent, so the point is smooth of dimension n - c.
inline SmoothChart random_smooth_chart(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-3, 3);
  const std::size_t n = 1 + rng() % 4;
  const std::size_t c = 1 + rng() % n;
  std::vector<std::string> names{"x", "y", "z", "w"};
  names.resize(n);
  auto R = Ring::make(names);
  Point P;
  for (std::size_t i = 0; i < n; ++i) P.emplace_back(mpq_class(small(rng), 1 + rng() % 3));
  // linear parts: the first c rows of a random unitriangular matrix, permuted
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < c; ++k) {
    Polynomial h = Polynomial::variable(R, cols[k]);
    for (std::size_t j = k + 1; j < n; ++j)
      h += Polynomial::variable(R, cols[j]) * Scalar(static_cast<long>(small(rng)));
    // higher order terms at the origin
    Polynomial tail = testing::random_polynomial(rng, R, 3, 3);
    for (const auto& t : tail.terms())
      if (t.monomial.degree() >= 2) h += Polynomial::monomial(R, t.monomial, t.coefficient);
    Point minus;
    for (const auto& p : P) minus.push_back(-p);
    gens.push_back(h.translate(minus));
  }
  return {Ideal(R, std::move(gens)), P, static_cast<int>(n - c)};
}

struct FormCase {
  std::string label;
  OneForm omega;
  std::vector<ArcSeries> arcs;
};

inline RingPtr arc_params() { return Ring::make({"u", "v"}); }
inline RingPtr arc_params_t() { return Ring::make({"u", "v", "t"}); }

/// Random polynomial in u, v of degree <= 2 with small coefficients.
inline Polynomial random_uv(std::mt19937& rng) {
  return testing::random_polynomial(rng, arc_params(), 3, 2);
}

/// Arc with given constant term (a point of X parametrized by u) plus random
/// higher coefficients in u and v. delay[i] = d makes coordinate i start at
/// t^(1 + d).
inline ArcSeries random_arc(std::mt19937& rng, const std::vector<std::string>& base,
                            std::size_t order, const std::vector<std::size_t>& delay = {}) {
  auto params = arc_params();
  auto with_t = arc_params_t();
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < base.size(); ++i) {
    Polynomial g = testing::P(with_t, base[i]);
    std::size_t start = 1 + (i < delay.size() ? delay[i] : 0);
    for (std::size_t p = start; p <= 3 && p <= order; ++p) {
      Polynomial r = random_uv(rng);
      std::vector<std::size_t> into{0, 1};
      g += r.embed(with_t, into) * Polynomial::monomial(with_t, Monomial::variable(3, 2, p),
                                                          Scalar(1L));
    }
    comps.push_back(std::move(g));
  }
  return ArcSeries::from_polynomials(params, with_t, comps, order);
}

/// Almost-closed forms with two-parameter arc families based on X.
inline std::vector<FormCase> almost_closed_gallery(std::mt19937& rng, std::size_t families = 12,
                                                   std::size_t order = 8) {
  auto R2 = Ring::make({"x", "y"});
  auto R3 = Ring::make({"x", "y", "z"});
  std::vector<FormCase> out;
  auto exact = [&](const std::string& label, const RingPtr& R, const std::string& f) {
    out.push_back({label, OneForm::exact(testing::P(R, f)), {}});
  };
  exact("d(x^3 + y^3)", R2, "x^3 + y^3");
  exact("d(x^2*y^2)", R2, "x^2*y^2");
  exact("d(x^2*y)", R2, "x^2*y");
  exact("d((y - x^2)^2)", R2, "(y - x^2)^2");
  exact("d(x*y*z)", R3, "x*y*z");
  out.push_back({"y dx + (x - x*y) dy",
                 OneForm(R2, {testing::P(R2, "y"), testing::P(R2, "x - x*y")}),
                 {}});
  // points of X as functions of u, with coordinates whose first jets are delayed
  const std::vector<std::vector<std::vector<std::string>>> bases{
      {{"0", "0"}},
      {{"u", "0"}, {"0", "u"}},
      {{"0", "u"}},
      {{"u", "u^2"}},
      {{"u", "0", "0"}, {"0", "u", "0"}, {"0", "0", "u"}},
      {{"0", "0"}},
  };
  for (std::size_t c = 0; c < out.size(); ++c) {
    const auto& choices = bases[c];
    for (std::size_t k = 0; k < families; ++k) {
      const auto& base = choices[k % choices.size()];
      std::vector<std::size_t> delay(base.size(), 0);
      if (k % 3 == 2) delay[rng() % base.size()] = 1;
      out[c].arcs.push_back(random_arc(rng, base, order, delay));
    }
  }
  return out;
}

}  // namespace behrend::gallery

#endif  // BEHREND_TESTS_GALLERY_HPP
