#include <random>

#include "doctest.h"

#include "behrend/arcs.hpp"
#include "behrend/error.hpp"
#include "behrend/singularities.hpp"
#include "gallery.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace behrend;
using behrend::testing::I;
using behrend::testing::P;
using behrend::testing::origin;
using behrend::testing::point;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("jacobian ideal") {
  auto R = Ring::make({"x", "y"});
  auto j = jacobian_ideal(P(R, "x^3 + y^3"));
  REQUIRE(j.generators().size() == 2);
  CHECK(j.generators()[0] == P(R, "3*x^2"));
  CHECK(j.generators()[1] == P(R, "3*y^2"));
  auto jxy = jacobian_ideal(P(R, "x*y"));
  CHECK(jxy.generators()[0] == P(R, "y"));
  CHECK(jxy.generators()[1] == P(R, "x"));
  CHECK(jacobian_ideal(P(R, "7")).is_zero());
}

TEST_CASE("is_smooth_at") {
  auto R = Ring::make({"x", "y"});
  auto s = is_smooth_at(I(R, {"y - x^2"}), origin(2));
  CHECK(s.smooth);
  CHECK(s.local_dimension == 1);
  CHECK_FALSE(is_smooth_at(I(R, {"x*y"}), origin(2)).smooth);
  auto pt = is_smooth_at(I(R, {"x", "y"}), origin(2));
  CHECK(pt.smooth);
  CHECK(pt.local_dimension == 0);
  CHECK_FALSE(is_smooth_at(I(R, {"x^2", "y"}), origin(2)).smooth);
  // a redundant generating set does not fool the criterion
  CHECK(is_smooth_at(I(R, {"y", "y*x", "y^2"}), origin(2)).smooth);
  CHECK(code_of([&] { is_smooth_at(I(R, {"x - 1"}), origin(2)); }) ==
        ErrorCode::PointNotOnVariety);
}

TEST_CASE("milnor numbers") {
  auto R = Ring::make({"x", "y"});
  auto Rx = Ring::make({"x"});
  CHECK(milnor_number(P(R, "x^2 + y^2"), origin(2)).value == 1u);
  CHECK(milnor_number(P(Rx, "x^3"), origin(1)).value == 2u);
  CHECK(milnor_number(P(R, "x^3 + y^3"), origin(2)).value == 4u);
  CHECK(milnor_number(P(Rx, "x^3"), point({5})).status == MilnorNumber::Status::NotCritical);
  CHECK(milnor_number(P(R, "x^2*y^2"), origin(2)).status == MilnorNumber::Status::Infinite);
  // translated critical point
  CHECK(milnor_number(P(R, "(x - 1)^4 + (y + 2)^2"), point({1, -2})).value == 3u);
  for (int k = 1; k <= 8; ++k) {
    Polynomial f = P(R, "x^" + std::to_string(k + 1) + " + y^2");
    CHECK(milnor_number(f, origin(2)).value == static_cast<std::uint64_t>(k));
    CHECK(oracle::local_colength(jacobian_ideal(f)) == static_cast<std::size_t>(k));
  }
}

TEST_CASE("milnor fibre Euler characteristic") {
  auto R2 = Ring::make({"x", "y"});
  auto R3 = Ring::make({"x", "y", "z"});
  auto Rx = Ring::make({"x"});
  CHECK(milnor_fibre_euler(P(R2, "x^2 + y^2"), origin(2)) == 0);
  CHECK(milnor_fibre_euler(P(R3, "x^2 + y^2 + z^2"), origin(3)) == 2);
  CHECK(milnor_fibre_euler(P(Rx, "x^3"), origin(1)) == 3);
  CHECK(code_of([&] { milnor_fibre_euler(P(Rx, "x^3"), point({5})); }) == ErrorCode::NotCritical);
  CHECK(code_of([&] { milnor_fibre_euler(P(R2, "x^2*y^2"), origin(2)); }) ==
        ErrorCode::NonIsolated);
}

TEST_CASE("behrend_at examples") {
  auto R2 = Ring::make({"x", "y"});
  auto Rx = Ring::make({"x"});
  auto nondeg = behrend_at_critical(P(R2, "x^2 + y^2"), origin(2));
  CHECK(nondeg.nu == 1);
  CHECK(nondeg.route == "milnor");
  auto fat = behrend_at_critical(P(Rx, "x^3"), origin(1));
  CHECK(fat.nu == 2);
  CHECK(fat.milnor_fibre_euler == 3);
  // nondegenerate point: the smooth branch agrees
  CHECK(behrend_at_ideal(jacobian_ideal(P(R2, "x^2 + y^2")), origin(2)).nu == 1);
  CHECK(behrend_at_ideal(I(R2, {"y - x^2"}), point({1, 1})).nu == -1);
  // non-isolated but smooth locus of Z(df): a point of the x-axis for x^2*y^2
  auto axis = behrend_at_critical(P(R2, "x^2*y^2"), point({1, 0}));
  CHECK(axis.route == "smooth");
  CHECK(axis.nu == -1);
  CHECK(code_of([&] { behrend_at_critical(P(R2, "x^2*y^2"), origin(2)); }) ==
        ErrorCode::Unsupported);
  CHECK(code_of([&] { behrend_at_critical(P(Rx, "x^3"), point({5})); }) == ErrorCode::PointNotOnX);
  CHECK(code_of([&] { behrend_at_ideal(I(R2, {"x*y"}), origin(2)); }) == ErrorCode::Unsupported);
}

TEST_CASE("nu equals mu at isolated critical points") {
  for (const auto& c : gallery::critical_gallery()) {
    CAPTURE(c.label);
    auto o = origin(c.f.ring()->arity());
    auto v = behrend_at_critical(c.f, o);
    auto mu = milnor_number(c.f, o);
    REQUIRE(mu.status == MilnorNumber::Status::Finite);
    CHECK(v.nu == static_cast<std::int64_t>(mu.value));
  }
}

TEST_CASE("multiplicativity on A_k + A_l") {
  auto R = Ring::make({"x", "y", "z", "w"});
  auto Rxy = Ring::make({"x", "y"});
  for (int k = 1; k <= 5; ++k)
    for (int l = 1; l <= 5; ++l) {
      std::string fk = "x^" + std::to_string(k + 1) + " + y^2";
      std::string gl = "z^" + std::to_string(l + 1) + " + w^2";
      auto sum = behrend_at_critical(P(R, fk + " + " + gl), origin(4));
      auto a = behrend_at_critical(P(Rxy, fk), origin(2));
      CHECK(sum.nu == a.nu * static_cast<std::int64_t>(l));
      CHECK(sum.nu == k * l);
    }
}

TEST_CASE("smooth-point rule on random charts") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 20; ++trial) {
    auto chart = gallery::random_smooth_chart(rng);
    CAPTURE(trial);
    auto v = behrend_at_ideal(chart.ideal, chart.point);
    CHECK(v.dimension == chart.dimension);
    CHECK(v.nu == (chart.dimension % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("almost closed forms") {
  auto R = Ring::make({"x", "y"});
  auto closed = is_almost_closed(OneForm::exact(P(R, "x^3*y + y^5 - x")));
  CHECK(closed.almost_closed);
  OneForm omega(R, {P(R, "y"), P(R, "x - x*y")});
  auto rep = is_almost_closed(omega);
  CHECK(rep.almost_closed);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].difference == P(R, "y"));
  OneForm ydx(R, {P(R, "y"), P(R, "0")});
  auto bad = is_almost_closed(ydx);
  CHECK_FALSE(bad.almost_closed);
  REQUIRE(bad.failure);
  CHECK(bad.failure->i == 0);
  CHECK(bad.failure->j == 1);
  CHECK(bad.failure->remainder == P(R, "1"));
  CHECK_THROWS_AS(OneForm(R, {P(R, "y")}), Error);
}

TEST_CASE("arc parsing and composition") {
  auto R = Ring::make({"x", "y"});
  auto g = parse_arc("order: 5\nx = t\ny = t^2\n", R);
  CHECK(g.order() == 5);
  CHECK(g.params()->arity() == 0);
  Series s = compose_along_arc(P(R, "x*y"), g);
  CHECK(s.valuation() == 3u);
  CHECK(s[3] == Polynomial::constant(g.params(), 1));

  auto h = parse_arc("order: 4\nx = s*t\ny = -s^2*t^2", R);
  CHECK(compose_along_arc(P(R, "x^2 + y"), h).valuation() == std::nullopt);

  auto c = parse_arc("x = 2\ny = 3", R);
  CHECK(c.order() == 8);
  Series k = compose_along_arc(P(R, "x^2 + y"), c);
  CHECK(k[0] == Polynomial::constant(c.params(), 7));
  CHECK(k.valuation() == 0u);

  // truncation drops t^6 and beyond
  auto tr = parse_arc("order: 2\nx = t + t^6\ny = 0", R);
  CHECK(tr[0][1] == Polynomial::constant(tr.params(), 1));

  CHECK_THROWS_AS(parse_arc("x = t", R), Error);
  CHECK_THROWS_AS(parse_arc("x = t\ny = x", R), Error);
  CHECK_THROWS_AS(parse_arc("order: x\nx = t\ny = t", R), SyntaxError);
  CHECK_THROWS_AS(compose_along_arc(P(Ring::make({"x"}), "x"), g), Error);
}

TEST_CASE("arc vanishing order") {
  auto R = Ring::make({"x", "y"});
  OneForm ydx(R, {P(R, "y"), P(R, "0")});
  auto g = parse_arc("order: 6\nx = u\ny = v*t", R);
  CHECK(arc_vanishing_order(ydx, g) == 1u);
  auto through = parse_arc("order: 6\nx = 1 + t\ny = t", R);
  CHECK(arc_vanishing_order(OneForm::exact(P(R, "x^2 + y")), through) == 0u);
  auto inside = parse_arc("order: 6\nx = u + t\ny = 0", R);
  CHECK(arc_vanishing_order(ydx, inside) == std::nullopt);
}

TEST_CASE("lagrangian obstruction examples") {
  auto R = Ring::make({"x", "y"});
  OneForm ydx(R, {P(R, "y"), P(R, "0")});
  auto g = parse_arc("order: 6\nx = u\ny = v*t", R);
  ParameterForm ob = lagrangian_obstruction(ydx, g, 1);
  CHECK_FALSE(ob.is_zero());
  CHECK(ob.to_string() == "du∧dv");
  CHECK(lagrangian_obstruction_via_derivatives(ydx, g, 1) == ob);
  CHECK(code_of([&] { lagrangian_obstruction(ydx, g, 2); }) == ErrorCode::OrderTooLow);

  OneForm ac(R, {P(R, "y"), P(R, "x - x*y")});
  CHECK(arc_vanishing_order(ac, g) == 0u);
  CHECK(code_of([&] { lagrangian_obstruction(ac, g, 1); }) == ErrorCode::OrderTooLow);

  auto cube = OneForm::exact(P(R, "x^3 + y^3"));
  auto lin = parse_arc("order: 8\nx = u*t\ny = v*t", R);
  CHECK(arc_vanishing_order(cube, lin) == 2u);
  CHECK(lagrangian_obstruction(cube, lin, 2).is_zero());
  CHECK(lagrangian_obstruction(cube, lin, 1).is_zero());
}

TEST_CASE("parameter forms") {
  auto S = Ring::make({"u", "v"});
  auto du = ParameterForm::differential(P(S, "u"));
  auto dv = ParameterForm::differential(P(S, "v"));
  CHECK(du.wedge(du).is_zero());
  auto w = du.wedge(dv);
  auto rev = dv.wedge(du);
  rev += w;
  CHECK(rev.is_zero());
  // d(u dv) = du ∧ dv, d(d(u^2 v)) = 0
  auto leibniz = ParameterForm::differential(P(S, "u*v"));
  leibniz -= du * P(S, "v");
  CHECK(dv * P(S, "u") == leibniz);
  CHECK((dv * P(S, "u")).exterior_derivative() == w);
  CHECK(ParameterForm::differential(P(S, "u^2*v")).exterior_derivative().is_zero());
}

TEST_CASE("theorem: almost closed forms have vanishing obstruction on arc families") {
  std::mt19937 rng(31337);
  auto forms = gallery::almost_closed_gallery(rng);
  int checked = 0;
  for (const auto& fc : forms) {
    CAPTURE(fc.label);
    REQUIRE(is_almost_closed(fc.omega).almost_closed);
    for (const auto& arc : fc.arcs) {
      auto v = arc_vanishing_order(fc.omega, arc);
      REQUIRE((!v || *v >= 1));
      std::size_t top = v ? *v : arc.order() - 1;
      for (std::size_t m = 1; m <= top && m < arc.order(); ++m) {
        CAPTURE(m);
        ParameterForm ob = lagrangian_obstruction(fc.omega, arc, m);
        CHECK(ob.is_zero());
        CHECK(lagrangian_obstruction_via_derivatives(fc.omega, arc, m) == ob);
        ++checked;
      }
    }
  }
  CHECK(checked >= 60);
}

TEST_CASE("the two routes to the obstruction agree on non-closed forms") {
  auto R = Ring::make({"x", "y"});
  OneForm omega(R, {P(R, "y^2"), P(R, "x*y")});
  auto g = parse_arc("order: 6\nx = u + v*t^2\ny = u*t + t^2", R);
  auto v = arc_vanishing_order(omega, g);
  REQUIRE(v == 1u);
  auto ob = lagrangian_obstruction(omega, g, 1);
  CHECK(lagrangian_obstruction_via_derivatives(omega, g, 1) == ob);
}

TEST_CASE("pullback dt coefficient: direct expansion equals binomial sum") {
  std::mt19937 rng(2718);
  auto params = gallery::arc_params();
  auto with_t = gallery::arc_params_t();
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 2;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    auto R = Ring::make(names);
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(testing::random_polynomial(rng, R, 3, 3));
    OneForm omega(R, comps);
    std::vector<Polynomial> arc;
    for (std::size_t i = 0; i < n; ++i) arc.push_back(testing::random_polynomial(rng, with_t, 4, 3));
    auto gamma = ArcSeries::from_polynomials(params, with_t, arc, 5);
    for (std::size_t m = 1; m <= 4; ++m) {
      CAPTURE(trial);
      CAPTURE(m);
      CHECK(pullback_dt_coefficient(omega, gamma, m - 1) ==
            pullback_dt_coefficient_binomial(omega, gamma, m - 1));
    }
  }
}

TEST_CASE("pullback of d omega vanishes below the vanishing order for almost closed forms") {
  std::mt19937 rng(99);
  auto forms = gallery::almost_closed_gallery(rng, 4);
  for (const auto& fc : forms)
    for (const auto& arc : fc.arcs) {
      auto v = arc_vanishing_order(fc.omega, arc);
      std::size_t m = v ? std::min<std::size_t>(*v, arc.order() - 1) : arc.order() - 1;
      CAPTURE(fc.label);
      CHECK(pullback_dt_coefficient(fc.omega, arc, m - 1).is_zero());
    }
}
