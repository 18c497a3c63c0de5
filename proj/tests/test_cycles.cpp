#include <random>
#include <set>

#include "doctest.h"

#include "behrend/cycles.hpp"
#include "behrend/error.hpp"
#include "behrend/monomial_ideal.hpp"
#include "gallery.hpp"
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

/// Local length of the cone along a coordinate-subspace component: keep the
/// vanishing variables, set every other variable to 1, count at the origin.
std::uint64_t slice_length(const ConeIdealReport& cone, const ConeComponent& comp) {
  const std::size_t n = cone.base_arity;
  const std::size_t total = cone.ring->arity();
  std::vector<std::size_t> keep(comp.base_vanishing);
  for (std::size_t j : comp.fiber_vanishing) keep.push_back(n + j);
  std::vector<std::string> names;
  for (std::size_t k : keep) names.push_back(cone.ring->name(k));
  auto slice = Ring::make(names);
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < total; ++v) {
    auto it = std::find(keep.begin(), keep.end(), v);
    if (it == keep.end())
      images.push_back(Polynomial::constant(slice, 1L));
    else
      images.push_back(Polynomial::variable(slice, static_cast<std::size_t>(it - keep.begin())));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : cone.ideal.generators()) gens.push_back(g.substitute(slice, images));
  auto c = colength(Ideal(slice, gens), MonomialOrder::local_degrevlex());
  REQUIRE_FALSE(c.is_infinite());
  return *c.value;
}

Ideal jacobian_of(const RingPtr& R, const std::string& f) { return jacobian_ideal(P(R, f)); }

}  // namespace

TEST_CASE("normal cone ideal examples") {
  auto R1 = Ring::make({"x"});
  auto c1 = normal_cone_ideal(I(R1, {"x^2"}));
  CHECK(c1.ring->names() == std::vector<std::string>{"x", "p1"});
  REQUIRE(c1.ideal.generators().size() == 1);
  CHECK(c1.ideal.generators()[0] == P(c1.ring, "x^2"));
  CHECK(c1.dimension == 1);
  CHECK(c1.conic);

  auto R2 = Ring::make({"x", "y"});
  auto c2 = normal_cone_ideal(I(R2, {"x", "y"}));
  CHECK(c2.dimension == 2);
  CHECK(c2.conic);
  // over the origin the fibre is the whole plane
  for (const auto& g : c2.ideal.generators())
    CHECK(ideal_membership(g, I(c2.ring, {"x", "y"})));
  CHECK(ideal_membership(P(c2.ring, "x"), c2.ideal));

  auto c3 = normal_cone_ideal(I(R2, {"x*y", "x^2"}));
  CHECK(c3.dimension == 2);
  CHECK(c3.conic);
  CHECK(ideal_membership(P(c3.ring, "x*p1 - y*p2"), c3.ideal));

  CHECK(code_of([&] { normal_cone_ideal(I(R2, {"x", "1 + x"})); }) == ErrorCode::UnitIdeal);
}

TEST_CASE("fibre names avoid the base names") {
  auto R = Ring::make({"p1", "q"});
  auto c = normal_cone_ideal(I(R, {"p1*q"}));
  CHECK(c.ring->names() == std::vector<std::string>{"p1", "q", "pp1"});
}

TEST_CASE("is_conic") {
  auto R = Ring::make({"x", "y", "p1", "p2"});
  CHECK_FALSE(is_conic(I(R, {"p1 - 1"}), 2));
  CHECK(is_conic(I(R, {"x*p2 - y*p1"}), 2));
  CHECK(is_conic(I(R, {"x^2 - y", "p1^2 + p2^2"}), 2));
  CHECK_FALSE(is_conic(I(R, {"p1^2 + p2"}), 2));
  CHECK(code_of([&] { is_conic(I(R, {"x"}), 5); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("distinguished cycle examples") {
  auto R1 = Ring::make({"x"});
  auto line = distinguished_cycle(Ideal(R1), PresentationClass::Smooth);
  REQUIRE(line.terms().size() == 1);
  CHECK(line.terms()[0].coefficient == -1);
  CHECK(line.terms()[0].prime.dimension() == 1);

  auto fat = distinguished_cycle(I(R1, {"x^2"}), PresentationClass::RegularSequence);
  Cycle expect;
  expect.add(2, PrimeCycle::point(R1, origin(1)));
  CHECK(fat == expect);
  CHECK(fat.to_string() == "2*[(0)]");
  CHECK(distinguished_cycle(I(R1, {"x^2"}), PresentationClass::Monomial).to_string() == "2*[V(x)]");

  auto R2 = Ring::make({"x", "y"});
  auto four = distinguished_cycle(I(R2, {"x^2", "y^2"}), PresentationClass::RegularSequence);
  Cycle e4;
  e4.add(4, PrimeCycle::point(R2, origin(2)));
  CHECK(four == e4);
  auto four_m = distinguished_cycle(I(R2, {"x^2", "y^2"}), PresentationClass::Monomial);
  REQUIRE(four_m.terms().size() == 1);
  CHECK(four_m.terms()[0].coefficient == 4);
}

TEST_CASE("regular sequence: points are split and summed") {
  auto R = Ring::make({"x", "y"});
  // two reduced points and one double point
  auto c = distinguished_cycle(I(R, {"(x - 1)*(x + 2)^2", "y - x"}), PresentationClass::RegularSequence);
  Cycle expect;
  expect.add(1, PrimeCycle::point(R, point({1, 1})));
  expect.add(2, PrimeCycle::point(R, point({-2, -2})));
  CHECK(c == expect);
  auto half = distinguished_cycle(I(R, {"2*x - 1", "y^2"}), PresentationClass::RegularSequence);
  REQUIRE(half.terms().size() == 1);
  CHECK(half.terms()[0].coefficient == 2);
  CHECK(half.terms()[0].prime.coordinates()[0] == Scalar(mpq_class(1, 2)));

  CHECK(code_of([&] {
          distinguished_cycle(I(R, {"x^2 - 2", "y"}), PresentationClass::RegularSequence);
        }) == ErrorCode::IrrationalPoint);
  CHECK(code_of([&] {
          distinguished_cycle(I(R, {"x*y"}), PresentationClass::RegularSequence);
        }) == ErrorCode::UnsupportedPresentation);
  CHECK(code_of([&] {
          distinguished_cycle(I(R, {"x*y", "x^2"}), PresentationClass::RegularSequence);
        }) == ErrorCode::UnsupportedPresentation);
}

TEST_CASE("smooth class is verified") {
  auto R = Ring::make({"x", "y"});
  auto parabola = distinguished_cycle(I(R, {"y - x^2"}), PresentationClass::Smooth);
  REQUIRE(parabola.terms().size() == 1);
  CHECK(parabola.terms()[0].coefficient == -1);
  CHECK(code_of([&] { distinguished_cycle(I(R, {"y^2 - x^3"}), PresentationClass::Smooth); }) ==
        ErrorCode::UnsupportedPresentation);
  CHECK(code_of([&] { distinguished_cycle(I(R, {"x + y"}), PresentationClass::Monomial); }) ==
        ErrorCode::UnsupportedPresentation);
}

TEST_CASE("toric cycles by hand") {
  auto R1 = Ring::make({"x"});
  auto R2 = Ring::make({"x", "y"});
  auto R3 = Ring::make({"x", "y", "z"});
  auto cyc = [](const Ideal& i) { return distinguished_cycle(i, PresentationClass::Monomial); };

  Cycle a;
  a.add(3, PrimeCycle::monomial_prime(R2, {0, 1}));
  a.add(-1, PrimeCycle::monomial_prime(R2, {0}));
  a.add(-1, PrimeCycle::monomial_prime(R2, {1}));
  CHECK(cyc(jacobian_of(R2, "x^2*y^2")) == a);

  Cycle b;
  b.add(2, PrimeCycle::monomial_prime(R2, {0, 1}));
  b.add(-1, PrimeCycle::monomial_prime(R2, {0}));
  CHECK(cyc(I(R2, {"x^2", "x*y"})) == b);

  Cycle m2;
  m2.add(2, PrimeCycle::monomial_prime(R2, {0, 1}));
  CHECK(cyc(I(R2, {"x^2", "x*y", "y^2"})) == m2);

  for (int k = 2; k <= 6; ++k) {
    auto c = cyc(I(R1, {"x^" + std::to_string(k)}));
    REQUIRE(c.terms().size() == 1);
    CHECK(c.terms()[0].coefficient == k);
  }

  Cycle whole;
  whole.add(-1, PrimeCycle::monomial_prime(R3, {}));
  CHECK(cyc(Ideal(R3)) == whole);

  // a regular monomial sequence agrees with the point route
  auto reg = I(R3, {"x^2", "y^3", "z"});
  auto via_points = distinguished_cycle(reg, PresentationClass::RegularSequence);
  auto via_toric = cyc(reg);
  REQUIRE(via_toric.terms().size() == 1);
  CHECK(via_toric.terms()[0].coefficient == via_points.terms()[0].coefficient);
}

TEST_CASE("toric component lengths match the slice count") {
  std::mt19937 rng(11);
  std::vector<Ideal> ideals;
  auto R2 = Ring::make({"x", "y"});
  auto R3 = Ring::make({"x", "y", "z"});
  for (const auto& f : {"x^2*y^2", "x^3*y^2", "x^2*y + x*y^3", "x*y*z"}) {
    auto R = std::string(f).find('z') == std::string::npos ? R2 : R3;
    Polynomial p = P(R, f);
    if (p.term_count() == 1) ideals.push_back(jacobian_ideal(p));
  }
  ideals.push_back(I(R2, {"x^2", "x*y"}));
  ideals.push_back(I(R2, {"x^3", "x*y^2", "y^4"}));
  ideals.push_back(I(R3, {"x*y", "y*z", "x*z"}));
  for (int k = 0; k < 10; ++k) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 2 + k % 2; ++j) {
      Monomial m(2);
      m[0] = rng() % 4;
      m[1] = rng() % 4;
      if (m.is_one()) m[0] = 1;
      gens.push_back(Polynomial::monomial(R2, m, Scalar(1L)));
    }
    ideals.emplace_back(R2, gens);
  }
  std::size_t checked = 0;
  for (const auto& ideal : ideals) {
    auto cone = normal_cone_ideal(ideal);
    CHECK(cone.dimension == static_cast<int>(ideal.ring()->arity()));
    REQUIRE_FALSE(cone.components.empty());
    for (const auto& comp : cone.components) {
      if (!comp.linear) continue;
      CHECK(slice_length(cone, comp) == comp.multiplicity);
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("Lagrangian descriptors for monomial Jacobian presentations") {
  auto R2 = Ring::make({"x", "y"});
  auto R3 = Ring::make({"x", "y", "z"});
  std::size_t linear = 0;
  for (const auto& [R, f] : std::vector<std::pair<RingPtr, std::string>>{
           {R2, "x^2*y^2"}, {R2, "x^3*y^2"}, {R2, "x*y"}, {R2, "x^2*y"}, {R3, "x*y*z"},
           {R3, "x^2*y*z"}, {R3, "x^2*y^2*z^2"}}) {
    auto ideal = jacobian_ideal(P(R, f));
    const std::size_t n = R->arity();
    REQUIRE(ideal.generators().size() == n);
    auto doubled = normal_cone_ideal(ideal).ring;
    for (const auto& comp : monomial_cone_components(ideal)) {
      if (!comp.linear) continue;
      ++linear;
      std::vector<std::size_t> support(comp.base_vanishing);
      for (std::size_t j : comp.fiber_vanishing) support.push_back(n + j);
      std::vector<std::size_t> conormal(comp.base_vanishing);
      for (std::size_t i = 0; i < n; ++i)
        if (std::find(comp.base_vanishing.begin(), comp.base_vanishing.end(), i) ==
            comp.base_vanishing.end())
          conormal.push_back(n + i);
      CHECK(PrimeCycle::monomial_prime(doubled, support).key() ==
            PrimeCycle::monomial_prime(doubled, conormal).key());
    }
  }
  CHECK(linear >= 10);
}

TEST_CASE("Euler obstruction examples") {
  auto R2 = Ring::make({"x", "y"});
  Cycle two;
  two.add(2, PrimeCycle::point(R2, origin(2)));
  CHECK(euler_obstruction(two, origin(2)) == 2);
  CHECK(euler_obstruction(two, point({1, 0})) == 0);

  Cycle parabola;
  parabola.add(1, PrimeCycle::smooth_variety(I(R2, {"y - x^2"})));
  CHECK(euler_obstruction(parabola, point({1, 1})) == 1);
  CHECK(euler_obstruction(parabola, point({1, 2})) == 0);

  Cycle cusp;
  cusp.add(1, PrimeCycle::curve(I(R2, {"y^2 - x^3"})));
  CHECK(euler_obstruction(cusp, origin(2)) == 2);
  CHECK(euler_obstruction(cusp, point({1, 1})) == 1);
  CHECK(euler_obstruction(cusp, point({1, 2})) == 0);

  Cycle node;
  node.add(1, PrimeCycle::curve(I(R2, {"y^2 - x^2 - x^3"})));
  CHECK(euler_obstruction(node, origin(2)) == 2);

  Cycle axis;
  axis.add(-3, PrimeCycle::monomial_prime(R2, {1}));
  CHECK(euler_obstruction(axis, point({5, 0})) == -3);
  CHECK(euler_obstruction(axis, point({5, 1})) == 0);

  Cycle bad;
  bad.add(1, PrimeCycle::smooth_variety(I(R2, {"y^2 - x^3"})));
  CHECK(code_of([&] { euler_obstruction(bad, origin(2)); }) == ErrorCode::UnsupportedCycleKind);
  Cycle con;
  con.add(1, PrimeCycle::conormal_of(PrimeCycle::point(R2, origin(2))));
  CHECK(code_of([&] { euler_obstruction(con, origin(2)); }) == ErrorCode::UnsupportedCycleKind);
}

TEST_CASE("nu from the cycle examples") {
  auto R1 = Ring::make({"x"});
  auto R2 = Ring::make({"x", "y"});
  auto R3 = Ring::make({"x", "y", "z"});
  CHECK(nu_from_cycle(I(R1, {"x^2"}), PresentationClass::RegularSequence, origin(1)) == 2);
  CHECK(nu_from_cycle(I(R2, {"x^2", "y^2"}), PresentationClass::RegularSequence, origin(2)) == 4);
  auto surface = I(R3, {"z - x^2 - y^2"});
  CHECK(nu_from_cycle(surface, PresentationClass::Smooth, point({1, 1, 2})) == 1);
  CHECK(nu_from_cycle(surface, PresentationClass::Smooth, origin(3)) == 1);
  CHECK(code_of([&] {
          nu_from_cycle(surface, PresentationClass::Smooth, point({1, 1, 1}));
        }) == ErrorCode::PointNotOnX);
  // monomial route: nu of d(x^2 y^2) at the origin, on an axis and off it
  auto j = jacobian_of(R2, "x^2*y^2");
  CHECK(nu_from_cycle(j, PresentationClass::Monomial, origin(2)) == 1);
  CHECK(nu_from_cycle(j, PresentationClass::Monomial, point({3, 0})) == -1);
}

TEST_CASE("two routes agree on the critical gallery") {
  for (const auto& c : gallery::critical_gallery()) {
    CAPTURE(c.label);
    const auto n = c.f.ring()->arity();
    auto j = jacobian_ideal(c.f);
    auto nu = nu_from_cycle(j, PresentationClass::RegularSequence, origin(n));
    CHECK(nu == behrend_at_critical(c.f, origin(n)).nu);
  }
}

TEST_CASE("smooth charts through the cycle route") {
  std::mt19937 rng(5);
  for (int k = 0; k < 20; ++k) {
    auto chart = gallery::random_smooth_chart(rng);
    // the charts are smooth near the point only, so use the local rule
    auto value = behrend_at_ideal(chart.ideal, chart.point);
    CHECK(value.nu == (chart.dimension % 2 ? -1 : 1));
  }
}

TEST_CASE("dimension law on the gallery and random ideals") {
  std::size_t count = 0;
  for (const auto& c : gallery::critical_gallery()) {
    CAPTURE(c.label);
    auto cone = normal_cone_ideal(jacobian_ideal(c.f));
    CHECK(cone.dimension == static_cast<int>(c.f.ring()->arity()));
    CHECK(cone.conic);
    ++count;
  }
  std::mt19937 rng(23);
  auto R2 = Ring::make({"x", "y"});
  auto R3 = Ring::make({"x", "y", "z"});
  int random_done = 0;
  while (random_done < 12) {
    auto R = random_done % 3 == 2 ? R3 : R2;
    std::vector<Polynomial> gens;
    const std::size_t r = random_done % 2 ? R->arity() + 1 : 1;
    for (std::size_t j = 0; j < r; ++j)
      gens.push_back(testing::random_polynomial(rng, R, 2, 2, false) *
                     Polynomial::variable(R, j % R->arity()));
    Ideal ideal(R, gens);
    if (groebner_basis(ideal).is_unit()) continue;
    auto cone = normal_cone_ideal(ideal);
    CAPTURE(ideal.generators().size());
    CHECK(cone.dimension == static_cast<int>(R->arity()));
    CHECK(cone.conic);
    ++random_done;
    ++count;
  }
  CHECK(count >= 25);
}

TEST_CASE("L and pi are inverse") {
  std::mt19937 rng(77);
  auto R2 = Ring::make({"x", "y"});
  auto R3 = Ring::make({"x", "y", "z"});
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int round = 0; round < 60; ++round) {
    auto R = round % 2 ? R3 : R2;
    const std::size_t n = R->arity();
    Cycle c;
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < terms; ++k) {
      switch (rng() % 4) {
        case 0: {
          Point p;
          for (std::size_t i = 0; i < n; ++i) p.emplace_back(static_cast<long>(coef(rng)));
          c.add(coef(rng), PrimeCycle::point(R, p));
          break;
        }
        case 1: {
          std::vector<std::size_t> vars;
          for (std::size_t i = 0; i < n; ++i)
            if (rng() % 2) vars.push_back(i);
          c.add(coef(rng), PrimeCycle::monomial_prime(R, vars));
          break;
        }
        case 2:
          c.add(coef(rng), PrimeCycle::smooth_variety(Ideal(
                               R, {Polynomial::variable(R, 0) * Scalar(static_cast<long>(coef(rng))) +
                                   Polynomial::variable(R, 1)})));
          break;
        default:
          c.add(coef(rng), PrimeCycle::curve(I(R, n == 2 ? std::vector<std::string>{"y^2 - x^3"}
                                                         : std::vector<std::string>{"y^2 - x^3", "z"})));
      }
    }
    auto l = conormal_L(c);
    CHECK(projection_pi(l) == c);
    CHECK(conormal_L(projection_pi(l)) == l);
    for (const auto& t : l.terms()) {
      CHECK(t.prime.kind() == PrimeCycle::Kind::ConormalOf);
      CHECK(t.prime.ambient_arity() == 2 * n);
    }
  }
  CHECK(code_of([&] { projection_pi(distinguished_cycle(Ideal(R2), PresentationClass::Smooth)); }) ==
        ErrorCode::KindMismatch);
  Cycle w;
  w.add(1, PrimeCycle::conormal_of(PrimeCycle::point(R2, origin(2))));
  CHECK(code_of([&] { conormal_L(w); }) == ErrorCode::KindMismatch);
}

TEST_CASE("L signs") {
  auto R2 = Ring::make({"x", "y"});
  Cycle pt;
  pt.add(1, PrimeCycle::point(R2, origin(2)));
  CHECK(conormal_L(pt).terms()[0].coefficient == 1);
  Cycle line;
  line.add(1, PrimeCycle::monomial_prime(R2, {1}));
  CHECK(conormal_L(line).terms()[0].coefficient == -1);
}

TEST_CASE("cycle arithmetic merges terms") {
  auto R = Ring::make({"x"});
  Cycle a;
  a.add(2, PrimeCycle::point(R, origin(1)));
  a.add(-2, PrimeCycle::point(R, origin(1)));
  CHECK(a.is_zero());
  CHECK(a.to_string() == "0");
  Cycle b;
  b.add(1, PrimeCycle::smooth_variety(I(R, {"2*x - 2"})));
  b.add(1, PrimeCycle::smooth_variety(I(R, {"x - 1"})));
  REQUIRE(b.terms().size() == 1);
  CHECK(b.terms()[0].coefficient == 2);
}
