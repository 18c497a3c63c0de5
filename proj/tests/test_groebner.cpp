#include <random>

#include "doctest.h"

#include "behrend/error.hpp"
#include "behrend/groebner.hpp"
#include "behrend/monomial_ideal.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace behrend;
using behrend::testing::I;
using behrend::testing::P;

namespace {

std::vector<std::string> as_strings(const StandardBasis& b) {
  std::vector<std::string> out;
  for (const auto& e : b.elements()) out.push_back(e.to_string());
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("groebner_basis examples") {
  auto R = Ring::make({"x", "y"});
  auto lex = MonomialOrder::lex();
  CHECK(as_strings(groebner_basis(I(R, {"x - y^2", "y"}), lex)) == Strings{"y", "x"});
  CHECK(as_strings(groebner_basis(I(R, {"x^2", "x"}))) == Strings{"x"});
  CHECK(groebner_basis(Ideal(R)).elements().empty());
  CHECK(groebner_basis(I(R, {"x*y - 1", "x"})).is_unit());
  CHECK_THROWS_AS(groebner_basis(I(R, {"x"}), MonomialOrder::local_degrevlex()), Error);
}

TEST_CASE("standard_basis examples in the local ring") {
  auto Rx = Ring::make({"x"});
  CHECK(as_strings(standard_basis(I(Rx, {"x + x^2"}))) == Strings{"x^2 + x"});
  CHECK(standard_basis(I(Rx, {"x + x^2"})).leading_monomials()[0] == Monomial::variable(1, 0));
  CHECK(standard_basis(I(Rx, {"x^2 - x^3"})).leading_monomials()[0] == Monomial::variable(1, 0, 2));
  auto R = Ring::make({"x", "y"});
  CHECK(as_strings(standard_basis(I(R, {"3*x^2", "3*y^2"}))) == Strings{"y^2", "x^2"});
  // 1 + x is a unit locally
  CHECK(standard_basis(I(Rx, {"1 + x"})).is_unit());
}

TEST_CASE("normal_form examples and idempotence") {
  auto R = Ring::make({"x", "y"});
  auto gx = groebner_basis(I(R, {"x"}));
  CHECK(normal_form(P(R, "x^2"), gx).is_zero());
  CHECK(normal_form(P(R, "y"), gx) == P(R, "y"));
  auto gx2 = groebner_basis(I(R, {"x^2"}));
  CHECK(normal_form(P(R, "x^2*y + y"), gx2) == P(R, "y"));
  CHECK_THROWS_AS(normal_form(P(Ring::make({"z"}), "z"), gx), Error);
}

TEST_CASE("ideal membership with certificates") {
  auto R = Ring::make({"x", "y"});
  Ideal J = I(R, {"y", "x - x*y"});
  CHECK(ideal_membership(P(R, "y"), J));
  CHECK_FALSE(ideal_membership(P(R, "1"), I(R, {"x", "y"})));
  CHECK(ideal_membership(P(R, "x"), J));
  auto cert = membership_certificate(P(R, "x"), J);
  REQUIRE(cert);
  CHECK((*cert)[0] * P(R, "y") + (*cert)[1] * P(R, "x - x*y") == P(R, "x"));
  CHECK_FALSE(membership_certificate(P(R, "1"), I(R, {"x", "y"})));
}

TEST_CASE("eliminate") {
  auto R = Ring::make({"t", "x", "y"});
  std::vector<std::size_t> drop_t{0};
  Ideal e = eliminate(I(R, {"t*x - 1", "y - t"}), drop_t);
  REQUIRE(e.generators().size() == 1);
  CHECK(e.generators()[0] == P(e.ring(), "x*y - 1"));
  CHECK(e.ring()->names() == std::vector<std::string>{"x", "y"});
  CHECK(eliminate(I(R, {"y - t*x"}), drop_t).is_zero());

  std::vector<std::size_t> none;
  Ideal same = eliminate(I(R, {"x^2 - y", "t"}), none);
  CHECK(groebner_basis(same).elements().size() == 2);

  // every eliminant lies in the ideal (certificate check)
  Ideal src = I(R, {"x - t^2", "y - t^3"});
  Ideal curve = eliminate(src, drop_t);
  std::vector<std::size_t> back{1, 2};
  for (const auto& g : curve.generators()) {
    auto cert = membership_certificate(g.embed(R, back), src);
    CHECK(cert.has_value());
  }
  CHECK(groebner_basis(curve).elements()[0] == P(curve.ring(), "x^3 - y^2"));
}

TEST_CASE("colength examples") {
  auto R = Ring::make({"x", "y"});
  auto dp = MonomialOrder::degrevlex();
  CHECK(colength(I(R, {"x", "y"}), dp).value == 1u);
  CHECK(colength(I(R, {"x^2", "y^2"}), dp).value == 4u);
  auto inf = colength(I(R, {"x"}), dp);
  CHECK(inf.is_infinite());
  CHECK_FALSE(inf.bound_limited);
  auto limited = colength(I(R, {"x^70", "y"}), dp);
  CHECK(limited.is_infinite());
  CHECK(limited.bound_limited);
  CHECK(colength(I(R, {"x^70", "y"}), dp, 100).value == 70u);
  CHECK(colength(I(R, {"x", "1 + x"}), dp).value == 0u);
  CHECK(colength(I(R, {"1 + x", "y"}), dp).value == 1u);
  // local vs global: (x^2 - x) has two points globally, one locally
  auto Rx = Ring::make({"x"});
  CHECK(colength(I(Rx, {"x^2 - x"}), dp).value == 2u);
  CHECK(colength(I(Rx, {"x^2 - x"}), MonomialOrder::local_degrevlex()).value == 1u);
}

TEST_CASE("krull dimension and local dimension") {
  auto R = Ring::make({"x", "y"});
  CHECK(krull_dimension(I(R, {"x"})) == 1);
  CHECK(krull_dimension(I(R, {"x", "y"})) == 0);
  CHECK(krull_dimension(Ideal(R)) == 2);
  CHECK(krull_dimension(I(R, {"1"})) == -1);
  CHECK(local_dimension(I(R, {"x*(y - 1)", "y*(y-1)"})) == 0);
  CHECK(krull_dimension(I(R, {"x*(y - 1)", "y*(y-1)"})) == 1);
  CHECK(local_dimension(I(R, {"x - 1"})) == -1);
}

TEST_CASE("Hilbert-Samuel multiplicity") {
  auto R = Ring::make({"x", "y"});
  CHECK(hs_multiplicity(I(R, {"y^2 - x^3"})) == 2u);
  CHECK(hs_multiplicity(I(R, {"y - x^2"})) == 1u);
  CHECK(hs_multiplicity(I(R, {"x*y"})) == 2u);
  CHECK(hs_multiplicity(I(R, {"x^2", "y^3"})) == 6u);
  CHECK(hs_multiplicity(I(R, {"y^3 - x^5"})) == 3u);
  try {
    hs_multiplicity(I(R, {"y - 1"}));
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OriginNotOnVariety);
  }
}

TEST_CASE("monomial ideal combinatorics against lattice enumeration") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 2;
    std::vector<Monomial> gens;
    for (std::size_t v = 0; v < n; ++v)
      gens.push_back(Monomial::variable(n, v, 1 + rng() % 5));
    for (int k = 0; k < 3; ++k) {
      Monomial m(n);
      for (std::size_t v = 0; v < n; ++v) m[v] = rng() % 4;
      gens.push_back(m);
    }
    auto counted = count_standard_monomials(gens, n);
    REQUIRE(counted.count);
    CHECK(*counted.count == oracle::lattice_count(gens, n, 6));
  }
  std::vector<Monomial> axes{Monomial(std::vector<Exponent>{1, 1})};
  CHECK(minimal_primes(axes, 2) == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK(monomial_ideal_degree(axes, 2) == 2u);
}

TEST_CASE("colength agrees with the linear-algebra oracle") {
  auto R = Ring::make({"x", "y"});
  std::vector<std::vector<std::string>> zero_dim{
      {"x^2", "y^2"},          {"x^3 - y", "y^2"},     {"x*y", "x^2 + y^2"},
      {"x^2 - y^3", "x*y"},    {"x^3", "y^2 - x"},     {"x^2 + x*y", "y^3"},
  };
  for (const auto& gens : zero_dim) {
    Ideal J = I(R, gens);
    auto local = colength(J, MonomialOrder::local_degrevlex());
    REQUIRE(local.value);
    CHECK(oracle::local_colength(J) == *local.value);
    auto global = colength(J, MonomialOrder::degrevlex());
    REQUIRE(global.value);
    CHECK(oracle::global_colength(J) == *global.value);
  }
  // different local and global answers
  Ideal two_points = I(R, {"x^2 - x", "y"});
  CHECK(colength(two_points, MonomialOrder::degrevlex()).value == 2u);
  CHECK(oracle::global_colength(two_points) == 2u);
  CHECK(oracle::local_colength(two_points) == 1u);
}

TEST_CASE("reduced bases are unique under re-presentation") {
  std::mt19937 rng(99);
  auto R = Ring::make({"x", "y", "z"});
  std::vector<std::vector<std::string>> ideals{
      {"x^2 - y", "y^2 - z*x"}, {"x*y - z", "y*z - x", "x*z - y"}, {"x^3 - y*z", "y^2 - x"}};
  for (const auto& gens : ideals) {
    Ideal J = I(R, gens);
    for (auto order : {MonomialOrder::degrevlex(), MonomialOrder::lex()}) {
      StandardBasis ref = groebner_basis(J, order);
      CHECK(satisfies_buchberger_criterion(ref));
      for (int k = 0; k < 10; ++k) {
        // unitriangular change of generators is invertible
        std::vector<Polynomial> alt;
        for (std::size_t i = 0; i < J.generators().size(); ++i) {
          Polynomial g = J.generators()[i];
          for (std::size_t j = 0; j < i; ++j)
            g += testing::random_polynomial(rng, R, 2, 1) * alt[j];
          alt.push_back(g);
        }
        // permuted, rescaled presentation of the same ideal
        std::shuffle(alt.begin(), alt.end(), rng);
        alt.front() = alt.front() * Scalar(mpq_class(-3, 2));
        CHECK(as_strings(groebner_basis(Ideal(R, alt), order)) == as_strings(ref));
      }
    }
  }
}

TEST_CASE("normal form is idempotent and stays in the coset") {
  std::mt19937 rng(5);
  auto R = Ring::make({"x", "y", "z"});
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(testing::random_polynomial(rng, R, 3, 3, false));
    Ideal J(R, gens);
    StandardBasis gb = groebner_basis(J);
    Polynomial f = testing::random_polynomial(rng, R, 5, 4);
    Polynomial r = normal_form(f, gb);
    CHECK(normal_form(r, gb) == r);
    CHECK(ideal_membership(f - r, J));
    for (const auto& t : r.terms())
      for (const auto& lm : gb.leading_monomials()) CHECK_FALSE(lm.divides(t.monomial));
  }
}

TEST_CASE("modular bases advise only") {
  auto R = Ring::make({"x", "y"});
  auto R7 = R->with_domain(CoefficientDomain::prime_field(7));
  Ideal J = I(R, {"x^3 + y^3", "x*y"});
  std::vector<Polynomial> modular;
  for (const auto& g : J.generators()) modular.push_back(g.reduce_mod(R7));
  auto c = colength(Ideal(R7, modular), MonomialOrder::local_degrevlex());
  CHECK(c.value == colength(J, MonomialOrder::local_degrevlex()).value);
}
