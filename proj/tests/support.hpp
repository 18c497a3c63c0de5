#ifndef BEHREND_TESTS_SUPPORT_HPP
#define BEHREND_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "behrend/groebner.hpp"
#include "behrend/polynomial.hpp"

namespace behrend::testing {

inline Polynomial P(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

inline Ideal I(const RingPtr& ring, std::vector<std::string> gens) {
  return Ideal::parse(ring, gens);
}

inline std::vector<Scalar> point(std::initializer_list<long> coords) {
  std::vector<Scalar> out;
  for (long c : coords) out.emplace_back(c);
  return out;
}

inline std::vector<Scalar> origin(std::size_t n) { return std::vector<Scalar>(n, Scalar(0L)); }

/// Random polynomial with small integer coefficients.
inline Polynomial random_polynomial(std::mt19937& rng, const RingPtr& ring,
                                    unsigned max_terms, unsigned max_degree,
                                    bool allow_constant = true) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<unsigned> terms(1, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  std::vector<Term> out;
  unsigned count = terms(rng);
  for (unsigned k = 0; k < count; ++k) {
    Monomial m(ring->arity());
    unsigned budget = exp(rng);
    for (unsigned b = 0; b < budget; ++b)
      m[std::uniform_int_distribution<std::size_t>(0, ring->arity() - 1)(rng)] += 1;
    if (!allow_constant && m.is_one()) continue;
    int c = coef(rng);
    if (c == 0) c = 1;
    out.push_back({m, Scalar(std::int64_t{c}, ring->domain())});
  }
  return Polynomial::from_terms(ring, out);
}

}  // namespace behrend::testing

#endif  // BEHREND_TESTS_SUPPORT_HPP
