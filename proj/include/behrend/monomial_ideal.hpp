#ifndef BEHREND_MONOMIAL_IDEAL_HPP
#define BEHREND_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "behrend/monomial.hpp"

namespace behrend {

// Combinatorics of monomial ideals, given by generating monomials. These back
// the colength, dimension and multiplicity queries once a standard basis has
// produced a leading-term ideal.

/// Removes generators divisible by other generators; sorted, deterministic.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens);

struct StaircaseCount {
  /// Number of standard monomials, or nullopt when unbounded.
  std::optional<std::uint64_t> count;
  /// True when the answer is nullopt only because a standard monomial of
  /// degree above the bound exists.
  bool bound_limited = false;
};

/// Counts monomials outside the ideal. Unbounded if some variable has no pure
/// power among the generators.
StaircaseCount count_standard_monomials(const std::vector<Monomial>& gens,
                                        std::size_t arity,
                                        std::uint64_t degree_bound = 64);

/// Krull dimension of k[x]/(gens): the largest variable set S such that no
/// generator is supported inside S. -1 for the unit ideal.
int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t arity);

/// Minimal primes as sorted variable index sets (minimal vertex covers of the
/// generator supports).
std::vector<std::vector<std::size_t>> minimal_primes(const std::vector<Monomial>& gens,
                                                     std::size_t arity);

/// Numerator Q(t) of the Hilbert series Q(t)/(1-t)^n of k[x]/(gens),
/// coefficients by ascending power of t.
std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& gens,
                                            std::size_t arity);

/// Degree (multiplicity) of k[x]/(gens) from its Hilbert series.
std::uint64_t monomial_ideal_degree(const std::vector<Monomial>& gens, std::size_t arity);

}  // namespace behrend

#endif  // BEHREND_MONOMIAL_IDEAL_HPP
