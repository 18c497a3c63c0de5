#ifndef BEHREND_GROEBNER_HPP
#define BEHREND_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "behrend/monomial.hpp"
#include "behrend/polynomial.hpp"

namespace behrend {

/// An ideal given by generators. Zero generators are dropped.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal parse(const RingPtr& ring, std::span<const std::string> texts);

  const RingPtr& ring() const { return ring_; }
  std::span<const Polynomial> generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  /// Sum of ideals in the same ring.
  Ideal operator+(const Ideal& o) const;
  /// Image under the same renaming as Polynomial::embed.
  Ideal embed(const RingPtr& target, std::span<const std::size_t> index_map) const;
  Ideal translate(std::span<const Scalar> point) const;

  /// True when all generators vanish at the point.
  bool vanishes_at(std::span<const Scalar> point) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

/// A Groebner basis (global order) or standard basis (local order).
/// Elements are monic, minimal, sorted ascending by leading monomial; global
/// bases are also tail-reduced, hence unique for (ideal, order).
class StandardBasis {
 public:
  StandardBasis(Ideal source, MonomialOrder order, std::vector<Polynomial> elements);

  const Ideal& source() const { return source_; }
  const RingPtr& ring() const { return source_.ring(); }
  const MonomialOrder& order() const { return order_; }
  std::span<const Polynomial> elements() const { return elements_; }
  std::vector<Monomial> leading_monomials() const;
  /// True when the basis is {1}.
  bool is_unit() const;

 private:
  Ideal source_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

/// Buchberger with the normal selection strategy and both pair criteria.
/// Precondition: order is global (InvalidArgument otherwise).
StandardBasis groebner_basis(const Ideal& ideal,
                             MonomialOrder order = MonomialOrder::degrevlex());

/// Standard basis in the local ring at the origin, using Mora's normal form.
/// Precondition: order is local.
StandardBasis standard_basis(const Ideal& ideal,
                             MonomialOrder order = MonomialOrder::local_degrevlex());

/// Groebner or standard basis depending on the order.
StandardBasis compute_basis(const Ideal& ideal, MonomialOrder order);

/// Global order: full remainder, no term divisible by a leading monomial.
/// Local order: Mora's weak normal form (leading term reduced); zero exactly
/// when f lies in the ideal generated in the local ring.
Polynomial normal_form(const Polynomial& f, const StandardBasis& basis);

/// Checks every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const StandardBasis& basis);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);

/// Cofactors c with f = sum c_i * g_i over the ideal's generators, or
/// nullopt if f is not in the ideal.
std::optional<std::vector<Polynomial>> membership_certificate(const Polynomial& f,
                                                              const Ideal& ideal);

/// Generators of the intersection of the ideal with the subring on the kept
/// variables; the result lives in that subring (kept names, original order).
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop);

/// The subring used by eliminate and the index map from it into the ring.
RingPtr subring_without(const RingPtr& ring, std::span<const std::size_t> drop,
                        std::vector<std::size_t>* index_map = nullptr);

struct Colength {
  std::optional<std::uint64_t> value;
  bool bound_limited = false;

  bool is_infinite() const { return !value.has_value(); }
};

/// Dimension of k[x]/I (global order) or of the local ring at the origin
/// modulo I (local order), as the number of standard monomials.
Colength colength(const Ideal& ideal, MonomialOrder order,
                  std::uint64_t degree_bound = 64);
Colength colength(const StandardBasis& basis, std::uint64_t degree_bound = 64);

/// Krull dimension of k[x]/I; -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);

/// Krull dimension of the local ring at the origin modulo I; -1 if the
/// origin is not on Z(I).
int local_dimension(const Ideal& ideal);

/// Hilbert-Samuel multiplicity of the local ring at the origin.
/// Throws OriginNotOnVariety.
std::uint64_t hs_multiplicity(const Ideal& ideal);

}  // namespace behrend

#endif  // BEHREND_GROEBNER_HPP
