#ifndef BEHREND_CYCLES_HPP
#define BEHREND_CYCLES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "behrend/groebner.hpp"
#include "behrend/singularities.hpp"

namespace behrend {

/// A prime cycle on affine space over the ring's variables.
class PrimeCycle {
 public:
  enum class Kind { Point, SmoothVariety, Curve, MonomialPrime, ConormalOf };

  static PrimeCycle point(RingPtr ring, Point p);
  static PrimeCycle smooth_variety(Ideal ideal);
  static PrimeCycle curve(Ideal ideal);
  /// The coordinate subspace where the listed variables vanish.
  static PrimeCycle monomial_prime(RingPtr ring, std::vector<std::size_t> vanishing);
  static PrimeCycle conormal_of(const PrimeCycle& base);

  Kind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }
  /// Arity of the space the cycle lives in: doubled for conormals.
  std::size_t ambient_arity() const;
  const Point& coordinates() const { return point_; }
  const Ideal& ideal() const { return *ideal_; }
  const std::vector<std::size_t>& vanishing() const { return vars_; }
  const PrimeCycle& base() const { return *base_; }

  /// Dimension of the cycle itself; for a conormal, that of its base's
  /// projection is `base().dimension()`.
  int dimension() const;

  /// Stable comparison key: equal keys mean equal cycles. Ideals compare by
  /// their reduced degrevlex basis.
  const std::string& key() const { return key_; }
  std::string kind_name() const;
  /// Human-readable data: coordinates, generators, or vanishing variables.
  std::string describe() const;

 private:
  PrimeCycle() = default;
  void finish();

  Kind kind_ = Kind::Point;
  RingPtr ring_;
  Point point_;
  std::shared_ptr<const Ideal> ideal_;
  std::vector<std::size_t> vars_;
  std::shared_ptr<const PrimeCycle> base_;
  int dim_ = 0;
  std::string key_;
};

struct CycleTerm {
  std::int64_t coefficient;
  PrimeCycle prime;
};

/// Finite integer combination of prime cycles, merged and sorted by key.
class Cycle {
 public:
  Cycle() = default;
  void add(std::int64_t coefficient, const PrimeCycle& prime);
  Cycle& operator+=(const Cycle& o);
  const std::vector<CycleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Cycle& o) const;
  std::string to_string() const;

 private:
  std::vector<CycleTerm> terms_;
};

/// One irreducible component of a normal cone.
struct ConeComponent {
  /// Base variables vanishing on the component's support.
  std::vector<std::size_t> base_vanishing;
  /// Fiber variables vanishing on the support.
  std::vector<std::size_t> fiber_vanishing;
  /// Length of the cone at the generic point.
  std::uint64_t multiplicity = 0;
  /// Dimension of the projection to the base.
  int projection_dimension = 0;
  /// The support is a coordinate subspace of the total space.
  bool linear = false;
  /// For a point component of a zero-dimensional presentation.
  std::optional<Point> point;
};

struct ConeIdealReport {
  /// Q[x..., p1..pr]; the base variables come first.
  RingPtr ring;
  std::size_t base_arity = 0;
  /// Reduced degrevlex basis of the cone ideal.
  Ideal ideal{RingPtr{}};
  int dimension = 0;
  bool conic = false;
  std::vector<ConeComponent> components;
};

/// C = Spec of the associated graded ring: the kernel of p_i -> t g_i,
/// obtained by eliminating t, plus I. Throws UnitIdeal.
ConeIdealReport normal_cone_ideal(const Ideal& ideal);

/// True when a reduced Groebner basis is homogeneous in the variables
/// fiber_start, fiber_start + 1, ... of the ring.
bool is_conic(const Ideal& cone_ideal, std::size_t fiber_start);

enum class PresentationClass { Smooth, RegularSequence, Monomial };

std::string presentation_class_name(PresentationClass c);

/// Components of the normal cone of a monomial ideal with their lengths.
/// Generators must be single terms (UnsupportedPresentation otherwise).
std::vector<ConeComponent> monomial_cone_components(const Ideal& ideal);

/// Rational points of a zero-dimensional ideal. Throws IrrationalPoint when
/// some point of Z(I) has a non-rational coordinate, InvalidArgument when the
/// ideal is not zero-dimensional.
std::vector<Point> rational_points(const Ideal& ideal);

/// c_X = sum over cone components of (-1)^dim pi(C') mult(C') pi(C').
/// Throws UnsupportedPresentation, IrrationalPoint.
Cycle distinguished_cycle(const Ideal& ideal, PresentationClass cls);

/// Linear in the cycle. Curve values use Eu = Hilbert-Samuel multiplicity.
/// Throws UnsupportedCycleKind.
std::int64_t euler_obstruction(const Cycle& c, std::span<const Scalar> point);

std::int64_t nu_from_cycle(const Ideal& ideal, PresentationClass cls,
                           std::span<const Scalar> point);

/// V -> (-1)^dim V [conormal of V]. Throws KindMismatch on conormal input.
Cycle conormal_L(const Cycle& c);
/// [conormal of V] -> (-1)^dim V [V]. Throws KindMismatch otherwise.
Cycle projection_pi(const Cycle& c);

}  // namespace behrend

#endif  // BEHREND_CYCLES_HPP
