#ifndef BEHREND_SINGULARITIES_HPP
#define BEHREND_SINGULARITIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "behrend/groebner.hpp"
#include "behrend/polynomial.hpp"

namespace behrend {

using Point = std::vector<Scalar>;

/// omega = sum f_i dx_i on affine space.
class OneForm {
 public:
  /// Throws ArityMismatch unless there is one component per variable.
  OneForm(RingPtr ring, std::vector<Polynomial> components);
  /// df.
  static OneForm exact(const Polynomial& f);

  const RingPtr& ring() const { return ring_; }
  std::span<const Polynomial> components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_.at(i); }
  /// The ideal (f_1, ..., f_n) of the zero locus.
  Ideal zero_ideal() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> components_;
};

Ideal jacobian_ideal(const Polynomial& f);

/// Rank of the Jacobian matrix of the generators evaluated at a point.
std::size_t jacobian_rank(std::span<const Polynomial> generators, std::span<const Scalar> point);

struct Smoothness {
  bool smooth = false;
  /// Dimension of Z(I) at the point.
  int local_dimension = 0;
  std::size_t jacobian_rank = 0;
};

/// Jacobian criterion against the local dimension. Throws PointNotOnVariety.
Smoothness is_smooth_at(const Ideal& ideal, std::span<const Scalar> point);

struct MilnorNumber {
  enum class Status { Finite, Infinite, NotCritical };
  Status status = Status::Finite;
  std::uint64_t value = 0;
  /// Infinite only because the staircase ran past the degree bound.
  bool bound_limited = false;
};

MilnorNumber milnor_number(const Polynomial& f, std::span<const Scalar> point);

/// chi(F_P) = 1 + (-1)^(n-1) mu for an isolated critical point (classical
/// Milnor theory). Throws NotCritical, NonIsolated.
std::int64_t milnor_fibre_euler(const Polynomial& f, std::span<const Scalar> point);

struct BehrendValue {
  std::int64_t nu = 0;
  /// "milnor" or "smooth".
  std::string route;
  std::optional<std::uint64_t> mu;
  std::optional<std::int64_t> milnor_fibre_euler;
  std::optional<int> dimension;
};

/// X = Z(df). Isolated critical points go through the Milnor fibre; a
/// non-isolated point is accepted only where Z(df) is smooth.
/// Throws PointNotOnX, Unsupported.
BehrendValue behrend_at_critical(const Polynomial& f, std::span<const Scalar> point);

/// X = Z(I), answered only at smooth points. Throws PointNotOnX, Unsupported.
BehrendValue behrend_at_ideal(const Ideal& ideal, std::span<const Scalar> point);

struct PairCheck {
  std::size_t i = 0, j = 0;  // 0-based, i < j
  /// d f_i / d x_j - d f_j / d x_i
  Polynomial difference;
  /// Its normal form modulo (f_1, ..., f_n); zero when the pair passes.
  Polynomial remainder;
};

struct AlmostClosedReport {
  bool almost_closed = true;
  /// Every pair, in order, up to and including the first failure.
  std::vector<PairCheck> checks;
  std::optional<PairCheck> failure;
};

AlmostClosedReport is_almost_closed(const OneForm& omega);

}  // namespace behrend

#endif  // BEHREND_SINGULARITIES_HPP
