#ifndef BEHREND_EULER_HPP
#define BEHREND_EULER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "behrend/groebner.hpp"

namespace behrend {

/// A locally closed piece with its compactly supported Euler characteristic.
struct Stratum {
  std::string label;
  std::int64_t chi = 0;
  int dim = 0;
  /// Where chi came from.
  std::string how;
  /// chi came from the point-count oracle.
  bool heuristic = false;
};

class Stratification {
 public:
  Stratification() = default;
  explicit Stratification(std::vector<Stratum> strata);

  /// Throws InvalidArgument on a repeated label.
  void add(Stratum s);
  const std::vector<Stratum>& strata() const { return strata_; }
  const Stratum* find(const std::string& label) const;
  std::int64_t chi() const;
  bool heuristic() const;

  /// Replaces one stratum by pieces whose chi values add up to its chi
  /// (InvalidArgument otherwise, or if the label is unknown).
  Stratification refine(const std::string& label, std::vector<Stratum> pieces) const;

 private:
  std::vector<Stratum> strata_;
};

/// Strata a x b, labelled "a*b", with chi and dim multiplied/added.
Stratification product(const Stratification& a, const Stratification& b);

class ConstructibleFunction {
 public:
  ConstructibleFunction() = default;
  explicit ConstructibleFunction(std::map<std::string, std::int64_t> values)
      : values_(std::move(values)) {}

  void set(const std::string& label, std::int64_t v) { values_[label] = v; }
  std::optional<std::int64_t> at(const std::string& label) const;
  const std::map<std::string, std::int64_t>& values() const { return values_; }

 private:
  std::map<std::string, std::int64_t> values_;
};

/// (f boxtimes g)(a*b) = f(a) g(b), labels as in product().
ConstructibleFunction box_product(const ConstructibleFunction& f, const ConstructibleFunction& g);

struct WeightedEuler {
  std::int64_t value = 0;
  /// Some stratum chi came from the point-count oracle.
  bool heuristic = false;
  /// n -> chi{f = n}
  std::map<std::int64_t, std::int64_t> level_sets;
};

/// sum over strata f(S) chi(S). Throws MissingValue when f is not total.
WeightedEuler weighted_euler(const Stratification& s, const ConstructibleFunction& f);

enum class ChiOp { DisjointUnion, Product, Complement };

/// DisjointUnion: sum. Product: product. Complement: args = {chi(X), chi(Z)}
/// gives chi(X \ Z).
std::int64_t chi_combine(ChiOp op, const std::vector<std::int64_t>& args);

struct PointCount {
  std::vector<std::uint32_t> qs;
  std::vector<std::uint64_t> counts;
  /// N(q) by ascending degree.
  std::vector<std::int64_t> polynomial;
  std::int64_t chi = 0;
  /// Always true: the fit assumes Z(I) is polynomial-count.
  bool heuristic = true;
};

/// Counts F_q-points for prime powers q <= 16 and fits the lowest-degree
/// integer polynomial through them; chi = N(1). Throws TooLarge (arity > 4 or
/// q > 16), InvalidArgument (q not a prime power, or a denominator divisible
/// by the characteristic), NoPolynomialFit.
PointCount point_count_chi(const Ideal& ideal, const std::vector<std::uint32_t>& qs);

/// Number of F_q-points of Z(I); q a prime power <= 16.
std::uint64_t count_points(const Ideal& ideal, std::uint32_t q);

struct HilbertRow {
  int n = 0;
  std::uint64_t count = 0;
  /// (-1)^n count, using the external weight nu = (-1)^n on Hilb^n(C^3).
  std::int64_t signed_term = 0;
  std::uint64_t macmahon = 0;
};

struct HilbertDemo {
  std::vector<HilbertRow> rows;
  bool agree = true;
};

/// Plane partitions of n (monomial ideals of colength n in three variables).
std::uint64_t count_plane_partitions(int n);
/// Coefficients of prod_k (1 - q^k)^-k up to q^n_max.
std::vector<std::uint64_t> macmahon_coefficients(int n_max);
/// Throws BoundExceeded for n_max > 12, InvalidArgument for n_max < 0.
HilbertDemo hilbert_demo(int n_max);

/// Y = A^1 with nu = -1, Z = Z(x^2) the fat origin with its own nu, U = Y \ 0.
struct NonAdditivityWitness {
  std::int64_t chi_tilde_y = 0;
  std::int64_t chi_tilde_u = 0;
  std::int64_t chi_tilde_z = 0;
  /// chi(Z, nu_Y): the ambient function restricted to Z.
  std::int64_t chi_tilde_z_in_y = 0;
};

NonAdditivityWitness non_additivity_witness();

}  // namespace behrend

#endif  // BEHREND_EULER_HPP
