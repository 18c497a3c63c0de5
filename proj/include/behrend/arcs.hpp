#ifndef BEHREND_ARCS_HPP
#define BEHREND_ARCS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "behrend/polynomial.hpp"
#include "behrend/singularities.hpp"

namespace behrend {

/// Truncated power series in t: coefficient p of t^p, p = 0..order, each a
/// polynomial in the parameter ring.
class Series {
 public:
  Series(RingPtr params, std::size_t order);
  static Series constant(RingPtr params, std::size_t order, const Polynomial& c);

  const RingPtr& params() const { return params_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const Polynomial& operator[](std::size_t p) const { return coeffs_.at(p); }
  Polynomial& operator[](std::size_t p) { return coeffs_.at(p); }
  std::span<const Polynomial> coefficients() const { return coeffs_; }

  Series& operator+=(const Series& o);
  Series operator*(const Series& o) const;
  Series operator*(const Polynomial& c) const;
  /// Lowest p with a nonzero coefficient; nullopt if zero through the order.
  std::optional<std::size_t> valuation() const;
  bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

 private:
  RingPtr params_;
  std::vector<Polynomial> coeffs_;
};

/// gamma: Spec K[[t]] -> A^n with gamma_i(t) = sum_p gamma_{i,p} t^p.
class ArcSeries {
 public:
  ArcSeries(RingPtr params, std::vector<Series> components);

  /// components are polynomials in (params..., t), where t is the last
  /// variable of `with_t`; terms past `order` are dropped.
  static ArcSeries from_polynomials(const RingPtr& params, const RingPtr& with_t,
                                    std::span<const Polynomial> components, std::size_t order);

  const RingPtr& params() const { return params_; }
  std::size_t order() const { return order_; }
  std::size_t arity() const { return components_.size(); }
  const Series& operator[](std::size_t i) const { return components_.at(i); }
  /// gamma_{i,p}
  const Polynomial& coefficient(std::size_t i, std::size_t p) const { return components_.at(i)[p]; }

  std::string to_string(const Ring& coordinates) const;

 private:
  RingPtr params_;
  std::size_t order_;
  std::vector<Series> components_;
};

/// Reads
///   order: 8
///   x = u + v*t^2
///   y = v*t
/// against the coordinate ring. Parameters are the identifiers other than t
/// on the right-hand sides, in order of first appearance. A missing header
/// means order 8. Throws SyntaxError, UnknownVariable, InvalidArgument.
ArcSeries parse_arc(std::string_view text, const RingPtr& coordinates);

/// f(gamma(t)) truncated at the arc's order. Throws ArityMismatch.
Series compose_along_arc(const Polynomial& f, const ArcSeries& gamma);

/// Largest m <= order with t^m dividing every f_i(gamma(t)); nullopt when
/// all compositions vanish through the truncation order.
std::optional<std::size_t> arc_vanishing_order(const OneForm& omega, const ArcSeries& gamma);

/// A 1- or 2-form in the parameter differentials ds_j with polynomial
/// coefficients. 2-form keys are normalized to j1 < j2.
class ParameterForm {
 public:
  ParameterForm(RingPtr params, unsigned degree);
  /// The differential of a parameter polynomial.
  static ParameterForm differential(const Polynomial& f);

  const RingPtr& params() const { return params_; }
  unsigned degree() const { return degree_; }
  const std::map<std::vector<std::size_t>, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ParameterForm wedge(const ParameterForm& o) const;
  /// d of a 1-form.
  ParameterForm exterior_derivative() const;
  ParameterForm& operator+=(const ParameterForm& o);
  ParameterForm& operator-=(const ParameterForm& o);
  ParameterForm operator*(const Polynomial& c) const;
  ParameterForm operator*(const Scalar& c) const;
  bool operator==(const ParameterForm& o) const;

  /// "0", "du∧dv", "(2*u)*du + dv".
  std::string to_string() const;

 private:
  void add(std::vector<std::size_t> key, const Polynomial& c);

  RingPtr params_;
  unsigned degree_;
  std::map<std::vector<std::size_t>, Polynomial> terms_;
};

/// sum_i d(gamma_{i,0}) ∧ d(coefficient of t^m in f_i(gamma)).
/// Throws OrderTooLow when the certified vanishing order is below m or the
/// arc is truncated before m.
ParameterForm lagrangian_obstruction(const OneForm& omega, const ArcSeries& gamma, std::size_t m);

/// The same 2-form as -(1/m!) d(sum_i F_i^(m) dc_i^(0)), with
/// F_i^(p) = p! [t^p] f_i(gamma) and c_i^(p) = p! gamma_{i,p}.
ParameterForm lagrangian_obstruction_via_derivatives(const OneForm& omega,
                                                    const ArcSeries& gamma, std::size_t m);

/// Coefficient of t^p dt in gamma^*(d omega), computed from
/// d omega = sum_{i<j} (d_i f_j - d_j f_i) dx_i ∧ dx_j and the series
/// differentials d gamma_i. Needs p + 1 <= order.
ParameterForm pullback_dt_coefficient(const OneForm& omega, const ArcSeries& gamma, std::size_t p);

/// The same coefficient from the binomial expansion
/// (1/p!) sum_k C(p,k) sum_i (c_i^(p+1-k) dF_i^(k) - F_i^(k+1) dc_i^(p-k)).
ParameterForm pullback_dt_coefficient_binomial(const OneForm& omega, const ArcSeries& gamma,
                                               std::size_t p);

}  // namespace behrend

#endif  // BEHREND_ARCS_HPP
