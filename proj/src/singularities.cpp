#include "behrend/singularities.hpp"

#include "behrend/error.hpp"

namespace behrend {

namespace {

std::int64_t sign_power(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

void require_arity(const RingPtr& ring, std::span<const Scalar> point) {
  if (point.size() != ring->arity())
    throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) +
                                              " coordinates, ring has " +
                                              std::to_string(ring->arity()));
}

std::size_t rank(std::vector<std::vector<Scalar>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = rows[r][c].inverse();
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      Scalar factor = rows[k][c] * inv;
      for (std::size_t cc = c; cc < cols; ++cc) rows[k][cc] -= factor * rows[r][cc];
    }
    ++r;
  }
  return r;
}

}  // namespace

OneForm::OneForm(RingPtr ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (components_.size() != ring_->arity())
    throw Error(ErrorCode::ArityMismatch, "a 1-form needs one component per variable");
  for (const auto& c : components_) require_same_ring(ring_, c.ring());
}

OneForm OneForm::exact(const Polynomial& f) {
  std::vector<Polynomial> parts;
  for (std::size_t i = 0; i < f.ring()->arity(); ++i) parts.push_back(f.derivative(i));
  return OneForm(f.ring(), std::move(parts));
}

Ideal OneForm::zero_ideal() const { return Ideal(ring_, components_); }

Ideal jacobian_ideal(const Polynomial& f) { return OneForm::exact(f).zero_ideal(); }

std::size_t jacobian_rank(std::span<const Polynomial> generators, std::span<const Scalar> point) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : generators) {
    std::vector<Scalar> row;
    for (std::size_t j = 0; j < g.ring()->arity(); ++j)
      row.push_back(g.derivative(j).evaluate(point));
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows));
}

Smoothness is_smooth_at(const Ideal& ideal, std::span<const Scalar> point) {
  require_arity(ideal.ring(), point);
  if (!ideal.vanishes_at(point))
    throw Error(ErrorCode::PointNotOnVariety, "the point is not on Z(I)");
  Smoothness s;
  const auto n = static_cast<int>(ideal.ring()->arity());
  s.jacobian_rank = jacobian_rank(ideal.generators(), point);
  if (s.jacobian_rank == ideal.generators().size()) {
    // complete intersection with independent differentials
    s.local_dimension = n - static_cast<int>(s.jacobian_rank);
    s.smooth = true;
    return s;
  }
  s.local_dimension = local_dimension(ideal.translate(point));
  s.smooth = static_cast<int>(s.jacobian_rank) == n - s.local_dimension;
  return s;
}

MilnorNumber milnor_number(const Polynomial& f, std::span<const Scalar> point) {
  require_arity(f.ring(), point);
  MilnorNumber out;
  Ideal jac = jacobian_ideal(f);
  if (!jac.vanishes_at(point)) {
    out.status = MilnorNumber::Status::NotCritical;
    return out;
  }
  Colength c = colength(jac.translate(point), MonomialOrder::local_degrevlex());
  if (c.is_infinite()) {
    out.status = MilnorNumber::Status::Infinite;
    out.bound_limited = c.bound_limited;
  } else {
    out.value = *c.value;
  }
  return out;
}

std::int64_t milnor_fibre_euler(const Polynomial& f, std::span<const Scalar> point) {
  MilnorNumber mu = milnor_number(f, point);
  if (mu.status == MilnorNumber::Status::NotCritical)
    throw Error(ErrorCode::NotCritical, "df does not vanish at the point");
  if (mu.status == MilnorNumber::Status::Infinite)
    throw Error(ErrorCode::NonIsolated, mu.bound_limited
                                            ? "Milnor number exceeds the staircase degree bound"
                                            : "the critical point is not isolated");
  const auto n = static_cast<std::int64_t>(f.ring()->arity());
  return 1 + sign_power(n - 1) * static_cast<std::int64_t>(mu.value);
}

BehrendValue behrend_at_critical(const Polynomial& f, std::span<const Scalar> point) {
  require_arity(f.ring(), point);
  Ideal jac = jacobian_ideal(f);
  if (!jac.vanishes_at(point)) throw Error(ErrorCode::PointNotOnX, "the point is not on Z(df)");
  MilnorNumber mu = milnor_number(f, point);
  BehrendValue v;
  const auto n = static_cast<std::int64_t>(f.ring()->arity());
  if (mu.status == MilnorNumber::Status::Finite) {
    std::int64_t chi = 1 + sign_power(n - 1) * static_cast<std::int64_t>(mu.value);
    v.nu = sign_power(n) * (1 - chi);
    v.route = "milnor";
    v.mu = mu.value;
    v.milnor_fibre_euler = chi;
    return v;
  }
  Smoothness s = is_smooth_at(jac, point);
  if (!s.smooth)
    throw Error(ErrorCode::Unsupported,
                "non-isolated critical point where Z(df) is singular");
  v.nu = sign_power(s.local_dimension);
  v.route = "smooth";
  v.dimension = s.local_dimension;
  return v;
}

BehrendValue behrend_at_ideal(const Ideal& ideal, std::span<const Scalar> point) {
  require_arity(ideal.ring(), point);
  if (!ideal.vanishes_at(point)) throw Error(ErrorCode::PointNotOnX, "the point is not on Z(I)");
  Smoothness s = is_smooth_at(ideal, point);
  if (!s.smooth)
    throw Error(ErrorCode::Unsupported,
                "singular point of an ideal presentation; give a critical-locus presentation");
  BehrendValue v;
  v.nu = sign_power(s.local_dimension);
  v.route = "smooth";
  v.dimension = s.local_dimension;
  return v;
}

AlmostClosedReport is_almost_closed(const OneForm& omega) {
  AlmostClosedReport report;
  StandardBasis gb = groebner_basis(omega.zero_ideal());
  const std::size_t n = omega.ring()->arity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      PairCheck check{i, j, omega[i].derivative(j) - omega[j].derivative(i),
                      Polynomial(omega.ring())};
      check.remainder = normal_form(check.difference, gb);
      report.checks.push_back(check);
      if (!check.remainder.is_zero()) {
        report.almost_closed = false;
        report.failure = std::move(check);
        return report;
      }
    }
  return report;
}

}  // namespace behrend
