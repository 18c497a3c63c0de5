#include "behrend/euler.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <set>

#include <gmpxx.h>

#include "behrend/error.hpp"
#include "behrend/singularities.hpp"

namespace behrend {

// ---------------------------------------------------------------- strata

Stratification::Stratification(std::vector<Stratum> strata) {
  for (auto& s : strata) add(std::move(s));
}

void Stratification::add(Stratum s) {
  if (find(s.label)) throw Error(ErrorCode::InvalidArgument, "duplicate stratum label '" + s.label + "'");
  strata_.push_back(std::move(s));
}

const Stratum* Stratification::find(const std::string& label) const {
  for (const auto& s : strata_)
    if (s.label == label) return &s;
  return nullptr;
}

std::int64_t Stratification::chi() const {
  std::int64_t total = 0;
  for (const auto& s : strata_) total += s.chi;
  return total;
}

bool Stratification::heuristic() const {
  return std::any_of(strata_.begin(), strata_.end(), [](const Stratum& s) { return s.heuristic; });
}

Stratification Stratification::refine(const std::string& label, std::vector<Stratum> pieces) const {
  const Stratum* target = find(label);
  if (!target) throw Error(ErrorCode::InvalidArgument, "no stratum '" + label + "'");
  std::int64_t sum = 0;
  for (const auto& p : pieces) sum += p.chi;
  if (sum != target->chi)
    throw Error(ErrorCode::InvalidArgument, "refinement of '" + label + "' has chi " +
                                                std::to_string(sum) + ", expected " +
                                                std::to_string(target->chi));
  Stratification out;
  for (const auto& s : strata_) {
    if (s.label != label) {
      out.add(s);
      continue;
    }
    for (auto& p : pieces) out.add(std::move(p));
  }
  return out;
}

Stratification product(const Stratification& a, const Stratification& b) {
  Stratification out;
  for (const auto& s : a.strata())
    for (const auto& t : b.strata())
      out.add({s.label + "*" + t.label, s.chi * t.chi, s.dim + t.dim,
               "product: (" + s.how + ") x (" + t.how + ")", s.heuristic || t.heuristic});
  return out;
}

std::optional<std::int64_t> ConstructibleFunction::at(const std::string& label) const {
  auto it = values_.find(label);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

ConstructibleFunction box_product(const ConstructibleFunction& f, const ConstructibleFunction& g) {
  ConstructibleFunction out;
  for (const auto& [a, u] : f.values())
    for (const auto& [b, v] : g.values()) out.set(a + "*" + b, u * v);
  return out;
}

WeightedEuler weighted_euler(const Stratification& s, const ConstructibleFunction& f) {
  WeightedEuler out;
  for (const auto& stratum : s.strata()) {
    auto v = f.at(stratum.label);
    if (!v) throw Error(ErrorCode::MissingValue, "no value on stratum '" + stratum.label + "'");
    out.value += *v * stratum.chi;
    out.level_sets[*v] += stratum.chi;
    out.heuristic = out.heuristic || stratum.heuristic;
  }
  return out;
}

std::int64_t chi_combine(ChiOp op, const std::vector<std::int64_t>& args) {
  switch (op) {
    case ChiOp::DisjointUnion: {
      std::int64_t s = 0;
      for (auto a : args) s += a;
      return s;
    }
    case ChiOp::Product: {
      std::int64_t p = 1;
      for (auto a : args) p *= a;
      return p;
    }
    case ChiOp::Complement:
      if (args.size() != 2)
        throw Error(ErrorCode::InvalidArgument, "complement takes chi(X) and chi(Z)");
      return args[0] - args[1];
  }
  return 0;
}

// ---------------------------------------------------------------- finite fields

namespace {

/// GF(p^k) with elements encoded as base-p digit strings of a residue
/// polynomial modulo a fixed irreducible.
class SmallField {
 public:
  explicit SmallField(std::uint32_t q) : q_(q) {
    p_ = 0;
    for (std::uint32_t d = 2; d <= q; ++d)
      if (q % d == 0) {
        p_ = d;
        break;
      }
    std::uint32_t rest = q;
    k_ = 0;
    while (rest % p_ == 0) {
      rest /= p_;
      ++k_;
    }
    if (rest != 1) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
    // x^k + ... low coefficients, ascending
    static const std::array<std::pair<std::uint32_t, std::vector<std::uint32_t>>, 4> modulus{{
        {4, {1, 1}}, {8, {1, 1, 0}}, {9, {1, 0}}, {16, {1, 1, 0, 0}}}};
    std::vector<std::uint32_t> low;
    if (k_ > 1) {
      auto it = std::find_if(modulus.begin(), modulus.end(), [&](const auto& m) { return m.first == q; });
      if (it == modulus.end()) throw Error(ErrorCode::TooLarge, "field size beyond the tables");
      low = it->second;
    }
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<std::uint32_t> s(k_);
        for (std::uint32_t i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[a * q + b] = encode(s);
        std::vector<std::uint32_t> prod(2 * k_, 0);
        for (std::uint32_t i = 0; i < k_; ++i)
          for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        // x^k = -(low)
        for (std::uint32_t d = 2 * k_; d-- > k_;) {
          std::uint32_t c = prod[d];
          if (!c) continue;
          prod[d] = 0;
          for (std::uint32_t i = 0; i < k_; ++i)
            prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * low[i]) % p_;
        }
        prod.resize(k_);
        mul_[a * q + b] = encode(prod);
      }
  }

  std::uint32_t size() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// Image of a rational number in the prime subfield.
  std::uint32_t from_rational(const mpq_class& v) const {
    mpz_class pz = p_;
    mpz_class num = v.get_num() % pz, den = v.get_den() % pz;
    if (num < 0) num += pz;
    if (den == 0)
      throw Error(ErrorCode::InvalidArgument,
                  "coefficient denominator divisible by " + std::to_string(p_));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    return static_cast<std::uint32_t>(mpz_class(num * inv % pz).get_ui());
  }

 private:
  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (std::uint32_t i = k_; i-- > 0;) a = a * p_ + d[i];
    return a;
  }

  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> add_, mul_;
};

struct FieldPolynomial {
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> terms;
};

}  // namespace

std::uint64_t count_points(const Ideal& ideal, std::uint32_t q) {
  const std::size_t n = ideal.ring()->arity();
  if (n > 4) throw Error(ErrorCode::TooLarge, "point counting is limited to 4 variables");
  if (q > 16) throw Error(ErrorCode::TooLarge, "point counting is limited to q <= 16");
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be a prime power");
  if (!ideal.ring()->domain().is_rational())
    throw Error(ErrorCode::InvalidArgument, "point counting expects rational coefficients");
  SmallField field(q);
  std::vector<FieldPolynomial> gens;
  for (const auto& g : ideal.generators()) {
    FieldPolynomial fp;
    for (const auto& t : g.terms()) {
      std::uint32_t c = field.from_rational(t.coefficient.rational());
      if (!c) continue;
      std::vector<std::uint32_t> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
      fp.terms.emplace_back(std::move(e), c);
    }
    gens.push_back(std::move(fp));
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::uint64_t hits = 0;
  std::vector<std::uint32_t> x(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
    bool zero = true;
    for (const auto& g : gens) {
      std::uint32_t acc = 0;
      for (const auto& [e, coef] : g.terms) {
        std::uint32_t v = coef;
        for (std::size_t i = 0; i < n && v; ++i)
          if (e[i]) v = field.mul(v, field.pow(x[i], e[i]));
        acc = field.add(acc, v);
      }
      if (acc) {
        zero = false;
        break;
      }
    }
    if (zero) ++hits;
  }
  return hits;
}

PointCount point_count_chi(const Ideal& ideal, const std::vector<std::uint32_t>& qs) {
  if (qs.empty()) throw Error(ErrorCode::InvalidArgument, "no field sizes given");
  if (std::set<std::uint32_t>(qs.begin(), qs.end()).size() != qs.size())
    throw Error(ErrorCode::InvalidArgument, "field sizes must be distinct");
  if (ideal.ring()->arity() > 4) throw Error(ErrorCode::TooLarge, "point counting is limited to 4 variables");
  PointCount out;
  out.qs = qs;
  std::vector<std::future<std::uint64_t>> jobs;
  for (auto q : qs) jobs.push_back(std::async(std::launch::async, [&ideal, q] { return count_points(ideal, q); }));
  for (auto& j : jobs) out.counts.push_back(j.get());

  // lowest degree d whose interpolant through the first d + 1 counts is
  // integral and matches every count
  const std::size_t m = qs.size();
  for (std::size_t d = 0; d < m; ++d) {
    // Lagrange: coefficients of sum_k N_k prod_{j != k} (q - q_j) / (q_k - q_j)
    std::vector<mpq_class> coeffs(d + 1, 0);
    for (std::size_t k = 0; k <= d; ++k) {
      std::vector<mpq_class> basis{1};
      mpq_class denom = 1;
      for (std::size_t j = 0; j <= d; ++j) {
        if (j == k) continue;
        std::vector<mpq_class> next(basis.size() + 1, 0);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          next[i + 1] += basis[i];
          next[i] -= basis[i] * qs[j];
        }
        basis = std::move(next);
        denom *= mpq_class(static_cast<long>(qs[k])) - static_cast<long>(qs[j]);
      }
      for (std::size_t i = 0; i < basis.size(); ++i)
        coeffs[i] += basis[i] * mpq_class(mpz_class(std::to_string(out.counts[k]))) / denom;
    }
    bool integral = std::all_of(coeffs.begin(), coeffs.end(), [](mpq_class& c) {
      c.canonicalize();
      return c.get_den() == 1;
    });
    if (!integral) continue;
    bool fits = true;
    for (std::size_t k = d + 1; k < m && fits; ++k) {
      mpq_class v = 0;
      for (std::size_t i = coeffs.size(); i-- > 0;) v = v * qs[k] + coeffs[i];
      fits = v == mpq_class(mpz_class(std::to_string(out.counts[k])));
    }
    if (!fits) continue;
    mpz_class chi = 0;
    for (const auto& c : coeffs) {
      out.polynomial.push_back(mpz_class(c.get_num()).get_si());
      chi += c.get_num();
    }
    out.chi = chi.get_si();
    return out;
  }
  throw Error(ErrorCode::NoPolynomialFit, "no integer polynomial fits the point counts");
}

// ---------------------------------------------------------------- Hilbert scheme demo

namespace {

/// Rows are partitions bounded by the row above; returns the number of
/// completions using `left` more boxes.
std::uint64_t plane_partitions(int left, const std::vector<int>& above) {
  if (left == 0) return 1;
  // next row: a partition of some s in 1..left fitting under `above`
  std::uint64_t total = 0;
  std::vector<int> row;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t col, int cap, int used) {
    if (used > 0) total += plane_partitions(left - used, row);
    if (col >= above.size()) return;
    int limit = std::min(cap, above[col]);
    for (int v = 1; v <= limit && used + v <= left; ++v) {
      row.push_back(v);
      rec(col + 1, v, used + v);
      row.pop_back();
    }
  };
  rec(0, left, 0);
  return total;
}

}  // namespace

std::uint64_t count_plane_partitions(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
  return plane_partitions(n, std::vector<int>(static_cast<std::size_t>(n), n));
}

std::vector<std::uint64_t> macmahon_coefficients(int n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be non-negative");
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n_max) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n_max; ++k)
    for (int rep = 0; rep < k; ++rep)
      // multiply by 1 / (1 - q^k)
      for (int i = k; i <= n_max; ++i) c[i] += c[i - k];
  return c;
}

HilbertDemo hilbert_demo(int n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be non-negative");
  if (n_max > 12) throw Error(ErrorCode::BoundExceeded, "hilbert demo is limited to n <= 12");
  HilbertDemo demo;
  auto mm = macmahon_coefficients(n_max);
  for (int n = 0; n <= n_max; ++n) {
    HilbertRow row;
    row.n = n;
    row.count = count_plane_partitions(n);
    row.signed_term = (n % 2 ? -1 : 1) * static_cast<std::int64_t>(row.count);
    row.macmahon = mm[n];
    demo.agree = demo.agree && row.count == row.macmahon;
    demo.rows.push_back(row);
  }
  return demo;
}

NonAdditivityWitness non_additivity_witness() {
  auto line = Ring::make({"x"});
  const Point origin{Scalar(0L)};
  const Point elsewhere{Scalar(1L)};
  // nu on the smooth ambient and on the fat point x^2 = 0 = d(x^3)
  std::int64_t nu_y_origin = behrend_at_ideal(Ideal(line), origin).nu;
  std::int64_t nu_y_open = behrend_at_ideal(Ideal(line), elsewhere).nu;
  std::int64_t nu_z = behrend_at_critical(parse_polynomial("x^3", line), origin).nu;

  Stratification y({{"origin", 1, 0, "point", false}, {"punctured", 0, 1, "A^1 minus a point", false}});
  ConstructibleFunction fy({{"origin", nu_y_origin}, {"punctured", nu_y_open}});
  Stratification u({{"punctured", 0, 1, "A^1 minus a point", false}});
  ConstructibleFunction fu({{"punctured", nu_y_open}});
  Stratification z({{"origin", 1, 0, "point", false}});
  ConstructibleFunction fz({{"origin", nu_z}});
  ConstructibleFunction fz_in_y({{"origin", nu_y_origin}});

  NonAdditivityWitness w;
  w.chi_tilde_y = weighted_euler(y, fy).value;
  w.chi_tilde_u = weighted_euler(u, fu).value;
  w.chi_tilde_z = weighted_euler(z, fz).value;
  w.chi_tilde_z_in_y = weighted_euler(z, fz_in_y).value;
  return w;
}

}  // namespace behrend
