#include "jobs.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "behrend/arcs.hpp"
#include "behrend/cycles.hpp"
#include "behrend/error.hpp"
#include "behrend/euler.hpp"
#include "behrend/singularities.hpp"

namespace behrend::cli {

namespace {

constexpr const char* kMilnorFact =
    "Milnor fibre Euler characteristic chi(F) = 1 + (-1)^(n-1) mu (classical)";
constexpr const char* kCurveFact = "curve Euler obstruction equals Hilbert-Samuel multiplicity (classical)";
constexpr const char* kPointCountFact = "polynomial-count fit of F_q point counts (heuristic)";
constexpr const char* kHilbWeight = "external weight nu = (-1)^n on Hilb^n(C^3)";

[[noreturn]] void bad_job(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

const json& field(const json& job, const char* name) {
  if (!job.contains(name)) bad_job(std::string("missing field '") + name + "'");
  return job.at(name);
}

std::string text_field(const json& job, const char* name) {
  const json& v = field(job, name);
  if (!v.is_string()) bad_job(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

RingPtr ring_of(const json& job) {
  const json& v = field(job, "ring");
  std::vector<std::string> names;
  if (v.is_string()) {
    names = split_commas(v.get<std::string>());
  } else if (v.is_array()) {
    for (const auto& n : v) {
      if (!n.is_string()) bad_job("ring names must be strings");
      names.push_back(n.get<std::string>());
    }
  } else {
    bad_job("field 'ring' must be a list of names");
  }
  if (names.empty()) bad_job("empty ring");
  std::set<std::string> seen;
  for (const auto& n : names) {
    bool ident = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
    for (char c : n) ident = ident && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ident) bad_job("bad variable name '" + n + "'");
    if (!seen.insert(n).second) bad_job("repeated variable name '" + n + "'");
  }
  return Ring::make(names);
}

Polynomial poly_field(const json& job, const char* name, const RingPtr& ring) {
  return parse_polynomial(text_field(job, name), ring);
}

std::vector<Polynomial> poly_list(const json& job, const char* name, const RingPtr& ring) {
  const json& v = field(job, name);
  std::vector<Polynomial> out;
  if (v.is_string()) {
    out.push_back(parse_polynomial(v.get<std::string>(), ring));
    return out;
  }
  if (!v.is_array()) bad_job(std::string("field '") + name + "' must be a list of polynomials");
  for (const auto& e : v) {
    if (!e.is_string()) bad_job(std::string("field '") + name + "' must hold strings");
    out.push_back(parse_polynomial(e.get<std::string>(), ring));
  }
  return out;
}

json print_polys(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Point point_field(const json& job, const char* name, std::size_t arity) {
  const json& v = field(job, name);
  std::vector<std::string> coords;
  if (v.is_string()) {
    coords = split_commas(v.get<std::string>());
  } else if (v.is_number_integer()) {
    coords.push_back(std::to_string(v.get<long long>()));
  } else if (v.is_array()) {
    for (const auto& c : v) {
      if (c.is_string()) coords.push_back(c.get<std::string>());
      else if (c.is_number_integer()) coords.push_back(std::to_string(c.get<long long>()));
      else bad_job("point coordinates must be integers or rational strings");
    }
  } else {
    bad_job(std::string("field '") + name + "' must be a point");
  }
  if (coords.size() != arity)
    throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(coords.size()) +
                                              " coordinates, ring has " + std::to_string(arity));
  Point p;
  for (const auto& c : coords) p.emplace_back(parse_rational(c));
  return p;
}

json print_point(const Point& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

std::int64_t int_field(const json& job, const char* name, std::int64_t lo, std::int64_t hi) {
  const json& v = field(job, name);
  if (!v.is_number_integer()) bad_job(std::string("field '") + name + "' must be an integer");
  auto x = v.get<std::int64_t>();
  if (x < lo || x > hi)
    bad_job(std::string("field '") + name + "' out of range [" + std::to_string(lo) + ", " +
            std::to_string(hi) + "]");
  return x;
}

PresentationClass class_of(const std::string& s) {
  if (s == "smooth") return PresentationClass::Smooth;
  if (s == "regular-sequence") return PresentationClass::RegularSequence;
  if (s == "monomial") return PresentationClass::Monomial;
  bad_job("class must be smooth, regular-sequence or monomial");
}

void allow_only(const json& job, std::initializer_list<const char*> keys) {
  std::set<std::string> ok{"command"};
  for (const char* k : keys) ok.insert(k);
  for (const auto& [k, v] : job.items())
    if (!ok.count(k)) bad_job("unexpected field '" + k + "'");
}

Stratification strata_of(const json& v) {
  if (!v.is_array()) bad_job("strata must be an array");
  Stratification s;
  for (const auto& e : v) {
    if (!e.is_object()) bad_job("stratum must be an object");
    Stratum st;
    st.label = text_field(e, "label");
    st.chi = int_field(e, "chi", -1000000000, 1000000000);
    st.dim = static_cast<int>(e.contains("dim") ? int_field(e, "dim", 0, 1000) : 0);
    st.how = e.contains("how") ? text_field(e, "how") : "";
    if (e.contains("heuristic")) {
      if (!e.at("heuristic").is_boolean()) bad_job("heuristic must be a boolean");
      st.heuristic = e.at("heuristic").get<bool>();
    }
    s.add(std::move(st));
  }
  return s;
}

json strata_json(const Stratification& s) {
  json out = json::array();
  for (const auto& st : s.strata())
    out.push_back({{"label", st.label}, {"chi", st.chi}, {"dim", st.dim}, {"how", st.how},
                   {"heuristic", st.heuristic}});
  return out;
}

ConstructibleFunction function_of(const json& v) {
  if (!v.is_object()) bad_job("function must map labels to integers");
  ConstructibleFunction f;
  for (const auto& [k, x] : v.items()) {
    if (!x.is_number_integer()) bad_job("function values must be integers");
    f.set(k, x.get<std::int64_t>());
  }
  return f;
}

json cycle_json(const Cycle& c) {
  json out = json::array();
  for (const auto& t : c.terms()) {
    const PrimeCycle& v = t.prime;
    json data;
    switch (v.kind()) {
      case PrimeCycle::Kind::Point: data = print_point(v.coordinates()); break;
      case PrimeCycle::Kind::MonomialPrime: {
        data = json::array();
        for (auto i : v.vanishing()) data.push_back(v.ring()->name(i));
        break;
      }
      case PrimeCycle::Kind::SmoothVariety:
      case PrimeCycle::Kind::Curve: {
        std::vector<Polynomial> gens(v.ideal().generators().begin(), v.ideal().generators().end());
        data = print_polys(gens);
        break;
      }
      case PrimeCycle::Kind::ConormalOf: data = v.base().describe(); break;
    }
    out.push_back({{"coefficient", t.coefficient}, {"kind", v.kind_name()}, {"data", data}});
  }
  return out;
}

bool cycle_has_curves(const Cycle& c) {
  for (const auto& t : c.terms())
    if (t.prime.kind() == PrimeCycle::Kind::Curve) return true;
  return false;
}

json base_provenance(const std::string& route = "") {
  json p = {{"imported_facts", json::array()}, {"heuristic", false}};
  if (!route.empty()) p["route"] = route;
  return p;
}

// ---------------------------------------------------------------- canonical forms

json canonical_impl(const json& job) {
  if (!job.is_object()) bad_job("a job must be a JSON object");
  const std::string command = text_field(job, "command");
  json out = {{"command", command}};

  auto with_ring = [&]() {
    RingPtr r = ring_of(job);
    out["ring"] = r->names();
    return r;
  };

  if (command == "milnor") {
    allow_only(job, {"ring", "f", "point"});
    auto R = with_ring();
    out["f"] = poly_field(job, "f", R).to_string();
    out["point"] = print_point(point_field(job, "point", R->arity()));
  } else if (command == "behrend" || command == "nu") {
    allow_only(job, {"ring", "critical_locus", "ideal", "class", "point"});
    auto R = with_ring();
    bool crit = job.contains("critical_locus"), ideal = job.contains("ideal");
    if (crit == ideal) bad_job("give exactly one of 'critical_locus' and 'ideal'");
    if (crit) out["critical_locus"] = poly_field(job, "critical_locus", R).to_string();
    if (ideal) out["ideal"] = print_polys(poly_list(job, "ideal", R));
    if (job.contains("class")) {
      class_of(text_field(job, "class"));
      out["class"] = text_field(job, "class");
    } else if (command == "nu" && ideal) {
      bad_job("nu on an ideal needs 'class'");
    }
    out["point"] = print_point(point_field(job, "point", R->arity()));
  } else if (command == "almost-closed") {
    allow_only(job, {"ring", "form"});
    auto R = with_ring();
    auto form = poly_list(job, "form", R);
    if (form.size() != R->arity()) throw Error(ErrorCode::ArityMismatch, "form needs one component per variable");
    out["form"] = print_polys(form);
  } else if (command == "arc-check") {
    allow_only(job, {"ring", "form", "arc", "m"});
    auto R = with_ring();
    auto form = poly_list(job, "form", R);
    if (form.size() != R->arity()) throw Error(ErrorCode::ArityMismatch, "form needs one component per variable");
    out["form"] = print_polys(form);
    ArcSeries gamma = parse_arc(text_field(job, "arc"), R);
    out["arc"] = gamma.to_string(*R);
    if (job.contains("m")) out["m"] = int_field(job, "m", 1, 64);
  } else if (command == "normal-cone") {
    allow_only(job, {"ring", "ideal"});
    auto R = with_ring();
    out["ideal"] = print_polys(poly_list(job, "ideal", R));
  } else if (command == "cycle") {
    allow_only(job, {"ring", "ideal", "class"});
    auto R = with_ring();
    out["ideal"] = print_polys(poly_list(job, "ideal", R));
    class_of(text_field(job, "class"));
    out["class"] = text_field(job, "class");
  } else if (command == "weighted-euler") {
    allow_only(job, {"strata", "function"});
    out["strata"] = strata_json(strata_of(field(job, "strata")));
    json f = json::object();
    ConstructibleFunction fn = function_of(field(job, "function"));
    for (const auto& [k, v] : fn.values()) f[k] = v;
    out["function"] = f;
  } else if (command == "chi-oracle") {
    allow_only(job, {"ring", "ideal", "q"});
    auto R = with_ring();
    out["ideal"] = print_polys(poly_list(job, "ideal", R));
    const json& q = field(job, "q");
    if (!q.is_array() || q.empty()) bad_job("'q' must be a non-empty list of field sizes");
    json qs = json::array();
    for (const auto& x : q) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 2) bad_job("field sizes must be integers >= 2");
      qs.push_back(x.get<std::int64_t>());
    }
    out["q"] = qs;
  } else if (command == "hilb-demo") {
    allow_only(job, {"n_max"});
    out["n_max"] = int_field(job, "n_max", -1000, 1000);
  } else {
    bad_job("unknown command '" + command + "'");
  }
  return out;
}

// ---------------------------------------------------------------- execution

std::vector<Polynomial> polys_in(const json& arr, const RingPtr& R) {
  std::vector<Polynomial> out;
  for (const auto& s : arr) out.push_back(parse_polynomial(s.get<std::string>(), R));
  return out;
}

Point point_in(const json& arr) {
  Point p;
  for (const auto& s : arr) p.emplace_back(parse_rational(s.get<std::string>()));
  return p;
}

Outcome run(const json& job) {
  const std::string command = job.at("command");
  RingPtr R;
  if (job.contains("ring")) R = Ring::make(job.at("ring").get<std::vector<std::string>>());
  Outcome o;
  o.provenance = base_provenance();

  if (command == "milnor") {
    auto f = parse_polynomial(job.at("f").get<std::string>(), R);
    auto P = point_in(job.at("point"));
    auto mu = milnor_number(f, P);
    if (mu.status == MilnorNumber::Status::NotCritical)
      throw Error(ErrorCode::NotCritical, "the point is not a critical point of f");
    o.provenance["route"] = "local colength of the Jacobian ideal";
    if (mu.status == MilnorNumber::Status::Infinite)
      o.payload = {{"mu", nullptr}, {"isolated", false}, {"bound_limited", mu.bound_limited}};
    else
      o.payload = {{"mu", mu.value}, {"isolated", true}};
  } else if (command == "behrend") {
    auto P = point_in(job.at("point"));
    BehrendValue v;
    if (job.contains("critical_locus"))
      v = behrend_at_critical(parse_polynomial(job.at("critical_locus").get<std::string>(), R), P);
    else
      v = behrend_at_ideal(Ideal(R, polys_in(job.at("ideal"), R)), P);
    o.payload = {{"nu", v.nu}, {"route", v.route}};
    if (v.mu) o.payload["mu"] = *v.mu;
    if (v.dimension) o.payload["dimension"] = *v.dimension;
    o.provenance["route"] = v.route;
    if (v.route == "milnor") o.provenance["imported_facts"].push_back(kMilnorFact);
  } else if (command == "nu") {
    auto P = point_in(job.at("point"));
    Ideal ideal(R);
    PresentationClass cls = PresentationClass::RegularSequence;
    std::optional<Polynomial> f;
    if (job.contains("critical_locus")) {
      f = parse_polynomial(job.at("critical_locus").get<std::string>(), R);
      ideal = jacobian_ideal(*f);
    } else {
      ideal = Ideal(R, polys_in(job.at("ideal"), R));
    }
    if (job.contains("class")) cls = class_of(job.at("class"));
    Cycle c = distinguished_cycle(ideal, cls);
    if (!ideal.vanishes_at(P)) throw Error(ErrorCode::PointNotOnX, "the point is not on X");
    std::int64_t nu = euler_obstruction(c, P);
    o.payload = {{"nu", nu}, {"class", presentation_class_name(cls)}, {"cycle", cycle_json(c)}};
    o.provenance["route"] = "normal-cone";
    if (cycle_has_curves(c)) o.provenance["imported_facts"].push_back(kCurveFact);
    if (f) {
      try {
        auto other = behrend_at_critical(*f, P);
        o.payload["milnor_route"] = {{"nu", other.nu}, {"route", other.route}};
        if (other.mu) o.payload["milnor_route"]["mu"] = *other.mu;
        o.payload["routes_agree"] = other.nu == nu;
        if (other.route == "milnor") o.provenance["imported_facts"].push_back(kMilnorFact);
      } catch (const Error& e) {
        if (!is_refusal(e.code())) throw;
        o.payload["milnor_route"] = {{"refusal", std::string(error_code_name(e.code()))}};
      }
    }
  } else if (command == "almost-closed") {
    OneForm omega(R, polys_in(job.at("form"), R));
    auto report = is_almost_closed(omega);
    json certs = json::array();
    for (const auto& c : report.checks) {
      json entry = {{"pair", {c.i + 1, c.j + 1}}, {"witness", c.difference.to_string()}};
      if (c.remainder.is_zero()) {
        auto cof = membership_certificate(c.difference, omega.zero_ideal());
        if (cof) entry["cofactors"] = print_polys(*cof);
        certs.push_back(entry);
      }
    }
    o.payload = {{"almost_closed", report.almost_closed}, {"certificates", certs}};
    if (report.failure)
      o.payload["failure"] = {{"pair", {report.failure->i + 1, report.failure->j + 1}},
                              {"witness", report.failure->difference.to_string()},
                              {"remainder", report.failure->remainder.to_string()}};
    o.provenance["route"] = "degrevlex normal forms";
  } else if (command == "arc-check") {
    OneForm omega(R, polys_in(job.at("form"), R));
    ArcSeries gamma = parse_arc(job.at("arc").get<std::string>(), R);
    auto vo = arc_vanishing_order(omega, gamma);
    std::size_t m;
    if (job.contains("m")) {
      m = job.at("m").get<std::size_t>();
    } else {
      if (!vo) throw Error(ErrorCode::OrderTooLow, "omega vanishes along the arc through the truncation order");
      m = *vo;
    }
    if (m == 0) throw Error(ErrorCode::OrderTooLow, "the arc does not start on Z(omega)");
    auto direct = lagrangian_obstruction(omega, gamma, m);
    auto second = lagrangian_obstruction_via_derivatives(omega, gamma, m);
    o.payload = {{"m", m},
                 {"vanishing_order", vo ? json(*vo) : json(nullptr)},
                 {"obstruction", direct.to_string()},
                 {"zero", direct.is_zero()},
                 {"routes_agree", direct == second}};
    o.provenance["route"] = "arc obstruction";
  } else if (command == "normal-cone") {
    auto report = normal_cone_ideal(Ideal(R, polys_in(job.at("ideal"), R)));
    std::vector<Polynomial> gens(report.ideal.generators().begin(), report.ideal.generators().end());
    json comps = json::array();
    const std::size_t n = report.base_arity;
    for (const auto& c : report.components) {
      json bv = json::array(), fv = json::array();
      for (auto i : c.base_vanishing) bv.push_back(report.ring->name(i));
      for (auto j : c.fiber_vanishing) fv.push_back(report.ring->name(n + j));
      comps.push_back({{"base_vanishing", bv},
                       {"fiber_vanishing", fv},
                       {"multiplicity", c.multiplicity},
                       {"projection_dimension", c.projection_dimension},
                       {"linear", c.linear}});
    }
    o.payload = {{"ring", report.ring->names()}, {"ideal", print_polys(gens)},
                 {"dimension", report.dimension}, {"conic", report.conic},
                 {"dimension_law", report.dimension == static_cast<int>(n)}, {"components", comps}};
    o.provenance["route"] = "Rees elimination";
  } else if (command == "cycle") {
    auto cls = class_of(job.at("class"));
    Cycle c = distinguished_cycle(Ideal(R, polys_in(job.at("ideal"), R)), cls);
    o.payload = {{"cycle", cycle_json(c)}, {"text", c.to_string()}};
    o.provenance["route"] = presentation_class_name(cls);
  } else if (command == "weighted-euler") {
    auto s = strata_of(job.at("strata"));
    auto w = weighted_euler(s, function_of(job.at("function")));
    json levels = json::object();
    for (const auto& [n, chi] : w.level_sets) levels[std::to_string(n)] = chi;
    o.payload = {{"value", w.value}, {"level_sets", levels}, {"heuristic", w.heuristic}};
    o.provenance["heuristic"] = w.heuristic;
    if (w.heuristic) o.provenance["imported_facts"].push_back(kPointCountFact);
  } else if (command == "chi-oracle") {
    std::vector<std::uint32_t> qs;
    for (const auto& q : job.at("q")) {
      auto v = q.get<std::int64_t>();
      if (v > 16) throw Error(ErrorCode::TooLarge, "point counting is limited to q <= 16");
      qs.push_back(static_cast<std::uint32_t>(v));
    }
    auto pc = point_count_chi(Ideal(R, polys_in(job.at("ideal"), R)), qs);
    json counts = json::array();
    for (std::size_t k = 0; k < qs.size(); ++k) counts.push_back({{"q", qs[k]}, {"count", pc.counts[k]}});
    o.payload = {{"counts", counts}, {"polynomial", pc.polynomial}, {"chi", pc.chi}, {"heuristic", true}};
    o.provenance["heuristic"] = true;
    o.provenance["imported_facts"].push_back(kPointCountFact);
  } else if (command == "hilb-demo") {
    auto demo = hilbert_demo(static_cast<int>(job.at("n_max").get<std::int64_t>()));
    json rows = json::array();
    for (const auto& r : demo.rows)
      rows.push_back({{"n", r.n}, {"count", r.count}, {"signed_term", r.signed_term}, {"macmahon", r.macmahon}});
    o.payload = {{"rows", rows}, {"agree", demo.agree}, {"weight", kHilbWeight}};
    o.provenance["imported_facts"].push_back(kHilbWeight);
  }
  return o;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx, data.data(), data.size());
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Outcome failure(Status s, const std::string& code, const std::string& message) {
  Outcome o;
  o.status = s;
  o.error = {{"code", code}, {"message", message}};
  o.provenance = base_provenance();
  return o;
}

Outcome from_error(const Error& e) {
  return failure(is_refusal(e.code()) ? Status::Refusal : Status::InputError,
                 std::string(error_code_name(e.code())), e.what());
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Refusal: return "refusal";
    case Status::InputError: return "input_error";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Ok: return 0;
    case Status::Refusal: return 2;
    case Status::InputError: return 1;
  }
  return 1;
}

json canonical_job(const json& job) { return canonical_impl(job); }

Outcome execute(const json& canonical) {
  try {
    return run(canonical);
  } catch (const Error& e) {
    return from_error(e);
  } catch (const json::exception& e) {
    return failure(Status::InputError, "INVALID_JOB", e.what());
  }
}

json outcome_to_json(const Outcome& o) {
  json j = {{"status", status_name(o.status)}, {"provenance", o.provenance}};
  if (o.status == Status::Ok) j["payload"] = o.payload;
  else j["error"] = o.error;
  return j;
}

std::optional<Outcome> outcome_from_json(const json& j) {
  try {
    Outcome o;
    const std::string s = j.at("status");
    if (s == "ok") o.status = Status::Ok;
    else if (s == "refusal") o.status = Status::Refusal;
    else return std::nullopt;
    o.provenance = j.at("provenance");
    if (o.status == Status::Ok) o.payload = j.at("payload");
    else o.error = j.at("error");
    return o;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------- cache

ResultCache::ResultCache(std::filesystem::path dir, std::string engine_version)
    : dir_(std::move(dir)), version_(std::move(engine_version)) {
  std::filesystem::create_directories(dir_);
}

std::string ResultCache::key(const json& canonical) const {
  return sha256_hex(version_ + "\n" + canonical.dump());
}

std::filesystem::path ResultCache::entry_path(const json& canonical) const {
  return dir_ / (key(canonical) + ".json");
}

std::optional<Outcome> ResultCache::lookup(const json& canonical, std::string* warning) const {
  auto path = entry_path(canonical);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  json entry = json::parse(buf.str(), nullptr, false);
  std::optional<Outcome> o;
  if (!entry.is_discarded() && entry.is_object() && entry.value("engine_version", "") == version_ &&
      entry.contains("job") && entry.at("job") == canonical && entry.contains("outcome"))
    o = outcome_from_json(entry.at("outcome"));
  if (!o && warning) *warning = "corrupt cache entry " + path.string() + "; recomputing";
  return o;
}

void ResultCache::store(const json& canonical, const Outcome& o) {
  json entry = {{"engine_version", version_}, {"job", canonical}, {"outcome", outcome_to_json(o)}};
  auto path = entry_path(canonical);
  std::lock_guard<std::mutex> lock(write_mutex_);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << entry.dump() << "\n";
    if (!out) return;
  }
  std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------- runner

std::vector<Envelope> run_jobs(const std::vector<json>& jobs, const RunOptions& options) {
  std::unique_ptr<ResultCache> cache;
  if (!options.cache_dir.empty()) cache = std::make_unique<ResultCache>(options.cache_dir, options.engine_version);

  std::vector<Envelope> out(jobs.size());
  auto one = [&](std::size_t k) {
    const auto start = std::chrono::steady_clock::now();
    Envelope& env = out[k];
    json canonical;
    Outcome o;
    std::string cache_state = cache ? "miss" : "off";
    bool valid = true;
    try {
      canonical = canonical_job(jobs[k]);
    } catch (const Error& e) {
      o = from_error(e);
      o.status = Status::InputError;
      valid = false;
    } catch (const json::exception& e) {
      o = failure(Status::InputError, "INVALID_JOB", e.what());
      valid = false;
    }
    if (valid) {
      std::optional<Outcome> hit;
      if (cache) {
        std::string warning;
        hit = cache->lookup(canonical, &warning);
        if (!warning.empty()) env.warnings.push_back(warning);
      }
      if (hit) {
        o = *hit;
        cache_state = "hit";
      } else {
        o = execute(canonical);
        if (cache && o.status != Status::InputError) cache->store(canonical, o);
      }
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    env.status = o.status;
    env.body = outcome_to_json(o);
    env.body["command"] = jobs[k].is_object() && jobs[k].contains("command") ? jobs[k]["command"] : json(nullptr);
    env.body["job"] = valid ? canonical : jobs[k];
    env.body["engine_version"] = options.engine_version;
    env.body["cache"] = cache_state;
    env.body["timing_ms"] = ms;
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < jobs.size(); k = next++) one(k);
    });
  for (auto& t : pool) t.join();
  return out;
}

json payload_of(const Envelope& e) {
  return e.status == Status::Ok ? e.body.at("payload") : e.body.at("error");
}

}  // namespace behrend::cli
