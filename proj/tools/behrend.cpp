#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jobs.hpp"

using behrend::cli::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json(const std::string& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) throw std::runtime_error(path + " is not valid JSON");
  return j;
}

struct Inputs {
  std::string ring, f, critical_locus, point, cls, arc, arc_file, strata_file, function_file;
  std::vector<std::string> ideal, form;
  std::vector<std::int64_t> q;
  int m = 0;
  int n_max = -1;
};

void print_table(const json& payload) {
  std::cerr << std::setw(4) << "n" << std::setw(10) << "count" << std::setw(12) << "signed" << std::setw(10)
            << "MacMahon" << "\n";
  for (const auto& r : payload.at("rows"))
    std::cerr << std::setw(4) << r.at("n").get<int>() << std::setw(10) << r.at("count").get<std::uint64_t>()
              << std::setw(12) << r.at("signed_term").get<std::int64_t>() << std::setw(10)
              << r.at("macmahon").get<std::uint64_t>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Behrend function toolkit: exact Milnor numbers, normal cones, arcs and weighted Euler characteristics"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string cache_dir, jobs_file;
  bool no_cache = false, payload_only = false, pretty = false;
  unsigned threads = 0;
  app.add_option("--cache-dir", cache_dir, "result cache directory (default: $BEHREND_CACHE_DIR, unset = no cache)");
  app.add_flag("--no-cache", no_cache, "disable the result cache");
  app.add_option("--jobs", jobs_file, "run a JSON array of job specs");
  app.add_flag("--payload-only", payload_only, "print only payloads (or errors)");
  app.add_flag("--pretty", pretty, "indented JSON; tables on stderr");
  app.add_option("--threads", threads, "worker threads for batch mode");

  Inputs in;
  auto ring_opt = [&](CLI::App* c) { c->add_option("--ring", in.ring, "comma separated variables")->required(); };
  auto point_opt = [&](CLI::App* c) { c->add_option("--point", in.point, "comma separated coordinates")->required(); };

  auto* milnor = app.add_subcommand("milnor", "Milnor number of f at a point");
  ring_opt(milnor);
  milnor->add_option("--f", in.f, "polynomial")->required();
  point_opt(milnor);

  auto* behrend_cmd = app.add_subcommand("behrend", "nu at a point by the Milnor or smooth route");
  ring_opt(behrend_cmd);
  behrend_cmd->add_option("--critical-locus", in.critical_locus, "X = Z(df)");
  behrend_cmd->add_option("--ideal", in.ideal, "X = Z(I)");
  point_opt(behrend_cmd);

  auto* almost = app.add_subcommand("almost-closed", "check that d omega vanishes on Z(omega)");
  ring_opt(almost);
  almost->add_option("--form", in.form, "components of omega")->required();

  auto* arc = app.add_subcommand("arc-check", "Lagrangian obstruction along a parametrized arc");
  ring_opt(arc);
  arc->add_option("--form", in.form, "components of omega")->required();
  arc->add_option("--arc", in.arc, "arc text");
  arc->add_option("--arc-file", in.arc_file, "file with the arc");
  arc->add_option("--m", in.m, "order to test (default: certified vanishing order)");

  auto* cone = app.add_subcommand("normal-cone", "normal cone ideal by Rees elimination");
  ring_opt(cone);
  cone->add_option("--ideal", in.ideal, "generators")->required();

  auto* cycle = app.add_subcommand("cycle", "distinguished cycle");
  ring_opt(cycle);
  cycle->add_option("--ideal", in.ideal, "generators")->required();
  cycle->add_option("--class", in.cls, "smooth | regular-sequence | monomial")->required();

  auto* nu = app.add_subcommand("nu", "nu as the Euler obstruction of the distinguished cycle");
  ring_opt(nu);
  nu->add_option("--critical-locus", in.critical_locus, "X = Z(df); also runs the Milnor route");
  nu->add_option("--ideal", in.ideal, "X = Z(I)");
  nu->add_option("--class", in.cls, "smooth | regular-sequence | monomial");
  point_opt(nu);

  auto* we = app.add_subcommand("weighted-euler", "sum of f(S) chi(S) over strata");
  we->add_option("--strata-file", in.strata_file, "JSON array of {label, chi, dim, how}")->required();
  we->add_option("--function-file", in.function_file, "JSON object label -> integer")->required();

  auto* oracle = app.add_subcommand("chi-oracle", "heuristic chi from F_q point counts");
  ring_opt(oracle);
  oracle->add_option("--ideal", in.ideal, "generators")->required();
  oracle->add_option("--q", in.q, "prime powers <= 16")->required();

  auto* hilb = app.add_subcommand("hilb-demo", "plane partitions against the MacMahon series");
  hilb->add_option("--n-max", in.n_max, "largest n (<= 12)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  std::vector<json> jobs;
  bool batch = !jobs_file.empty();
  try {
    if (batch) {
      json arr = read_json(jobs_file);
      if (!arr.is_array()) throw std::runtime_error("--jobs expects a JSON array");
      for (auto& j : arr) jobs.push_back(j);
    } else {
      auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
      if (!sub) {
        std::cerr << app.help();
        return 1;
      }
      json job = {{"command", sub->get_name()}};
      auto set_if = [&](const char* key, const std::string& v) {
        if (!v.empty()) job[key] = v;
      };
      if (!in.ring.empty()) job["ring"] = in.ring;
      set_if("f", in.f);
      set_if("critical_locus", in.critical_locus);
      set_if("point", in.point);
      set_if("class", in.cls);
      if (!in.ideal.empty()) job["ideal"] = in.ideal;
      if (!in.form.empty()) job["form"] = in.form;
      if (!in.arc_file.empty()) job["arc"] = read_file(in.arc_file);
      set_if("arc", in.arc);
      if (in.m) job["m"] = in.m;
      if (!in.strata_file.empty()) job["strata"] = read_json(in.strata_file);
      if (!in.function_file.empty()) job["function"] = read_json(in.function_file);
      if (!in.q.empty()) job["q"] = in.q;
      if (sub->get_name() == "hilb-demo") job["n_max"] = in.n_max;
      jobs.push_back(job);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  behrend::cli::RunOptions options;
  options.threads = threads;
  if (!no_cache) {
    if (!cache_dir.empty()) options.cache_dir = cache_dir;
    else if (const char* env = std::getenv("BEHREND_CACHE_DIR"); env && *env) options.cache_dir = env;
  }

  std::vector<behrend::cli::Envelope> results;
  try {
    results = behrend::cli::run_jobs(jobs, options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  int code = 0;
  json out = json::array();
  for (const auto& r : results) {
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    int c = behrend::cli::exit_code(r.status);
    if (c == 1 || (c == 2 && code == 0)) code = c;
    out.push_back(payload_only ? behrend::cli::payload_of(r) : r.body);
    if (pretty && r.status == behrend::cli::Status::Ok && r.body.value("command", json()) == "hilb-demo")
      print_table(r.body.at("payload"));
  }
  const json& shown = batch ? out : out.front();
  std::cout << (pretty ? shown.dump(2) : shown.dump()) << "\n";
  return code;
}
