#ifndef BEHREND_TOOLS_JOBS_HPP
#define BEHREND_TOOLS_JOBS_HPP

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace behrend::cli {

using nlohmann::json;

inline constexpr const char* kEngineVersion = "1.0.0";

enum class Status { Ok, Refusal, InputError };

std::string status_name(Status s);
/// 0 ok, 2 refusal, 1 input error.
int exit_code(Status s);

/// Result of one job, without timing or cache state.
struct Outcome {
  Status status = Status::Ok;
  json payload;
  /// {code, message}
  json error;
  /// {route?, imported_facts: [...], heuristic: bool}
  json provenance;
};

/// Validates a JobSpec and rewrites it in canonical form: parsed inputs are
/// printed back, keys are sorted by the JSON library. Throws behrend::Error.
json canonical_job(const json& job);

/// Runs a canonical job. Engine errors become Refusal or InputError outcomes.
Outcome execute(const json& canonical);

json outcome_to_json(const Outcome& o);
std::optional<Outcome> outcome_from_json(const json& j);

/// Content-addressed store of outcomes under `dir`. Writes are serialized
/// and atomic (temporary file plus rename).
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::string engine_version = kEngineVersion);

  /// Hex SHA-256 of the engine version and the canonical job bytes.
  std::string key(const json& canonical) const;
  /// nullopt on a miss. A corrupt entry is reported through `warning`.
  std::optional<Outcome> lookup(const json& canonical, std::string* warning = nullptr) const;
  void store(const json& canonical, const Outcome& o);
  std::filesystem::path entry_path(const json& canonical) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
  std::mutex write_mutex_;
};

struct RunOptions {
  /// Cache directory; empty disables the cache.
  std::filesystem::path cache_dir;
  unsigned threads = 0;
  std::string engine_version = kEngineVersion;
};

/// Full envelope: command, job, status, payload or error, provenance,
/// cache state ("hit", "miss", "off"), timing and engine version.
struct Envelope {
  Status status = Status::Ok;
  json body;
  std::vector<std::string> warnings;
};

/// Runs the jobs concurrently; the result order is the input order.
std::vector<Envelope> run_jobs(const std::vector<json>& jobs, const RunOptions& options);

/// The deterministic part of an envelope: payload on success, error otherwise.
json payload_of(const Envelope& e);

}  // namespace behrend::cli

#endif  // BEHREND_TOOLS_JOBS_HPP
