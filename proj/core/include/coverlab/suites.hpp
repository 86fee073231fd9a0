#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "coverlab/corpus.hpp"
#include "coverlab/report.hpp"

namespace coverlab {

enum class Status { pass, fail, skip };
std::string to_string(Status s);

struct InstanceResult {
  std::string instance;
  Status status = Status::pass;
  std::string detail;
  /// Command that reruns only this instance.
  std::string repro;
};

struct SuiteResult {
  std::string suite;
  std::vector<InstanceResult> instances;

  /// fail if any instance failed, else pass if any passed, else skip.
  Status aggregate() const;
  std::size_t count(Status s) const;
  nlohmann::json to_json() const;
};

struct SuiteConfig {
  EngineConfig engine;
  std::vector<CorpusEntry> corpus;
  /// Overrides the suite's own k range.
  std::optional<std::pair<int, int>> k_range;
  std::size_t workers = 1;
};

/// The theorem suites followed by the oracle suites.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Throws Error for an unknown suite. Exceptions other than guard
/// violations (which become skips) propagate.
SuiteResult run_suite(std::string_view name, const SuiteConfig& config);

void write_suite_tsv(std::ostream& out, const SuiteResult& r);

}  // namespace coverlab
