#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coverlab/cache.hpp"
#include "coverlab/corpus.hpp"
#include "coverlab/homology.hpp"
#include "coverlab/stanley.hpp"

namespace coverlab {

struct EngineConfig {
  HomologyOptions homology;
  StanleyOptions stanley;
  /// Skip the sdepth searches entirely (they dominate the run time).
  bool with_sdepth = true;

  /// Every setting that can change a computed value, in a stable order.
  std::string fingerprint() const;
  nlohmann::json to_json() const;
};

/// A value together with how far it can be trusted.
struct FlaggedValue {
  std::optional<int> value;  // nullopt: infinite, or not computed when `skipped` is set
  std::string flag = "exact";
  std::string skipped;  // reason, empty when computed

  std::string to_string() const;
  nlohmann::json to_json() const;
};

struct InvariantReport {
  std::string graph;
  std::string hash;
  std::size_t n = 0;
  int k = 0;
  std::size_t ordered_matching = 0;
  OrderedMatching ordered_witness;
  std::size_t induced_matching = 0;
  FlaggedValue depth;
  FlaggedValue pd;
  FlaggedValue reg;
  FlaggedValue sdepth_ideal;
  FlaggedValue sdepth_quotient;
  std::vector<std::string> notes;
  /// Milliseconds per stage; only emitted when timings were requested.
  std::vector<std::pair<std::string, double>> timings;
  nlohmann::json config;

  nlohmann::json to_json() const;
  static InvariantReport from_json(const nlohmann::json& j);
};

struct ReportRequest {
  bool compare_ordinary = false;
  bool timings = false;
};

/// Builds the report for J(G)^(k). Guard violations become skipped values
/// with a reason; they never abort the report.
InvariantReport compute_report(const CorpusEntry& entry, int k, const EngineConfig& config,
                               const ReportRequest& request = {});

/// Cached variant: a hit returns the stored report unchanged. Timed runs
/// always recompute.
InvariantReport cached_report(const CorpusEntry& entry, int k, const EngineConfig& config,
                              const ReportRequest& request, const Cache* cache);

void write_tsv_header(std::ostream& out);
void write_tsv_row(std::ostream& out, const InvariantReport& r);

}  // namespace coverlab
