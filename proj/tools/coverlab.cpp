// coverlab: invariant reports and theorem-check suites for cover ideals.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coverlab/cache.hpp"
#include "coverlab/corpus.hpp"
#include "coverlab/error.hpp"
#include "coverlab/report.hpp"
#include "coverlab/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// "60s", "500ms", "2m"; a bare number means seconds.
std::chrono::milliseconds parse_budget(const std::string& text) {
  long long value = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || value < 0) throw coverlab::Error("bad budget '" + text + "'");
  const std::string unit(p, text.data() + text.size());
  if (unit.empty() || unit == "s") return std::chrono::seconds(value);
  if (unit == "ms") return std::chrono::milliseconds(value);
  if (unit == "m") return std::chrono::minutes(value);
  throw coverlab::Error("bad budget unit '" + unit + "'");
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw coverlab::Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

struct EngineFlags {
  std::string budget = "60s";
  std::uint32_t prime = 0;
  std::size_t max_box = 50000;
  bool no_sdepth = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget", budget, "Time budget per Stanley search (e.g. 60s, 500ms)")->capture_default_str();
    cmd->add_option("--prime", prime, "Compute homology over GF(p) instead of Q (0 = Q)")->capture_default_str();
    cmd->add_option("--max-box", max_box, "Largest characteristic-poset box")->capture_default_str();
    cmd->add_flag("--no-sdepth", no_sdepth, "Skip Stanley depth searches");
  }

  coverlab::EngineConfig config() const {
    coverlab::EngineConfig c;
    c.homology.prime = prime;
    c.stanley.budget = parse_budget(budget);
    c.stanley.max_box = max_box;
    c.with_sdepth = !no_sdepth;
    return c;
  }
};

int run_invariants(const std::vector<std::string>& families, const std::vector<std::string>& graph_files,
                   const std::string& k_text, const std::string& json_path, bool compare_ordinary, bool timings,
                   bool no_cache, const EngineFlags& flags) {
  std::vector<coverlab::CorpusEntry> graphs;
  for (const auto& f : families) graphs.push_back(coverlab::corpus_entry(f));
  for (const auto& f : graph_files) {
    graphs.push_back({std::filesystem::path(f).stem().string(), f, coverlab::load_graph_file(f)});
  }
  if (graphs.empty()) throw coverlab::Error("give --family or --graph");
  const auto [klo, khi] = coverlab::parse_k_range(k_text);
  const coverlab::EngineConfig config = flags.config();

  std::optional<coverlab::Cache> cache;
  if (!no_cache) cache.emplace(coverlab::Cache::default_directory());

  nlohmann::json reports = nlohmann::json::array();
  coverlab::write_tsv_header(std::cout);
  for (const auto& g : graphs) {
    for (int k = klo; k <= khi; ++k) {
      try {
        const auto r = coverlab::cached_report(g, k, config, {compare_ordinary, timings}, cache ? &*cache : nullptr);
        coverlab::write_tsv_row(std::cout, r);
        reports.push_back(r.to_json());
      } catch (const coverlab::Error& e) {
        std::cerr << g.name << " k=" << k << ": " << e.what() << "\n";
      }
    }
  }
  if (!json_path.empty()) write_json(json_path, {{"reports", reports}});
  return 0;
}

int run_verify(const std::string& suite, const std::string& corpus, const std::string& k_text, std::size_t workers,
               const std::string& json_path, const EngineFlags& flags) {
  if (!coverlab::is_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "'; known suites:\n";
    for (const auto& s : coverlab::suite_names()) std::cerr << "  " << s << "\n";
    return kExitUsage;
  }
  coverlab::SuiteConfig config;
  config.engine = flags.config();
  config.corpus = coverlab::load_corpus(corpus);
  if (!k_text.empty()) config.k_range = coverlab::parse_k_range(k_text);
  config.workers = workers;
  coverlab::SuiteResult result;
  try {
    result = coverlab::run_suite(suite, config);
  } catch (const std::exception& e) {
    // Input was already validated; anything thrown here is a bug.
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  coverlab::write_suite_tsv(std::cout, result);
  if (!json_path.empty()) write_json(json_path, result.to_json());
  return result.aggregate() == coverlab::Status::fail ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of symbolic powers of cover ideals"};
  app.require_subcommand(1);

  auto* inv = app.add_subcommand("invariants", "Depth, pd, reg, sdepth and matching numbers for J(G)^(k)");
  std::vector<std::string> families;
  std::vector<std::string> graph_files;
  std::string k_text = "1..3";
  std::string json_path;
  bool compare_ordinary = false;
  bool timings = false;
  bool no_cache = false;
  EngineFlags inv_flags;
  inv->add_option("--family", families, "Graph family spec, e.g. path:3, cycle:5, complete_bipartite:2,2");
  inv->add_option("--graph", graph_files, "Edge-list file")->check(CLI::ExistingFile);
  inv->add_option("--k", k_text, "k or range a..b")->capture_default_str();
  inv->add_option("--json", json_path, "Write reports as JSON");
  inv->add_flag("--compare-ordinary", compare_ordinary, "Compare J^(k) with the ordinary power J^k");
  inv->add_flag("--timings", timings, "Record per-stage timings (bypasses the cache)");
  inv->add_flag("--no-cache", no_cache, "Neither read nor write the result cache");
  inv_flags.attach(inv);

  auto* ver = app.add_subcommand("verify", "Run a check suite over a graph corpus");
  std::string suite;
  std::string corpus = "default";
  std::string ver_k;
  std::size_t workers = 1;
  std::string ver_json;
  EngineFlags ver_flags;
  ver->add_option("suite", suite, "Suite name (see `coverlab suites`)")->required();
  ver->add_option("--corpus", corpus, "default, a corpus file, or specs separated by ';'")->capture_default_str();
  ver->add_option("--k", ver_k, "Override the suite's k range (k or a..b)");
  ver->add_option("--workers", workers, "Concurrent instances")->capture_default_str()->check(CLI::PositiveNumber);
  ver->add_option("--json", ver_json, "Write the suite result as JSON");
  ver_flags.attach(ver);

  auto* suites = app.add_subcommand("suites", "List check suites");

  auto* cache_cmd = app.add_subcommand("cache", "Manage the result cache");
  cache_cmd->require_subcommand(1);
  auto* cache_clear = cache_cmd->add_subcommand("clear", "Delete every cached entry");
  auto* cache_dir = cache_cmd->add_subcommand("dir", "Print the cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*inv) {
      return run_invariants(families, graph_files, k_text, json_path, compare_ordinary, timings, no_cache, inv_flags);
    }
    if (*ver) return run_verify(suite, corpus, ver_k, workers, ver_json, ver_flags);
    if (*suites) {
      for (const auto& s : coverlab::suite_names()) std::cout << s << "\n";
      return 0;
    }
    if (*cache_clear) {
      const coverlab::Cache cache(coverlab::Cache::default_directory());
      std::cout << "removed " << cache.clear() << " entries from " << cache.directory().string() << "\n";
      return 0;
    }
    if (*cache_dir) {
      std::cout << coverlab::Cache::default_directory().string() << "\n";
      return 0;
    }
  } catch (const coverlab::Error& e) {
    // Bad graph files, family specs, k ranges and budgets.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
