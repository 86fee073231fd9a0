#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coverlab/graph.hpp"

namespace coverlab {

struct CorpusEntry {
  /// Short display name ("P4", "K1,3", or the file stem).
  std::string name;
  /// What to pass back to --corpus to rebuild this single entry.
  std::string spec;
  Graph graph;
};

/// P2..P5, C3..C5, K2..K4, K1,3, K2,2.
std::vector<CorpusEntry> default_corpus();

/// "default"; a file listing one family spec or edge-list path per line;
/// or inline family specs separated by ';' ("path:3;cycle:5").
std::vector<CorpusEntry> load_corpus(std::string_view arg);

/// A family spec ("path:4") or a path to an edge-list file.
CorpusEntry corpus_entry(std::string_view spec);

/// Keeps the entries whose short name is listed.
std::vector<CorpusEntry> select(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& names);

/// "3", "1..4"; throws Error otherwise.
std::pair<int, int> parse_k_range(std::string_view text);

/// Hash of the canonical form of the graph.
std::string graph_hash(const Graph& g);

}  // namespace coverlab
