#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coverlab {

/// Bit i set <=> vertex i (in canonical order) is a member.
using VertexMask = std::uint64_t;

/// Undirected edge between vertex indices, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple labeled graph. The vertex order fixes the variable order of every
/// ideal built from the graph. Immutable after construction.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  Graph() = default;

  /// Throws Error on self-loops, duplicate labels, unknown endpoints or more
  /// than kMaxVertices vertices. Duplicate edges are merged.
  Graph(std::vector<std::string> labels,
        const std::vector<std::pair<std::string, std::string>>& edges);
  Graph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<int> index_of(std::string_view label) const;
  /// Like index_of but throws Error for unknown labels.
  int require_index(std::string_view label) const;

  bool adjacent(int u, int v) const noexcept { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  VertexMask neighbor_mask(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  VertexMask closed_neighbor_mask(int v) const noexcept {
    return adj_[static_cast<std::size_t>(v)] | (VertexMask{1} << v);
  }
  VertexMask all_vertices_mask() const noexcept;
  std::vector<int> neighbors(int v) const;
  bool is_isolated(int v) const noexcept { return adj_[static_cast<std::size_t>(v)] == 0; }

  /// "vertices: a b c\na b\n..." — stable text form, also used for hashing.
  std::string canonical_string() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  void build();

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
  std::unordered_map<std::string, int> index_;
};

std::vector<int> mask_to_indices(VertexMask mask);
std::vector<std::string> mask_to_labels(const Graph& g, VertexMask mask);

// ---------------------------------------------------------------------------
// Construction

/// Parses the edge-list format: one "label label" pair per line, '#' starts a
/// comment line, and an optional first line "vertices: l1 ... ln" fixes the
/// vertex order (otherwise first-appearance order).
Graph parse_edge_list(std::string_view text);
Graph load_graph_file(const std::string& path);

/// Standard families labeled x1..xn. name in {path, cycle, complete,
/// complete_bipartite, star}; star:n has center x1 and n-1 leaves.
Graph make_family(std::string_view name, std::span<const int> sizes);

/// "path:4", "complete_bipartite:2,3", ...
Graph make_family(std::string_view spec);

/// Short human name for a family spec: "P4", "C5", "K3", "K2,3", "K1,3".
std::string family_short_name(std::string_view spec);

// ---------------------------------------------------------------------------
// Subgraphs

/// G \ A: drops A and every edge meeting it. Vertex order is inherited.
Graph delete_vertices(const Graph& g, const std::vector<std::string>& removed);
Graph delete_vertices(const Graph& g, VertexMask removed);
Graph induced_subgraph(const Graph& g, VertexMask kept);

/// Two-coloring (0/1 per vertex) when the graph has no odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// ---------------------------------------------------------------------------
// Covers and matchings

/// All minimal vertex covers, sorted ascending as masks. Edgeless graph -> {0}.
std::vector<VertexMask> minimal_vertex_covers(const Graph& g);
bool is_vertex_cover(const Graph& g, VertexMask c);

/// Sequence of oriented pairs (a_i, b_i).
struct OrderedMatching {
  std::vector<std::pair<int, int>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
};

bool is_matching(const Graph& g, std::span<const Edge> edges);
bool is_induced_matching(const Graph& g, std::span<const Edge> edges);
bool is_ordered_matching(const Graph& g, const OrderedMatching& m);

struct MatchingReport {
  std::size_t matching_number = 0;
  std::size_t induced_matching_number = 0;
  std::size_t ordered_matching_number = 0;
  std::vector<Edge> matching_witness;
  std::vector<Edge> induced_matching_witness;
  OrderedMatching ordered_matching_witness;
};

/// Maximum matching with the lexicographically smallest witness.
std::pair<std::size_t, std::vector<Edge>> matching_number(const Graph& g);
/// Maximum induced matching with the lexicographically smallest witness.
std::pair<std::size_t, std::vector<Edge>> induced_matching_number(const Graph& g);
/// Maximum ordered matching. Edgeless graphs give 0 with an empty witness.
std::pair<std::size_t, OrderedMatching> ordered_matching_number(const Graph& g);

MatchingReport matching_report(const Graph& g);

}  // namespace coverlab
