#include "coverlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

#include "coverlab/error.hpp"

namespace coverlab {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

}  // namespace

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)) {
  build();
  for (const auto& [a, b] : edges) {
    const int u = require_index(a);
    const int v = require_index(b);
    if (u == v) throw Error("self-loop at vertex '" + a + "'");
    edges_.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
}

Graph::Graph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  build();
  const int n = static_cast<int>(labels_.size());
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw Error("edge endpoint out of range");
    if (e.u == e.v) throw Error("self-loop at vertex '" + labels_[static_cast<std::size_t>(e.u)] + "'");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
}

void Graph::build() {
  if (labels_.size() > kMaxVertices) {
    throw GuardExceeded("graph has too many vertices", labels_.size(), kMaxVertices);
  }
  index_.clear();
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw Error("empty vertex label");
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second) {
      throw Error("duplicate vertex label '" + labels_[i] + "'");
    }
  }
  adj_.assign(labels_.size(), 0);
}

std::optional<int> Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::require_index(std::string_view label) const {
  auto idx = index_of(label);
  if (!idx) throw Error("unknown vertex '" + std::string(label) + "'");
  return *idx;
}

VertexMask Graph::all_vertices_mask() const noexcept {
  const auto n = labels_.size();
  return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

std::vector<int> Graph::neighbors(int v) const { return mask_to_indices(neighbor_mask(v)); }

std::string Graph::canonical_string() const {
  std::string out = "vertices:";
  for (const auto& l : labels_) out += " " + l;
  out += "\n";
  for (const Edge& e : edges_) out += label(e.u) + " " + label(e.v) + "\n";
  return out;
}

std::vector<int> mask_to_indices(VertexMask mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::vector<std::string> mask_to_labels(const Graph& g, VertexMask mask) {
  std::vector<std::string> out;
  for (int v : mask_to_indices(mask)) out.push_back(g.label(v));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> seen;
  std::vector<std::pair<std::string, std::string>> edges;
  bool header_allowed = true;
  bool fixed_order = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front().starts_with("vertices:")) {
      if (!header_allowed) throw ParseError("vertex header must precede all edges", line_no);
      const std::string_view rest = line.substr(line.find("vertices:") + 9);
      for (auto tok : split_ws(rest)) {
        std::string l(tok);
        if (!seen.emplace(l, static_cast<int>(labels.size())).second) {
          throw ParseError("duplicate vertex '" + l + "' in header", line_no);
        }
        labels.push_back(std::move(l));
      }
      header_allowed = false;
      fixed_order = true;
      continue;
    }
    header_allowed = false;
    if (tokens.size() != 2) {
      throw ParseError("expected two labels, got " + std::to_string(tokens.size()), line_no);
    }
    std::string a(tokens[0]);
    std::string b(tokens[1]);
    if (a == b) throw ParseError("self-loop at vertex '" + a + "'", line_no);
    for (const auto& l : {a, b}) {
      if (seen.contains(l)) continue;
      if (fixed_order) throw ParseError("vertex '" + l + "' missing from header", line_no);
      seen.emplace(l, static_cast<int>(labels.size()));
      labels.push_back(l);
    }
    edges.emplace_back(std::move(a), std::move(b));
  }
  return Graph(std::move(labels), edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

Graph make_family(std::string_view name, std::span<const int> sizes) {
  auto need = [&](std::size_t count) {
    if (sizes.size() != count) {
      throw Error("family '" + std::string(name) + "' expects " + std::to_string(count) + " size(s)");
    }
    for (int s : sizes) {
      if (s < 1) throw Error("family sizes must be >= 1");
    }
  };
  std::vector<Edge> edges;
  if (name == "path") {
    need(1);
    const int n = sizes[0];
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(numbered_labels(n), std::move(edges));
  }
  if (name == "cycle") {
    need(1);
    const int n = sizes[0];
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(numbered_labels(n), std::move(edges));
  }
  if (name == "complete") {
    need(1);
    const int n = sizes[0];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(numbered_labels(n), std::move(edges));
  }
  if (name == "complete_bipartite") {
    need(2);
    const int a = sizes[0];
    const int b = sizes[1];
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(numbered_labels(a + b), std::move(edges));
  }
  if (name == "star") {
    need(1);
    const int n = sizes[0];
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    return Graph(numbered_labels(n), std::move(edges));
  }
  throw Error("unsupported graph family '" + std::string(name) + "'");
}

namespace {

std::pair<std::string, std::vector<int>> split_family_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error("family spec must look like name:size[,size]");
  std::string name(spec.substr(0, colon));
  std::vector<int> sizes;
  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error("bad family size '" + std::string(tok) + "'");
    }
    sizes.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return {std::move(name), std::move(sizes)};
}

}  // namespace

Graph make_family(std::string_view spec) {
  auto [name, sizes] = split_family_spec(spec);
  return make_family(name, sizes);
}

std::string family_short_name(std::string_view spec) {
  auto [name, sizes] = split_family_spec(spec);
  auto join = [&] {
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
    return s;
  };
  if (name == "path") return "P" + join();
  if (name == "cycle") return "C" + join();
  if (name == "complete" || name == "complete_bipartite") return "K" + join();
  if (name == "star" && sizes.size() == 1) return "K1," + std::to_string(sizes[0] - 1);
  return std::string(spec);
}

Graph induced_subgraph(const Graph& g, VertexMask kept) {
  std::vector<int> old_to_new(g.num_vertices(), -1);
  std::vector<std::string> labels;
  for (int v : mask_to_indices(kept & g.all_vertices_mask())) {
    old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int u = old_to_new[static_cast<std::size_t>(e.u)];
    const int v = old_to_new[static_cast<std::size_t>(e.v)];
    if (u >= 0 && v >= 0) edges.push_back({u, v});
  }
  return Graph(std::move(labels), std::move(edges));
}

Graph delete_vertices(const Graph& g, VertexMask removed) {
  return induced_subgraph(g, g.all_vertices_mask() & ~removed);
}

Graph delete_vertices(const Graph& g, const std::vector<std::string>& removed) {
  VertexMask mask = 0;
  for (const auto& l : removed) mask |= bit(g.require_index(l));
  return delete_vertices(g, mask);
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w : g.neighbors(u)) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_vertex_cover(const Graph& g, VertexMask c) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return ((c >> e.u) & 1U) || ((c >> e.v) & 1U); });
}

namespace {

void cover_branch(const Graph& g, VertexMask chosen, VertexMask excluded,
                  std::vector<VertexMask>& out) {
  const Edge* open = nullptr;
  for (const Edge& e : g.edges()) {
    if (!((chosen >> e.u) & 1U) && !((chosen >> e.v) & 1U)) {
      open = &e;
      break;
    }
  }
  if (open == nullptr) {
    out.push_back(chosen);
    return;
  }
  const int u = open->u;
  // take u
  if (!((excluded >> u) & 1U)) cover_branch(g, chosen | bit(u), excluded, out);
  // leave u out: every neighbor of u must be taken
  const VertexMask nbrs = g.neighbor_mask(u);
  if ((nbrs & excluded) == 0 && !((chosen >> u) & 1U)) {
    cover_branch(g, chosen | nbrs, excluded | bit(u), out);
  }
}

}  // namespace

std::vector<VertexMask> minimal_vertex_covers(const Graph& g) {
  std::vector<VertexMask> found;
  cover_branch(g, 0, 0, found);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<VertexMask> minimal;
  for (VertexMask c : found) {
    bool is_min = true;
    for (int v : mask_to_indices(c)) {
      if (is_vertex_cover(g, c & ~bit(v))) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(c);
  }
  return minimal;
}

bool is_matching(const Graph& g, std::span<const Edge> edges) {
  VertexMask used = 0;
  for (const Edge& e : edges) {
    if (!g.adjacent(e.u, e.v)) return false;
    const VertexMask ends = bit(e.u) | bit(e.v);
    if (used & ends) return false;
    used |= ends;
  }
  return true;
}

bool is_induced_matching(const Graph& g, std::span<const Edge> edges) {
  if (!is_matching(g, edges)) return false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      for (int x : {edges[i].u, edges[i].v}) {
        for (int y : {edges[j].u, edges[j].v}) {
          if (g.adjacent(x, y)) return false;
        }
      }
    }
  }
  return true;
}

bool is_ordered_matching(const Graph& g, const OrderedMatching& m) {
  if (m.pairs.empty()) return false;
  VertexMask used = 0;
  for (const auto& [a, b] : m.pairs) {
    if (a < 0 || b < 0 || a >= static_cast<int>(g.num_vertices()) ||
        b >= static_cast<int>(g.num_vertices())) {
      return false;
    }
    if (!g.adjacent(a, b)) return false;
    const VertexMask ends = bit(a) | bit(b);
    if (used & ends) return false;
    used |= ends;
  }
  const std::size_t r = m.pairs.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j && g.adjacent(m.pairs[i].first, m.pairs[j].first)) return false;
      if (g.adjacent(m.pairs[i].first, m.pairs[j].second) && i > j) return false;
    }
  }
  return true;
}

namespace {

// Depth-first search over edges in index order, taking an edge before
// skipping it, so the first maximum found is the lexicographically smallest.
class MatchingSearch {
 public:
  MatchingSearch(const Graph& g, bool induced) : g_(g), induced_(induced) {
    for (const Edge& e : g.edges()) live_ |= bit(e.u) | bit(e.v);
  }

  void run() { dfs(0, 0, 0); }

  std::size_t best = 0;
  std::vector<Edge> witness;

 private:
  void dfs(std::size_t from, VertexMask used, VertexMask blocked) {
    if (current_.size() > best) {
      best = current_.size();
      witness = current_;
    }
    const auto free_count = static_cast<std::size_t>(std::popcount(live_ & ~blocked));
    if (current_.size() + free_count / 2 <= best) return;
    const auto& edges = g_.edges();
    for (std::size_t i = from; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      const VertexMask ends = bit(e.u) | bit(e.v);
      if (blocked & ends) continue;
      const VertexMask next_blocked =
          induced_ ? (blocked | g_.closed_neighbor_mask(e.u) | g_.closed_neighbor_mask(e.v))
                   : (blocked | ends);
      current_.push_back(e);
      dfs(i + 1, used | ends, next_blocked);
      current_.pop_back();
      const auto remaining = static_cast<std::size_t>(std::popcount(live_ & ~blocked));
      if (current_.size() + remaining / 2 <= best) return;
    }
  }

  const Graph& g_;
  bool induced_;
  VertexMask live_ = 0;
  std::vector<Edge> current_;
};

class OrderedSearch {
 public:
  explicit OrderedSearch(const Graph& g) : g_(g) {
    for (const Edge& e : g.edges()) live_ |= bit(e.u) | bit(e.v);
  }

  void run() { dfs(0, 0); }

  std::size_t best = 0;
  OrderedMatching witness;

 private:
  // used: endpoints taken so far; forbid_a: vertices that may no longer serve
  // as an a-vertex (taken, or adjacent to an earlier a or b).
  void dfs(VertexMask used, VertexMask forbid_a) {
    if (current_.pairs.size() > best) {
      best = current_.pairs.size();
      witness = current_;
    }
    const auto n = static_cast<int>(g_.num_vertices());
    for (int a = 0; a < n; ++a) {
      const auto free_count = static_cast<std::size_t>(std::popcount(live_ & ~used));
      if (current_.pairs.size() + free_count / 2 <= best) return;
      if ((forbid_a >> a) & 1U) continue;
      VertexMask candidates = g_.neighbor_mask(a) & ~used;
      while (candidates) {
        const int b = std::countr_zero(candidates);
        candidates &= candidates - 1;
        current_.pairs.emplace_back(a, b);
        const VertexMask next_used = used | bit(a) | bit(b);
        dfs(next_used, forbid_a | next_used | g_.neighbor_mask(a) | g_.neighbor_mask(b));
        current_.pairs.pop_back();
      }
    }
  }

  const Graph& g_;
  VertexMask live_ = 0;
  OrderedMatching current_;
};

}  // namespace

std::pair<std::size_t, std::vector<Edge>> matching_number(const Graph& g) {
  MatchingSearch s(g, false);
  s.run();
  return {s.best, s.witness};
}

std::pair<std::size_t, std::vector<Edge>> induced_matching_number(const Graph& g) {
  MatchingSearch s(g, true);
  s.run();
  return {s.best, s.witness};
}

std::pair<std::size_t, OrderedMatching> ordered_matching_number(const Graph& g) {
  OrderedSearch s(g);
  s.run();
  return {s.best, s.witness};
}

MatchingReport matching_report(const Graph& g) {
  MatchingReport r;
  std::tie(r.matching_number, r.matching_witness) = matching_number(g);
  std::tie(r.induced_matching_number, r.induced_matching_witness) = induced_matching_number(g);
  std::tie(r.ordered_matching_number, r.ordered_matching_witness) = ordered_matching_number(g);
  return r;
}

}  // namespace coverlab
