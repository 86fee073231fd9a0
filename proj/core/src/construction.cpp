#include "coverlab/construction.hpp"

#include <algorithm>

#include "coverlab/error.hpp"

namespace coverlab {

std::string layered_label(const std::string& base, int level) {
  return base + "#" + std::to_string(level);
}

PolarizationResult polarize(const MonomialIdeal& ideal) {
  PolarizationResult out;
  out.original_variables = ideal.variables();
  const Monomial top = ideal.generator_lcm();
  const std::size_t n = ideal.num_variables();

  std::vector<std::size_t> offset(n, 0);
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) {
    offset[i] = vars.size();
    for (int l = 1; l <= top[i]; ++l) {
      vars.push_back(layered_label(ideal.variables()[i], l));
      out.varmap.push_back({i, l});
    }
  }
  std::vector<Monomial> gens;
  for (const auto& u : ideal.generators()) {
    std::vector<int> e(vars.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (int l = 0; l < u[i]; ++l) e[offset[i] + static_cast<std::size_t>(l)] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  out.ideal = MonomialIdeal(std::move(vars), std::move(gens));
  return out;
}

MonomialIdeal depolarize(const PolarizationResult& pol) {
  const std::size_t n = pol.original_variables.size();
  std::vector<Monomial> gens;
  for (const auto& u : pol.ideal.generators()) {
    std::vector<int> e(n, 0);
    for (std::size_t j = 0; j < u.size(); ++j) e[pol.varmap[j].original] += u[j];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(pol.original_variables, std::move(gens));
}

LayeredGraph build_layered_graph(const Graph& g, int k) {
  if (k < 1) throw Error("G_k needs k >= 1");
  LayeredGraph out{g, k, {}};
  std::vector<std::string> labels;
  labels.reserve(g.num_vertices() * static_cast<std::size_t>(k));
  for (const auto& l : g.labels()) {
    for (int p = 1; p <= k; ++p) labels.push_back(layered_label(l, p));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    for (int p = 1; p <= k; ++p) {
      for (int q = 1; p + q <= k + 1; ++q) edges.push_back({out.vertex(e.u, p), out.vertex(e.v, q)});
    }
  }
  out.graph = Graph(std::move(labels), std::move(edges));
  return out;
}

bool check_polarization_is_cover_ideal(const Graph& g, int k, const IdealLimits& limits) {
  if (k < 1) throw Error("G_k needs k >= 1");
  const PolarizationResult pol = polarize(symbolic_power(g, k, limits));
  const LayeredGraph gk = build_layered_graph(g, k);
  const MonomialIdeal cover = cover_ideal(gk.graph, limits);
  // Levels never exceed k, so every polarization variable names a vertex of G_k.
  return extend_variables(pol.ideal, gk.graph.labels()) == cover;
}

InducedMatchingWitness induced_matching_witness(const Graph& g, const OrderedMatching& m, int k) {
  const std::size_t t = m.size();
  if (!is_ordered_matching(g, m)) throw Error("witness input is not an ordered matching");
  if (k < static_cast<int>(2 * t) - 1) {
    throw Error("construction needs k >= 2t - 1 (k = " + std::to_string(k) +
                ", t = " + std::to_string(t) + ")");
  }
  InducedMatchingWitness w;
  w.k = k;
  w.t = t;
  w.layered = build_layered_graph(g, k);
  for (const auto& [a, b] : m.pairs) w.slots.push_back(a);
  for (const auto& [a, b] : m.pairs) w.slots.push_back(b);

  const int ti = static_cast<int>(t);
  for (int i = 1; i <= ti; ++i) {
    const int a = m.pairs[static_cast<std::size_t>(i - 1)].first;
    const int b = m.pairs[static_cast<std::size_t>(i - 1)].second;
    w.edges.push_back({w.layered.vertex(a, ti + 1 - i), w.layered.vertex(b, k + i - ti)});
  }
  for (Edge& e : w.edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  w.validated = is_induced_matching(w.layered.graph, w.edges);
  return w;
}

LayerEmbedding embed_layered_graph(const Graph& g, int k) {
  if (k < 1) throw Error("embedding needs k >= 1");
  const LayeredGraph small = build_layered_graph(g, k);
  const LayeredGraph big = build_layered_graph(g, k + 1);
  const int half = (k + 1) / 2;

  LayerEmbedding out;
  out.k = k;
  for (int i = 0; i < static_cast<int>(g.num_vertices()); ++i) {
    out.removed |= VertexMask{1} << big.vertex(i, half + 1);
  }
  out.map.assign(small.graph.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(g.num_vertices()); ++i) {
    for (int j = 1; j <= k; ++j) {
      out.map[static_cast<std::size_t>(small.vertex(i, j))] = big.vertex(i, j <= half ? j : j + 1);
    }
  }

  VertexMask image = 0;
  out.injective = true;
  for (int v : out.map) {
    if ((image >> v) & 1U) out.injective = false;
    image |= VertexMask{1} << v;
  }
  out.onto_complement = image == (big.graph.all_vertices_mask() & ~out.removed);

  out.preserves_adjacency = true;
  out.preserves_non_adjacency = true;
  const int nv = static_cast<int>(small.graph.num_vertices());
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      const bool before = small.graph.adjacent(u, v);
      const bool after = big.graph.adjacent(out.map[static_cast<std::size_t>(u)],
                                            out.map[static_cast<std::size_t>(v)]);
      if (before && !after) out.preserves_adjacency = false;
      if (!before && after) out.preserves_non_adjacency = false;
    }
  }
  return out;
}

}  // namespace coverlab
