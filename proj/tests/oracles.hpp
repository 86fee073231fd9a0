#pragma once

// Slow, direct reference implementations used only by the tests. Each one
// follows a definition literally and shares no code path with the library
// routine it checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <boost/rational.hpp>

#include "coverlab/graph.hpp"
#include "coverlab/homology.hpp"
#include "coverlab/ideal.hpp"

namespace oracle {

using coverlab::Edge;
using coverlab::Graph;
using coverlab::VertexMask;

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return Graph(labels, edges);
}

inline bool covers(const Graph& g, VertexMask c) {
  for (const Edge& e : g.edges())
    if (!((c >> e.u) & 1U) && !((c >> e.v) & 1U)) return false;
  return true;
}

/// Every subset tested; minimal = no single vertex can be dropped.
inline std::vector<VertexMask> minimal_covers(const Graph& g) {
  std::vector<VertexMask> out;
  const VertexMask all = (VertexMask{1} << g.num_vertices()) - 1;
  for (VertexMask c = 0; c <= all; ++c) {
    if (!covers(g, c)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < g.num_vertices() && minimal; ++v)
      if (((c >> v) & 1U) && covers(g, c & ~(VertexMask{1} << v))) minimal = false;
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Matchings {
  std::size_t matching = 0;
  std::size_t induced = 0;
  std::size_t ordered = 0;
};

// Ordered: some ordering and orientation of the edges with an independent
// a-side and {a_i, b_j} ∈ E only for i <= j.
inline bool orderable(const Graph& g, std::vector<Edge> m) {
  const std::size_t t = m.size();
  std::vector<std::size_t> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint32_t flips = 0; flips < (1U << t); ++flips) {
      std::vector<int> a(t), b(t);
      for (std::size_t i = 0; i < t; ++i) {
        const Edge& e = m[perm[i]];
        const bool f = (flips >> i) & 1U;
        a[i] = f ? e.v : e.u;
        b[i] = f ? e.u : e.v;
      }
      bool ok = true;
      for (std::size_t i = 0; i < t && ok; ++i)
        for (std::size_t j = 0; j < t && ok; ++j) {
          if (i != j && g.adjacent(a[i], a[j])) ok = false;
          if (j < i && g.adjacent(a[i], b[j])) ok = false;
        }
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Matchings matchings(const Graph& g) {
  Matchings out;
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::vector<Edge> chosen;
    VertexMask used = 0;
    bool disjoint = true;
    for (std::size_t i = 0; i < m && disjoint; ++i) {
      if (!((s >> i) & 1U)) continue;
      const VertexMask ends = (VertexMask{1} << edges[i].u) | (VertexMask{1} << edges[i].v);
      if (used & ends) disjoint = false;
      used |= ends;
      chosen.push_back(edges[i]);
    }
    if (!disjoint) continue;
    out.matching = std::max(out.matching, chosen.size());
    std::size_t inside = 0;
    for (const Edge& e : edges)
      if (((used >> e.u) & 1U) && ((used >> e.v) & 1U)) ++inside;
    if (inside == chosen.size()) out.induced = std::max(out.induced, chosen.size());
    if (chosen.size() > out.ordered && orderable(g, chosen)) out.ordered = chosen.size();
  }
  return out;
}

/// Rank over Q by Gaussian elimination with exact rationals.
inline std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  using Q = boost::rational<long long>;
  std::vector<std::vector<Q>> a;
  std::size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  for (const auto& r : rows) {
    std::vector<Q> row(cols, Q(0));
    for (std::size_t c = 0; c < r.size(); ++c) row[c] = Q(r[c]);
    a.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c].numerator() == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c].numerator() == 0) continue;
      const Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Reduced Euler characteristic -1 + f_0 - f_1 + ... of a face list.
inline long euler(const std::vector<coverlab::Face>& faces) {
  long chi = 0;
  for (auto f : faces) chi += (std::popcount(f) % 2 == 1) ? 1 : -1;
  return chi;
}

/// Hochster's formula on the Stanley-Reisner complex itself: every W ⊆ [n],
/// β_{i,W} = dim H̃_{|W|-i-1}(Δ|_W), with Δ|_W built face by face.
inline coverlab::BettiTable primal_hochster(const coverlab::MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_variables();
  std::vector<coverlab::Face> nonfaces;
  for (const auto& g : ideal.generators()) nonfaces.push_back(static_cast<coverlab::Face>(g.support()));
  coverlab::BettiTable t;
  if (ideal.is_unit()) return t;
  for (coverlab::Face w = 0; w < (coverlab::Face{1} << n); ++w) {
    std::vector<coverlab::Face> faces;
    for (coverlab::Face f = 0; f < (coverlab::Face{1} << n); ++f) {
      if ((f & ~w) != 0) continue;
      if (std::any_of(nonfaces.begin(), nonfaces.end(), [&](auto s) { return (s & ~f) == 0; })) continue;
      faces.push_back(f);
    }
    std::vector<int> deg(n);
    for (std::size_t i = 0; i < n; ++i) deg[i] = static_cast<int>((w >> i) & 1U);
    if (faces.empty()) continue;  // void: no homology
    const auto h = coverlab::reduced_homology_dims(coverlab::SimplicialComplex::from_faces(n, faces));
    const int size = std::popcount(w);
    for (int d = -1; d < size; ++d) {
      const int i = size - d - 1;
      t.add(i, deg, h(d));
    }
  }
  return t;
}

/// Exhaustive interval partitions of an explicit element list inside the box
/// [0, cap]. Every interval containing the first uncovered element is tried,
/// not only those starting at it.
struct PartitionScores {
  int best_sdepth = -1;            // max over partitions of min ρ(upper)
  int best_sreg = 1 << 30;         // min over partitions of max |lower|
  std::size_t partitions = 0;
};

inline PartitionScores exhaustive_partitions(const std::vector<std::vector<int>>& elements, const std::vector<int>& cap) {
  const std::size_t n = cap.size();
  auto leq = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  const std::size_t m = elements.size();
  struct Iv {
    std::vector<std::size_t> members;
    int rho;
    int deg;
  };
  std::vector<Iv> intervals;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!leq(elements[a], elements[b])) continue;
      // [a, b] must lie inside the element set.
      std::size_t box = 1;
      for (std::size_t i = 0; i < n; ++i) box *= static_cast<std::size_t>(elements[b][i] - elements[a][i] + 1);
      std::vector<std::size_t> members;
      for (std::size_t c = 0; c < m; ++c)
        if (leq(elements[a], elements[c]) && leq(elements[c], elements[b])) members.push_back(c);
      if (members.size() != box) continue;
      int rho = 0;
      for (std::size_t i = 0; i < n; ++i) rho += elements[b][i] == cap[i];
      intervals.push_back({members, rho, std::accumulate(elements[a].begin(), elements[a].end(), 0)});
    }
  PartitionScores out;
  std::vector<char> covered(m, 0);
  std::function<void(int, int)> rec = [&](int min_rho, int max_deg) {
    std::size_t first = 0;
    while (first < m && covered[first]) ++first;
    if (first == m) {
      ++out.partitions;
      out.best_sdepth = std::max(out.best_sdepth, min_rho);
      out.best_sreg = std::min(out.best_sreg, max_deg);
      return;
    }
    for (const auto& iv : intervals) {
      if (std::find(iv.members.begin(), iv.members.end(), first) == iv.members.end()) continue;
      if (std::any_of(iv.members.begin(), iv.members.end(), [&](std::size_t c) { return covered[c] != 0; })) continue;
      for (auto c : iv.members) covered[c] = 1;
      rec(std::min(min_rho, iv.rho), std::max(max_deg, iv.deg));
      for (auto c : iv.members) covered[c] = 0;
    }
  };
  rec(1 << 30, -1);
  return out;
}

/// Elements of the characteristic poset by a plain membership scan.
inline std::vector<std::vector<int>> poset_elements(const coverlab::MonomialIdeal& ideal, const std::vector<int>& cap,
                                                    bool ideal_mode) {
  const std::size_t n = cap.size();
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  while (true) {
    if (ideal.contains(coverlab::Monomial(a)) == ideal_mode) out.push_back(a);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++a[i] <= cap[i]) break;
      a[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace oracle
