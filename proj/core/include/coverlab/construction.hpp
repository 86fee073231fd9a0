#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coverlab/graph.hpp"
#include "coverlab/ideal.hpp"

namespace coverlab {

/// Label of the level-`level` copy of `base` ("x3#2").
std::string layered_label(const std::string& base, int level);

/// A polarization variable: which original variable it replaces, and at which level.
struct PolarVariable {
  std::size_t original = 0;
  int level = 1;
};

struct PolarizationResult {
  MonomialIdeal ideal;
  /// varmap[j] describes ideal.variables()[j].
  std::vector<PolarVariable> varmap;
  /// Variables of the unpolarized ideal.
  std::vector<std::string> original_variables;
};

/// Replaces x_i^a by x_i#1 ⋯ x_i#a in every minimal generator. The new ring has
/// variables x_i#1..x_i#a_i with a_i the largest exponent of x_i, ordered by
/// original variable then level. The zero ideal polarizes to the zero ideal.
PolarizationResult polarize(const MonomialIdeal& ideal);

/// Inverse substitution x_i#l -> x_i.
MonomialIdeal depolarize(const PolarizationResult& pol);

/// G_k: vertices x#p (p = 1..k) for every vertex x of the base graph, with
/// {x_i#p, x_j#q} an edge iff {x_i, x_j} is a base edge and p + q <= k + 1.
struct LayeredGraph {
  Graph base;
  int k = 1;
  Graph graph;

  /// Vertex index of level `level` (1-based) of base vertex `vertex`.
  int vertex(int base_vertex, int level) const { return base_vertex * k + (level - 1); }
};

LayeredGraph build_layered_graph(const Graph& g, int k);

/// Compares the polarization of J(G)^(k) with the cover ideal of G_k under
/// the identification x_i#l <-> x_i#p.
bool check_polarization_is_cover_ideal(const Graph& g, int k, const IdealLimits& limits = {});

struct InducedMatchingWitness {
  int k = 0;
  std::size_t t = 0;
  /// Position-ordered relabeling used by the construction: slot s (1-based
  /// s = 1..2t) holds the base vertex renamed to x_s; slots 1..t are the
  /// a-side, t+1..2t the b-side.
  std::vector<int> slots;
  /// Edges of G_k, as vertex indices of `layered.graph`.
  std::vector<Edge> edges;
  LayeredGraph layered;
  /// Result of the generic induced-matching check on G_k.
  bool validated = false;
};

/// For an ordered matching {(a_i, b_i)} of size t and k >= 2t - 1, the edges
/// {a_i#(t+1-i), b_i#(k+i-t)} of G_k. Throws Error below the threshold or for
/// an invalid ordered matching.
InducedMatchingWitness induced_matching_witness(const Graph& g, const OrderedMatching& m, int k);

struct LayerEmbedding {
  int k = 0;
  /// map[v] = index in G_{k+1} of vertex v of G_k.
  std::vector<int> map;
  /// The removed level-(floor((k+1)/2)+1) vertices of G_{k+1}.
  VertexMask removed = 0;
  bool injective = false;
  bool onto_complement = false;
  bool preserves_adjacency = false;
  bool preserves_non_adjacency = false;

  bool is_isomorphism() const {
    return injective && onto_complement && preserves_adjacency && preserves_non_adjacency;
  }
};

/// x_i#j -> x_i#j for j <= floor((k+1)/2), x_i#(j+1) otherwise; checked
/// pair-by-pair against G_{k+1} \ W.
LayerEmbedding embed_layered_graph(const Graph& g, int k);

}  // namespace coverlab
