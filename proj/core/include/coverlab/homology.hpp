#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "coverlab/graph.hpp"
#include "coverlab/ideal.hpp"

namespace coverlab {

/// Face of a simplicial complex as a vertex bitmask.
using Face = std::uint32_t;

/// Finite simplicial complex given by its explicit face set (closed under
/// subsets). The empty complex {∅} and the void complex {} are distinct.
class SimplicialComplex {
 public:
  static constexpr std::size_t kMaxVertices = 31;

  SimplicialComplex() = default;
  /// Closure of `facets` on `num_vertices` vertices.
  static SimplicialComplex from_facets(std::size_t num_vertices, std::span<const Face> facets);
  /// Throws Error unless `faces` is closed under taking subsets.
  static SimplicialComplex from_faces(std::size_t num_vertices, std::vector<Face> faces);

  std::size_t num_vertices() const noexcept { return nverts_; }
  /// Sorted ascending.
  const std::vector<Face>& faces() const noexcept { return faces_; }
  bool contains(Face f) const;
  bool is_void() const noexcept { return faces_.empty(); }
  std::vector<Face> facets() const;
  int dimension() const;

 private:
  std::size_t nverts_ = 0;
  std::vector<Face> faces_;
};

/// Reduced homology dimensions; dims[d + 1] = dim H̃_d for d = -1, 0, 1, ...
struct ReducedHomology {
  std::vector<std::size_t> dims;

  std::size_t operator()(int d) const {
    const auto i = static_cast<std::size_t>(d + 1);
    return d >= -1 && i < dims.size() ? dims[i] : 0;
  }
  bool acyclic() const;
};

struct HomologyOptions {
  /// 0: ranks over the rationals (exact integer elimination). A prime p: ranks
  /// over GF(p), which only agrees with the rationals away from torsion.
  std::uint32_t prime = 0;
  std::size_t max_complex_vertices = 24;
  std::size_t max_hochster_variables = 20;
  std::size_t max_koszul_box = 200000;
};

/// Rank of an integer matrix over Q (prime == 0) or GF(prime).
std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t prime = 0);

/// Homology straight from the boundary matrices of the explicit face set.
ReducedHomology reduced_homology_dims(const SimplicialComplex& c, const HomologyOptions& opts = {});

/// Same homology from a facet list, after removing dominated vertices
/// (a vertex lying only in facets that all share another vertex).
ReducedHomology reduced_homology_from_facets(std::vector<Face> facets, const HomologyOptions& opts = {});

/// Faces: supports W with x_W ∉ I. Rejects non-squarefree or unit ideals.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal, const HomologyOptions& opts = {});

/// Multigraded Betti numbers of S/I.
class BettiTable {
 public:
  using Key = std::pair<int, std::vector<int>>;

  void add(int i, std::vector<int> multidegree, std::size_t value);
  std::size_t at(int i, const std::vector<int>& multidegree) const;

  const std::map<Key, std::size_t>& entries() const noexcept { return entries_; }
  /// (i, j = |a|) -> sum of β_{i,a}.
  std::map<std::pair<int, int>, std::size_t> coarse() const;

  bool is_zero_module() const noexcept { return entries_.empty(); }
  int projective_dimension() const;
  /// max(|a| - i) over nonzero entries; reg(S/I).
  int regularity() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, std::size_t> entries_;
};

nlohmann::json to_json(const BettiTable& table);

/// β_{i,W}(S/I) = dim H̃_{|W|-i-1}(Δ|_W) for squarefree I. Only supports in the
/// lcm lattice of the generators can carry nonzero entries; each restricted
/// complex is evaluated through its Alexander dual, whose facets are W \ σ.
BettiTable hochster_betti(const MonomialIdeal& ideal, const HomologyOptions& opts = {});

/// β_{i+1,a}(S/I) = β_{i,a}(I) = dim H̃_{i-1}(K^a(I)) with the upper Koszul
/// complex K^a(I) = {F ⊆ supp a : x^(a-F) ∈ I}, for all a below the lcm of the
/// generators. Works for arbitrary monomial ideals.
BettiTable upper_koszul_betti(const MonomialIdeal& ideal, const HomologyOptions& opts = {});

/// Alexander dual of a squarefree ideal: ∩ over generators u of (x_i : x_i | u).
MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const IdealLimits& limits = {});

/// Depth-type value that may be infinite (quotient by the unit ideal).
struct ExtInt {
  std::optional<int> value;  // nullopt == +infinity

  static ExtInt infinity() { return {}; }
  bool is_infinite() const noexcept { return !value.has_value(); }
  std::string to_string() const { return value ? std::to_string(*value) : "inf"; }
  friend bool operator==(const ExtInt&, const ExtInt&) = default;
};

struct QuotientInvariants {
  std::size_t n = 0;
  int k = 0;
  /// depth(S/J(G)^(k)); infinite for edgeless G (J is the unit ideal).
  ExtInt depth;
  /// pd(S/J(G)^(k)), read off the polarized quotient.
  std::optional<int> pd;
  /// reg(S/J(G)^(k)); polarization keeps the graded Betti numbers.
  std::optional<int> reg;
  /// Number of variables of the polarized ring.
  std::size_t polarized_variables = 0;
  /// reg(T/I(G_k)), filled only when requested.
  std::optional<int> reg_layered_edge_quotient;
};

/// pd of S/J(G)^(k) from the Hochster table of its polarization (the cover
/// ideal of G_k), depth by Auslander–Buchsbaum. Guarded by
/// max_hochster_variables on n·k.
QuotientInvariants invariants_of_quotient(const Graph& g, int k, const HomologyOptions& opts = {},
                                          bool with_edge_side = false);

/// reg(I) == pd(S/I^∨), both sides from independent Hochster sweeps.
struct TeraiResult {
  int reg_ideal = 0;
  int pd_dual_quotient = 0;
  bool holds() const { return reg_ideal == pd_dual_quotient; }
};
TeraiResult terai_check(const MonomialIdeal& ideal, const HomologyOptions& opts = {});

}  // namespace coverlab
