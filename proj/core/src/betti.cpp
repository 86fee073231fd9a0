#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "coverlab/construction.hpp"
#include "coverlab/error.hpp"
#include "coverlab/homology.hpp"

namespace coverlab {

void BettiTable::add(int i, std::vector<int> multidegree, std::size_t value) {
  if (value == 0) return;
  entries_[{i, std::move(multidegree)}] += value;
}

std::size_t BettiTable::at(int i, const std::vector<int>& multidegree) const {
  auto it = entries_.find({i, multidegree});
  return it == entries_.end() ? 0 : it->second;
}

std::map<std::pair<int, int>, std::size_t> BettiTable::coarse() const {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [key, value] : entries_) {
    const int j = std::accumulate(key.second.begin(), key.second.end(), 0);
    out[{key.first, j}] += value;
  }
  return out;
}

int BettiTable::projective_dimension() const {
  if (entries_.empty()) throw Error("projective dimension of the zero module");
  int pd = 0;
  for (const auto& [key, value] : entries_) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw Error("regularity of the zero module");
  int reg = 0;
  for (const auto& [key, value] : entries_) {
    const int j = std::accumulate(key.second.begin(), key.second.end(), 0);
    reg = std::max(reg, j - key.first);
  }
  return reg;
}

nlohmann::json to_json(const BettiTable& table) {
  nlohmann::json fine = nlohmann::json::array();
  for (const auto& [key, value] : table.entries()) {
    fine.push_back({{"i", key.first}, {"multidegree", key.second}, {"value", value}});
  }
  nlohmann::json coarse = nlohmann::json::array();
  for (const auto& [key, value] : table.coarse()) {
    coarse.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
  }
  return {{"multigraded", std::move(fine)}, {"coarse", std::move(coarse)}};
}

namespace {

std::vector<int> mask_degree(std::size_t n, Face w) {
  std::vector<int> a(n, 0);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<int>((w >> i) & 1U);
  return a;
}

}  // namespace

BettiTable hochster_betti(const MonomialIdeal& ideal, const HomologyOptions& opts) {
  if (!ideal.is_squarefree()) throw Error("Hochster's formula needs a squarefree ideal");
  const std::size_t n = ideal.num_variables();
  if (n > opts.max_hochster_variables) {
    throw GuardExceeded("Hochster sweep exceeds variable guard", n, opts.max_hochster_variables);
  }
  if (n > SimplicialComplex::kMaxVertices) {
    throw GuardExceeded("Hochster sweep exceeds bitmask width", n, SimplicialComplex::kMaxVertices);
  }
  BettiTable table;
  if (ideal.is_unit()) return table;  // S/I = 0
  table.add(0, std::vector<int>(n, 0), 1);

  std::vector<Face> supports;
  for (const auto& g : ideal.generators()) supports.push_back(static_cast<Face>(g.support()));

  // Supports W outside the lcm lattice make Δ|_W a cone.
  std::unordered_set<Face> lattice{0};
  for (Face s : supports) {
    std::vector<Face> grown;
    for (Face w : lattice) grown.push_back(w | s);
    lattice.insert(grown.begin(), grown.end());
  }
  std::vector<Face> sweep(lattice.begin(), lattice.end());
  std::sort(sweep.begin(), sweep.end());

  for (Face w : sweep) {
    if (w == 0) continue;
    // Alexander dual of Δ|_W inside W: facets W \ σ for generator supports σ ⊆ W.
    std::vector<Face> dual;
    for (Face s : supports) {
      if ((s & ~w) == 0) dual.push_back(w & ~s);
    }
    // dim H̃_{|W|-i-1}(Δ|_W) = dim H̃_{i-2}(dual)
    const ReducedHomology h = reduced_homology_from_facets(std::move(dual), opts);
    for (std::size_t idx = 0; idx < h.dims.size(); ++idx) {
      const int d = static_cast<int>(idx) - 1;
      table.add(d + 2, mask_degree(n, w), h.dims[idx]);
    }
  }
  return table;
}

BettiTable upper_koszul_betti(const MonomialIdeal& ideal, const HomologyOptions& opts) {
  const std::size_t n = ideal.num_variables();
  if (n > SimplicialComplex::kMaxVertices) {
    throw GuardExceeded("upper Koszul complex exceeds bitmask width", n, SimplicialComplex::kMaxVertices);
  }
  BettiTable table;
  if (ideal.is_unit()) return table;
  table.add(0, std::vector<int>(n, 0), 1);
  if (ideal.is_zero()) return table;

  const Monomial top = ideal.generator_lcm();
  std::size_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    box *= static_cast<std::size_t>(top[i] + 1);
    if (box > opts.max_koszul_box) {
      throw GuardExceeded("upper Koszul box exceeds guard", box, opts.max_koszul_box);
    }
  }

  std::vector<int> a(n, 0);
  for (std::size_t step = 0; step < box; ++step) {
    const Monomial m(a);
    if (ideal.contains(m)) {
      Face supp = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] > 0) supp |= Face{1} << i;
      }
      // K^a: squarefree F ⊆ supp(a) with x^(a-F) ∈ I.
      std::vector<Face> faces;
      Face f = supp;
      while (true) {
        std::vector<int> b = a;
        for (std::size_t i = 0; i < n; ++i) {
          if ((f >> i) & 1U) --b[i];
        }
        if (ideal.contains(Monomial(std::move(b)))) faces.push_back(f);
        if (f == 0) break;
        f = (f - 1) & supp;
      }
      std::sort(faces.begin(), faces.end());
      // A vertex joinable to every face makes K^a a cone.
      bool cone = false;
      for (std::size_t v = 0; v < n && !cone; ++v) {
        const Face bit = Face{1} << v;
        if (!(supp & bit)) continue;
        cone = std::all_of(faces.begin(), faces.end(),
                           [&](Face x) { return std::binary_search(faces.begin(), faces.end(), x | bit); });
      }
      if (!cone) {
        const auto complex = SimplicialComplex::from_faces(n, std::move(faces));
        HomologyOptions explicit_opts = opts;
        explicit_opts.max_complex_vertices = SimplicialComplex::kMaxVertices;
        const ReducedHomology h = reduced_homology_dims(complex, explicit_opts);
        for (std::size_t idx = 0; idx < h.dims.size(); ++idx) {
          const int d = static_cast<int>(idx) - 1;
          // β_{d+1,a}(I) = β_{d+2,a}(S/I)
          table.add(d + 2, a, h.dims[idx]);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (++a[i] <= top[i]) break;
      a[i] = 0;
    }
  }
  return table;
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const IdealLimits& limits) {
  if (!ideal.is_squarefree()) throw Error("Alexander dual needs a squarefree ideal");
  const std::size_t n = ideal.num_variables();
  MonomialIdeal acc = MonomialIdeal::unit(ideal.variables());
  for (const auto& u : ideal.generators()) {
    std::vector<Monomial> prime;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] > 0) prime.push_back(Monomial::squarefree(n, std::uint64_t{1} << i));
    }
    acc = intersect(acc, MonomialIdeal(ideal.variables(), std::move(prime)), limits);
  }
  return acc;
}

QuotientInvariants invariants_of_quotient(const Graph& g, int k, const HomologyOptions& opts,
                                          bool with_edge_side) {
  if (k < 1) throw Error("invariants need k >= 1");
  QuotientInvariants out;
  out.n = g.num_vertices();
  out.k = k;
  if (g.num_edges() == 0) {
    out.depth = ExtInt::infinity();
    return out;
  }
  const std::size_t nk = g.num_vertices() * static_cast<std::size_t>(k);
  if (nk > opts.max_hochster_variables) {
    throw GuardExceeded("n*k exceeds Hochster guard", nk, opts.max_hochster_variables);
  }
  const PolarizationResult pol = polarize(symbolic_power(g, k));
  out.polarized_variables = pol.ideal.num_variables();
  const BettiTable table = hochster_betti(pol.ideal, opts);
  out.pd = table.projective_dimension();
  out.reg = table.regularity();
  // Auslander–Buchsbaum; pd is invariant under polarization.
  out.depth.value = static_cast<int>(out.n) - *out.pd;
  if (with_edge_side) {
    const LayeredGraph gk = build_layered_graph(g, k);
    out.reg_layered_edge_quotient = hochster_betti(edge_ideal(gk.graph), opts).regularity();
  }
  return out;
}

TeraiResult terai_check(const MonomialIdeal& ideal, const HomologyOptions& opts) {
  if (ideal.is_zero() || ideal.is_unit()) throw Error("Terai check needs a proper nonzero ideal");
  TeraiResult r;
  r.reg_ideal = hochster_betti(ideal, opts).regularity() + 1;
  r.pd_dual_quotient = hochster_betti(alexander_dual(ideal), opts).projective_dimension();
  return r;
}

}  // namespace coverlab
