#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "coverlab/error.hpp"
#include "coverlab/homology.hpp"
#include "rank.hpp"

namespace coverlab {

namespace {

void check_vertex_count(std::size_t n) {
  if (n > SimplicialComplex::kMaxVertices) {
    throw GuardExceeded("simplicial complex has too many vertices", n, SimplicialComplex::kMaxVertices);
  }
}

Face vertex_range(std::size_t n) { return n >= 32 ? ~Face{0} : (Face{1} << n) - 1; }

// Keeps only inclusion-maximal faces.
std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(),
            [](Face a, Face b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b; });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> out;
  for (Face f : faces) {
    if (std::none_of(out.begin(), out.end(), [&](Face g) { return (f & ~g) == 0; })) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> closure(std::span<const Face> facets) {
  std::unordered_set<Face> seen;
  for (Face f : facets) {
    // Enumerate every subset of f.
    Face s = f;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

ReducedHomology homology_of_faces(const std::vector<Face>& faces, std::uint32_t prime) {
  ReducedHomology out;
  if (faces.empty()) return out;  // void complex

  int top = 0;
  for (Face f : faces) top = std::max(top, std::popcount(f) - 1);
  // by_dim[d + 1] lists the d-dimensional faces.
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(top + 2));
  for (Face f : faces) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  std::vector<std::unordered_map<Face, int>> index(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    index[d].reserve(by_dim[d].size());
    for (std::size_t i = 0; i < by_dim[d].size(); ++i) index[d].emplace(by_dim[d][i], static_cast<int>(i));
  }

  // rank[d + 1] = rank of the boundary C_d -> C_{d-1}, d = 0..top.
  std::vector<std::size_t> rank(by_dim.size() + 1, 0);
  for (std::size_t level = 1; level < by_dim.size(); ++level) {
    std::vector<detail::SparseRow> rows;
    rows.reserve(by_dim[level].size());
    for (Face f : by_dim[level]) {
      detail::SparseRow row;
      int sign = 1;
      Face rest = f;
      while (rest) {
        const Face v = rest & (~rest + 1);
        rest &= rest - 1;
        row.emplace_back(index[level - 1].at(f & ~v), sign);
        sign = -sign;
      }
      rows.push_back(std::move(row));
    }
    // Rank of the transpose equals the rank; rows here are the d-faces.
    rank[level] = detail::sparse_rank(rows, by_dim[level - 1].size(), prime);
  }

  out.dims.resize(by_dim.size(), 0);
  for (std::size_t level = 0; level < by_dim.size(); ++level) {
    const std::size_t cycles = by_dim[level].size() - rank[level];
    out.dims[level] = cycles - rank[level + 1];
  }
  while (!out.dims.empty() && out.dims.back() == 0) out.dims.pop_back();
  return out;
}

}  // namespace

bool ReducedHomology::acyclic() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t num_vertices, std::span<const Face> facets) {
  check_vertex_count(num_vertices);
  SimplicialComplex c;
  c.nverts_ = num_vertices;
  for (Face f : facets) {
    if (f & ~vertex_range(num_vertices)) throw Error("facet uses a vertex outside the ground set");
  }
  c.faces_ = closure(facets);
  return c;
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t num_vertices, std::vector<Face> faces) {
  check_vertex_count(num_vertices);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex c;
  c.nverts_ = num_vertices;
  c.faces_ = std::move(faces);
  for (Face f : c.faces_) {
    if (f & ~vertex_range(num_vertices)) throw Error("face uses a vertex outside the ground set");
    Face rest = f;
    while (rest) {
      const Face v = rest & (~rest + 1);
      rest &= rest - 1;
      if (!c.contains(f & ~v)) throw Error("face set is not closed under subsets");
    }
  }
  return c;
}

bool SimplicialComplex::contains(Face f) const { return std::binary_search(faces_.begin(), faces_.end(), f); }

std::vector<Face> SimplicialComplex::facets() const { return maximal_faces(faces_); }

int SimplicialComplex::dimension() const {
  int d = -1;
  for (Face f : faces_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

ReducedHomology reduced_homology_dims(const SimplicialComplex& c, const HomologyOptions& opts) {
  if (c.num_vertices() > opts.max_complex_vertices) {
    throw GuardExceeded("complex exceeds vertex guard", c.num_vertices(), opts.max_complex_vertices);
  }
  return homology_of_faces(c.faces(), opts.prime);
}

ReducedHomology reduced_homology_from_facets(std::vector<Face> facets, const HomologyOptions& opts) {
  if (facets.empty()) return {};
  facets = maximal_faces(std::move(facets));
  while (true) {
    if (facets.size() == 1) {
      ReducedHomology h;
      if (facets.front() == 0) h.dims = {1};  // {∅}
      return h;                               // a simplex is contractible
    }
    Face common = ~Face{0};
    Face support = 0;
    for (Face f : facets) {
      common &= f;
      support |= f;
    }
    if (common != 0) return {};  // cone
    if (static_cast<std::size_t>(std::popcount(support)) > opts.max_complex_vertices) {
      throw GuardExceeded("complex exceeds vertex guard", static_cast<std::size_t>(std::popcount(support)),
                          opts.max_complex_vertices);
    }

    // v is dominated when the facets through v all contain some other vertex;
    // deleting a dominated vertex is a strong collapse.
    bool removed = false;
    Face rest = support;
    while (rest && !removed) {
      const Face v = rest & (~rest + 1);
      rest &= rest - 1;
      Face meet = ~Face{0};
      for (Face f : facets) {
        if (f & v) meet &= f;
      }
      if (meet & ~v) {
        for (Face& f : facets) f &= ~v;
        facets = maximal_faces(std::move(facets));
        removed = true;
      }
    }
    if (!removed) break;
  }
  return homology_of_faces(closure(facets), opts.prime);
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal, const HomologyOptions& opts) {
  if (!ideal.is_squarefree()) throw Error("Stanley-Reisner complex needs a squarefree ideal");
  if (ideal.is_unit()) throw Error("Stanley-Reisner complex of the unit ideal is void");
  const std::size_t n = ideal.num_variables();
  if (n > opts.max_complex_vertices) {
    throw GuardExceeded("Stanley-Reisner complex exceeds vertex guard", n, opts.max_complex_vertices);
  }
  std::vector<Face> nonfaces;
  for (const auto& g : ideal.generators()) nonfaces.push_back(static_cast<Face>(g.support()));
  std::vector<Face> faces;
  const Face all = vertex_range(n);
  for (Face w = 0;; ++w) {
    if (std::none_of(nonfaces.begin(), nonfaces.end(), [&](Face s) { return (s & ~w) == 0; })) {
      faces.push_back(w);
    }
    if (w == all) break;
  }
  return SimplicialComplex::from_faces(n, std::move(faces));
}

}  // namespace coverlab
