#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "coverlab/graph.hpp"

namespace coverlab {

/// Dense exponent vector over an ambient variable list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  /// The monomial 1 in `nvars` variables.
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  /// Product of the variables whose bits are set in `support`.
  static Monomial squarefree(std::size_t nvars, std::uint64_t support);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  int degree() const noexcept;
  bool is_one() const noexcept;
  bool is_squarefree() const noexcept;
  std::uint64_t support() const noexcept;

  bool divides(const Monomial& other) const noexcept;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / gcd(a, b): the colon of the principal ideal (a) by b.
  friend Monomial colon(const Monomial& a, const Monomial& b);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// "x1^2*x3"; the monomial 1 prints as "1".
std::string to_string(const Monomial& m, const std::vector<std::string>& vars);

struct IdealLimits {
  std::size_t max_generators = 100000;
};

/// Monomial ideal in minimal-generator normal form: generators pairwise
/// incomparable under divisibility, sorted lexicographically by exponent
/// vector. The zero ideal has no generators; the unit ideal has the single
/// generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimizes `gens`. Throws Error when a generator has the wrong length.
  MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::vector<std::string> variables);
  static MonomialIdeal unit(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_variables() const noexcept { return vars_.size(); }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const noexcept;

  /// Index of a variable label; throws Error for unknown labels.
  std::size_t variable_index(std::string_view label) const;

  /// Builds a monomial from {label: exponent}; throws Error on unknown labels.
  Monomial monomial(const std::map<std::string, int>& exponents) const;

  bool contains(const Monomial& m) const;

  /// Componentwise maximum of the generator exponents (the lcm of all generators).
  Monomial generator_lcm() const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<std::string> vars_;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset, sorted.
std::vector<Monomial> minimize_generators(std::vector<Monomial> gens);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                        const IdealLimits& limits = {});
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b,
                       const IdealLimits& limits = {});
MonomialIdeal power(const MonomialIdeal& a, int k, const IdealLimits& limits = {});
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);
/// I ∩ K[vars \ {x}], presented over the smaller variable list.
MonomialIdeal restrict_variable(const MonomialIdeal& a, std::string_view variable);
/// m·I.
MonomialIdeal scale(const MonomialIdeal& a, const Monomial& m);
/// Re-expresses `a` over a larger variable list containing all of its variables.
MonomialIdeal extend_variables(const MonomialIdeal& a, const std::vector<std::string>& variables);

/// Product of all variables of the ideal's ring.
Monomial product_of_variables(std::size_t nvars);

/// (x_i x_j : {x_i,x_j} ∈ E(G)) over the vertex labels of G.
MonomialIdeal edge_ideal(const Graph& g);
/// ∩ over edges of (x_i, x_j).
MonomialIdeal cover_ideal(const Graph& g, const IdealLimits& limits = {});
/// ∩ over edges of (x_i, x_j)^k. k = 0 gives the unit ideal; k < 0 throws.
MonomialIdeal symbolic_power(const Graph& g, int k, const IdealLimits& limits = {});
/// Membership in J(G)^(k) without generator expansion: every edge's two
/// exponents must sum to at least k.
bool in_symbolic_power(const Graph& g, int k, const Monomial& m);

// JSON form: {"variables": [...], "generators": [{"x1": 2, ...}, ...]}.
nlohmann::json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

}  // namespace coverlab
