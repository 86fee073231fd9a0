#include "coverlab/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "coverlab/error.hpp"

namespace coverlab {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw Error("negative exponent");
  }
}

Monomial Monomial::squarefree(std::size_t nvars, std::uint64_t support) {
  std::vector<int> e(nvars, 0);
  for (std::size_t i = 0; i < nvars; ++i) e[i] = static_cast<int>((support >> i) & 1U);
  return Monomial(std::move(e));
}

int Monomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::uint64_t Monomial::support() const noexcept {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < exps_.size() && i < 64; ++i) {
    if (exps_[i] > 0) s |= std::uint64_t{1} << i;
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(0, a.exps_[i] - b.exps_[i]);
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> minimize_generators(std::vector<Monomial> gens) {
  // A divisor has degree <= its multiple, so scanning by degree lets each
  // candidate be tested only against already-kept generators.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& m : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> gens)
    : vars_(std::move(variables)) {
  for (const auto& g : gens) {
    if (g.size() != vars_.size()) throw Error("generator length does not match variable count");
  }
  gens_ = minimize_generators(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(std::vector<std::string> variables) {
  return MonomialIdeal(std::move(variables), {});
}

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> variables) {
  const auto n = variables.size();
  return MonomialIdeal(std::move(variables), {Monomial::one(n)});
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

std::size_t MonomialIdeal::variable_index(std::string_view label) const {
  auto it = std::find(vars_.begin(), vars_.end(), label);
  if (it == vars_.end()) throw Error("unknown variable '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

Monomial MonomialIdeal::monomial(const std::map<std::string, int>& exponents) const {
  std::vector<int> e(vars_.size(), 0);
  for (const auto& [label, exp] : exponents) {
    if (exp < 0) throw Error("negative exponent for '" + label + "'");
    e[variable_index(label)] += exp;
  }
  return Monomial(std::move(e));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.size() != vars_.size()) throw Error("monomial is not over the ideal's variables");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

Monomial MonomialIdeal::generator_lcm() const {
  Monomial out = Monomial::one(vars_.size());
  for (const auto& g : gens_) out = lcm(out, g);
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += coverlab::to_string(gens_[i], vars_);
  }
  return out + ")";
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.variables() != b.variables()) throw Error("ideals live over different variable lists");
}

void check_cap(std::size_t count, const IdealLimits& limits) {
  if (count > limits.max_generators) {
    throw GuardExceeded("generator count exceeds cap", count, limits.max_generators);
  }
}

}  // namespace

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, const IdealLimits& limits) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) gens.push_back(lcm(u, v));
  }
  MonomialIdeal out(a.variables(), std::move(gens));
  check_cap(out.num_generators(), limits);
  return out;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b, const IdealLimits& limits) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) gens.push_back(u * v);
  }
  MonomialIdeal out(a.variables(), std::move(gens));
  check_cap(out.num_generators(), limits);
  return out;
}

MonomialIdeal power(const MonomialIdeal& a, int k, const IdealLimits& limits) {
  if (k < 0) throw Error("negative power");
  MonomialIdeal out = MonomialIdeal::unit(a.variables());
  for (int i = 0; i < k; ++i) out = multiply(out, a, limits);
  return out;
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
  if (m.size() != a.num_variables()) throw Error("monomial is not over the ideal's variables");
  std::vector<Monomial> gens;
  gens.reserve(a.num_generators());
  for (const auto& u : a.generators()) gens.push_back(colon(u, m));
  return MonomialIdeal(a.variables(), std::move(gens));
}

MonomialIdeal restrict_variable(const MonomialIdeal& a, std::string_view variable) {
  const std::size_t drop = a.variable_index(variable);
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < a.num_variables(); ++i) {
    if (i != drop) vars.push_back(a.variables()[i]);
  }
  std::vector<Monomial> gens;
  for (const auto& u : a.generators()) {
    if (u[drop] > 0) continue;
    std::vector<int> e;
    e.reserve(vars.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i != drop) e.push_back(u[i]);
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal scale(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const auto& u : a.generators()) gens.push_back(u * m);
  return MonomialIdeal(a.variables(), std::move(gens));
}

MonomialIdeal extend_variables(const MonomialIdeal& a, const std::vector<std::string>& variables) {
  std::vector<std::size_t> target;
  for (const auto& v : a.variables()) {
    auto it = std::find(variables.begin(), variables.end(), v);
    if (it == variables.end()) throw Error("variable '" + v + "' missing from target ring");
    target.push_back(static_cast<std::size_t>(it - variables.begin()));
  }
  std::vector<Monomial> gens;
  for (const auto& u : a.generators()) {
    std::vector<int> e(variables.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) e[target[i]] = u[i];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(variables, std::move(gens));
}

Monomial product_of_variables(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 1)); }

MonomialIdeal edge_ideal(const Graph& g) {
  const auto n = g.num_vertices();
  std::vector<Monomial> gens;
  for (const Edge& e : g.edges()) {
    gens.push_back(Monomial::squarefree(n, (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v)));
  }
  return MonomialIdeal(g.labels(), std::move(gens));
}

namespace {

// (x_i, x_j)^k as x_i^a x_j^(k-a), a = 0..k.
MonomialIdeal edge_prime_power(std::size_t n, const Edge& e, int k) {
  std::vector<Monomial> gens;
  for (int a = 0; a <= k; ++a) {
    std::vector<int> exps(n, 0);
    exps[static_cast<std::size_t>(e.u)] = a;
    exps[static_cast<std::size_t>(e.v)] = k - a;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(std::vector<std::string>(n), std::move(gens));
}

MonomialIdeal intersect_edge_primes(const Graph& g, int k, const IdealLimits& limits) {
  const auto n = g.num_vertices();
  // Work over placeholder names so the edge primes share a ring, then relabel.
  std::vector<std::string> placeholder(n);
  MonomialIdeal acc = MonomialIdeal::unit(placeholder);
  for (const Edge& e : g.edges()) {
    acc = intersect(acc, edge_prime_power(n, e, k), limits);
  }
  return MonomialIdeal(g.labels(), acc.generators());
}

}  // namespace

MonomialIdeal cover_ideal(const Graph& g, const IdealLimits& limits) {
  return intersect_edge_primes(g, 1, limits);
}

MonomialIdeal symbolic_power(const Graph& g, int k, const IdealLimits& limits) {
  if (k < 0) throw Error("symbolic power exponent must be >= 0");
  if (k == 0) return MonomialIdeal::unit(g.labels());
  return intersect_edge_primes(g, k, limits);
}

bool in_symbolic_power(const Graph& g, int k, const Monomial& m) {
  if (m.size() != g.num_vertices()) throw Error("monomial is not over the graph's vertices");
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return m[static_cast<std::size_t>(e.u)] + m[static_cast<std::size_t>(e.v)] >= k;
  });
}

nlohmann::json to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& u : ideal.generators()) {
    nlohmann::json g = nlohmann::json::object();
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] > 0) g[ideal.variables()[i]] = u[i];
    }
    gens.push_back(std::move(g));
  }
  return {{"variables", ideal.variables()}, {"generators", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("generators")) {
    throw ParseError("ideal JSON needs 'variables' and 'generators'", 0);
  }
  auto vars = j.at("variables").get<std::vector<std::string>>();
  MonomialIdeal ring(vars, {});
  std::vector<Monomial> gens;
  for (const auto& g : j.at("generators")) {
    gens.push_back(ring.monomial(g.get<std::map<std::string, int>>()));
  }
  return MonomialIdeal(std::move(vars), std::move(gens));
}

}  // namespace coverlab
