#include "rank.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "coverlab/error.hpp"
#include "coverlab/homology.hpp"

namespace coverlab::detail {

namespace {

struct Overflow {};

// int64 arithmetic that signals overflow instead of wrapping.
struct Checked {
  using value_type = std::int64_t;
  static value_type mul(value_type a, value_type b) {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static value_type sub(value_type a, value_type b) {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static value_type gcd(value_type a, value_type b) { return std::gcd(a, b); }
  static value_type abs(value_type a) { return a < 0 ? -a : a; }
};

struct Big {
  using value_type = boost::multiprecision::cpp_int;
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type gcd(const value_type& a, const value_type& b) {
    return boost::multiprecision::gcd(a, b);
  }
  static value_type abs(const value_type& a) { return a < 0 ? value_type(-a) : a; }
};

template <class Ops>
using Row = std::vector<std::pair<int, typename Ops::value_type>>;

template <class Ops>
void normalize(Row<Ops>& r) {
  using T = typename Ops::value_type;
  T g = 0;
  for (const auto& [c, v] : r) g = Ops::gcd(g, Ops::abs(v));
  if (g > 1) {
    for (auto& [c, v] : r) v /= g;
  }
}

// r <- (lead p)/g * r - (lead r)/g * p, which cancels the shared leading column.
template <class Ops>
Row<Ops> eliminate(const Row<Ops>& r, const Row<Ops>& p) {
  using T = typename Ops::value_type;
  const T g = Ops::gcd(Ops::abs(r.front().second), Ops::abs(p.front().second));
  const T fr = p.front().second / g;
  const T fp = r.front().second / g;
  Row<Ops> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 1;
  std::size_t j = 1;
  while (i < r.size() || j < p.size()) {
    if (j >= p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, Ops::mul(fr, r[i].second));
      ++i;
    } else if (i >= r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, Ops::sub(0, Ops::mul(fp, p[j].second)));
      ++j;
    } else {
      T v = Ops::sub(Ops::mul(fr, r[i].second), Ops::mul(fp, p[j].second));
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  normalize<Ops>(out);
  return out;
}

template <class Ops>
std::size_t rank_fraction_free(const std::vector<SparseRow>& input, std::size_t ncols) {
  std::vector<Row<Ops>> rows;
  rows.reserve(input.size());
  for (const auto& r : input) {
    Row<Ops> row;
    for (const auto& [c, v] : r) {
      if (v != 0) row.emplace_back(c, typename Ops::value_type(v));
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<Row<Ops>> pivot(ncols);
  std::size_t rank = 0;
  for (auto& r : rows) {
    while (!r.empty()) {
      auto& p = pivot[static_cast<std::size_t>(r.front().first)];
      if (p.empty()) {
        p = std::move(r);
        ++rank;
        break;
      }
      r = eliminate<Ops>(r, p);
    }
  }
  return rank;
}

// Operands stay below p < 2^32, so products fit in 64 unsigned bits.
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b) %
                                   static_cast<std::uint64_t>(p));
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t base = a % p;
  std::int64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

std::size_t rank_mod_prime(const std::vector<SparseRow>& input, std::size_t ncols, std::int64_t p) {
  using R = std::vector<std::pair<int, std::int64_t>>;
  std::vector<R> rows;
  for (const auto& r : input) {
    R row;
    for (const auto& [c, v] : r) {
      const std::int64_t m = ((v % p) + p) % p;
      if (m != 0) row.emplace_back(c, m);
    }
    std::sort(row.begin(), row.end());
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::vector<R> pivot(ncols);
  std::size_t rank = 0;
  for (auto& r : rows) {
    while (!r.empty()) {
      auto& pv = pivot[static_cast<std::size_t>(r.front().first)];
      if (pv.empty()) {
        const std::int64_t inv = mod_inverse(r.front().second, p);
        for (auto& [c, v] : r) v = mulmod(v, inv, p);
        pv = std::move(r);
        ++rank;
        break;
      }
      const std::int64_t f = r.front().second;
      R out;
      std::size_t i = 1;
      std::size_t j = 1;
      while (i < r.size() || j < pv.size()) {
        if (j >= pv.size() || (i < r.size() && r[i].first < pv[j].first)) {
          out.push_back(r[i++]);
        } else if (i >= r.size() || pv[j].first < r[i].first) {
          out.emplace_back(pv[j].first, (p - mulmod(f, pv[j].second, p)) % p);
          ++j;
        } else {
          const std::int64_t v =
              ((r[i].second - mulmod(f, pv[j].second, p)) % p + p) % p;
          if (v != 0) out.emplace_back(r[i].first, v);
          ++i;
          ++j;
        }
      }
      r = std::move(out);
    }
  }
  return rank;
}

}  // namespace

std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t ncols, std::uint32_t prime) {
  if (prime != 0) return rank_mod_prime(rows, ncols, prime);
  try {
    return rank_fraction_free<Checked>(rows, ncols);
  } catch (const Overflow&) {
    return rank_fraction_free<Big>(rows, ncols);
  }
}

}  // namespace coverlab::detail

namespace coverlab {

std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t prime) {
  std::size_t ncols = 0;
  std::vector<detail::SparseRow> sparse;
  for (const auto& r : rows) {
    ncols = std::max(ncols, r.size());
    detail::SparseRow s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] != 0) s.emplace_back(static_cast<int>(c), r[c]);
    }
    sparse.push_back(std::move(s));
  }
  return detail::sparse_rank(sparse, ncols, prime);
}

}  // namespace coverlab
