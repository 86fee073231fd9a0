#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace coverlab::detail {

using SparseRow = std::vector<std::pair<int, std::int64_t>>;

/// Rank over Q (prime == 0, int64 fraction-free elimination with a
/// multiprecision retry on overflow) or over GF(prime).
std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t ncols, std::uint32_t prime);

}  // namespace coverlab::detail
