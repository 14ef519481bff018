#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cayley/elem.hpp"
#include "cayley/raw_table.hpp"

namespace cayley {

/// Execution strategy for the exhaustive table scans. Serial and parallel
/// kernels report the identical counterexample: the first one in row-major
/// element-index order.
enum class Exec {
  Serial,
  Parallel,
  Auto, // parallel for large tables when OpenMP is compiled in
};

namespace scan {

using ElemIndexMap = std::unordered_map<Elem, std::int32_t, ElemHash>;

/// Map from element value to its first-occurrence position in a list.
ElemIndexMap element_index_map(std::span<const Elem> elements);

/// The table in index form: idx[i*n+j] is the position of entry (i,j) in the
/// element list, or -1 when the entry is not a member.
struct IndexTable {
  int n = 0;
  std::vector<std::int32_t> idx;

  std::int32_t at(int i, int j) const { return idx[static_cast<std::size_t>(i) * n + j]; }
};

IndexTable index_table(const RawTable& t, const ElemIndexMap& map, Exec exec);

/// Auto goes parallel only when the scan is big enough to amortize thread
/// startup; work is the number of inner-loop steps (n^2, n^3, ...).
bool pick_parallel(Exec exec, std::int64_t work);

// Each kernel returns the row-major-first violation, serial and parallel
// variants agreeing exactly. Linear positions decode as documented per kernel.

/// First cell (i,j) with an out-of-group entry.
std::optional<std::pair<int, int>> closure_cex_serial(const IndexTable& t);
std::optional<std::pair<int, int>> closure_cex_parallel(const IndexTable& t);

/// First triple (i,j,k) with t[i][t[j][k]] != t[t[i][j]][k]. Requires a fully
/// mapped table (no -1 entries).
std::optional<std::array<int, 3>> assoc_cex_serial(const IndexTable& t);
std::optional<std::array<int, 3>> assoc_cex_parallel(const IndexTable& t);

/// First element index x such that no y satisfies t[y][x] == 0.
std::optional<int> inverses_cex_serial(const IndexTable& t);
std::optional<int> inverses_cex_parallel(const IndexTable& t);

/// First pair (i,j) with t[i][j] != t[j][i].
std::optional<std::pair<int, int>> abelian_cex_serial(const IndexTable& t);
std::optional<std::pair<int, int>> abelian_cex_parallel(const IndexTable& t);

/// First (hi, y) with conj(h_members[hi], y) outside the member mask, where
/// conj(x, y) = t[t[inv[y]][x]][y]. hi runs over the subgroup's element order,
/// y over the parent's.
std::optional<std::pair<int, int>> normal_cex_serial(const IndexTable& t,
                                                     std::span<const std::int32_t> inv,
                                                     std::span<const std::int32_t> h_members,
                                                     const std::vector<bool>& in_h);
std::optional<std::pair<int, int>> normal_cex_parallel(const IndexTable& t,
                                                       std::span<const std::int32_t> inv,
                                                       std::span<const std::int32_t> h_members,
                                                       const std::vector<bool>& in_h);

std::optional<std::pair<int, int>> closure_cex(const IndexTable& t, Exec exec);
std::optional<std::array<int, 3>> assoc_cex(const IndexTable& t, Exec exec);
std::optional<int> inverses_cex(const IndexTable& t, Exec exec);
std::optional<std::pair<int, int>> abelian_cex(const IndexTable& t, Exec exec);
std::optional<std::pair<int, int>> normal_cex(const IndexTable& t,
                                              std::span<const std::int32_t> inv,
                                              std::span<const std::int32_t> h_members,
                                              const std::vector<bool>& in_h, Exec exec);

} // namespace scan
} // namespace cayley
