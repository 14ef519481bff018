#include "cayley/scan.hpp"

#include <atomic>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cayley::scan {

namespace {

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

void atomic_min(std::atomic<std::int64_t>& best, std::int64_t value) {
  std::int64_t cur = best.load(std::memory_order_relaxed);
  while (value < cur && !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

} // namespace

ElemIndexMap element_index_map(std::span<const Elem> elements) {
  ElemIndexMap map;
  map.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    map.emplace(elements[i], static_cast<std::int32_t>(i)); // keeps first occurrence
  return map;
}

bool pick_parallel(Exec exec, std::int64_t work) {
#ifdef _OPENMP
  switch (exec) {
  case Exec::Serial:
    return false;
  case Exec::Parallel:
    return true;
  case Exec::Auto:
    return work >= (std::int64_t{1} << 22);
  }
  return false;
#else
  (void)exec;
  (void)work;
  return false;
#endif
}

IndexTable index_table(const RawTable& t, const ElemIndexMap& map, Exec exec) {
  const int n = t.order();
  IndexTable out;
  out.n = n;
  out.idx.resize(static_cast<std::size_t>(n) * n);
  const bool par = pick_parallel(exec, static_cast<std::int64_t>(n) * n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#else
  (void)par;
#endif
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto it = map.find(t.entry(i, j));
      out.idx[static_cast<std::size_t>(i) * n + j] = it == map.end() ? -1 : it->second;
    }
  }
  return out;
}

std::optional<std::pair<int, int>> closure_cex_serial(const IndexTable& t) {
  const int n = t.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.at(i, j) < 0)
        return std::pair{i, j};
  return std::nullopt;
}

std::optional<std::pair<int, int>> closure_cex_parallel(const IndexTable& t) {
  const int n = t.n;
  std::atomic<std::int64_t> best(kNone);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    const std::int64_t base = static_cast<std::int64_t>(i) * n;
    if (base >= best.load(std::memory_order_relaxed))
      continue;
    for (int j = 0; j < n; ++j) {
      if (t.at(i, j) < 0) {
        atomic_min(best, base + j);
        break;
      }
    }
  }
  const std::int64_t pos = best.load();
  if (pos == kNone)
    return std::nullopt;
  return std::pair{static_cast<int>(pos / n), static_cast<int>(pos % n)};
}

std::optional<std::array<int, 3>> assoc_cex_serial(const IndexTable& t) {
  const int n = t.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::int32_t ij = t.at(i, j);
      for (int k = 0; k < n; ++k)
        if (t.at(i, t.at(j, k)) != t.at(ij, k))
          return std::array{i, j, k};
    }
  return std::nullopt;
}

std::optional<std::array<int, 3>> assoc_cex_parallel(const IndexTable& t) {
  const int n = t.n;
  const std::int64_t nn = static_cast<std::int64_t>(n) * n;
  std::atomic<std::int64_t> best(kNone);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    const std::int64_t base = i * nn;
    if (base >= best.load(std::memory_order_relaxed))
      continue;
    for (int j = 0; j < n; ++j) {
      const std::int32_t ij = t.at(i, j);
      for (int k = 0; k < n; ++k) {
        if (t.at(i, t.at(j, k)) != t.at(ij, k)) {
          atomic_min(best, base + static_cast<std::int64_t>(j) * n + k);
          goto next_row;
        }
      }
    }
  next_row:;
  }
  const std::int64_t pos = best.load();
  if (pos == kNone)
    return std::nullopt;
  return std::array{static_cast<int>(pos / nn), static_cast<int>((pos / n) % n),
                    static_cast<int>(pos % n)};
}

std::optional<int> inverses_cex_serial(const IndexTable& t) {
  const int n = t.n;
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n; ++y)
      if (t.at(y, x) == 0) {
        found = true;
        break;
      }
    if (!found)
      return x;
  }
  return std::nullopt;
}

std::optional<int> inverses_cex_parallel(const IndexTable& t) {
  const int n = t.n;
  std::atomic<std::int64_t> best(kNone);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int x = 0; x < n; ++x) {
    if (x >= best.load(std::memory_order_relaxed))
      continue;
    bool found = false;
    for (int y = 0; y < n; ++y)
      if (t.at(y, x) == 0) {
        found = true;
        break;
      }
    if (!found)
      atomic_min(best, x);
  }
  const std::int64_t pos = best.load();
  if (pos == kNone)
    return std::nullopt;
  return static_cast<int>(pos);
}

std::optional<std::pair<int, int>> abelian_cex_serial(const IndexTable& t) {
  const int n = t.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.at(i, j) != t.at(j, i))
        return std::pair{i, j};
  return std::nullopt;
}

std::optional<std::pair<int, int>> abelian_cex_parallel(const IndexTable& t) {
  const int n = t.n;
  std::atomic<std::int64_t> best(kNone);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    const std::int64_t base = static_cast<std::int64_t>(i) * n;
    if (base >= best.load(std::memory_order_relaxed))
      continue;
    for (int j = 0; j < n; ++j) {
      if (t.at(i, j) != t.at(j, i)) {
        atomic_min(best, base + j);
        break;
      }
    }
  }
  const std::int64_t pos = best.load();
  if (pos == kNone)
    return std::nullopt;
  return std::pair{static_cast<int>(pos / n), static_cast<int>(pos % n)};
}

namespace {

inline bool normal_row_cex(const IndexTable& t, std::span<const std::int32_t> inv,
                           std::int32_t x, const std::vector<bool>& in_h, int& y_out) {
  const int n = t.n;
  for (int y = 0; y < n; ++y) {
    const std::int32_t c = t.at(t.at(inv[y], x), y);
    if (!in_h[c]) {
      y_out = y;
      return true;
    }
  }
  return false;
}

} // namespace

std::optional<std::pair<int, int>> normal_cex_serial(const IndexTable& t,
                                                     std::span<const std::int32_t> inv,
                                                     std::span<const std::int32_t> h_members,
                                                     const std::vector<bool>& in_h) {
  for (std::size_t hi = 0; hi < h_members.size(); ++hi) {
    int y = 0;
    if (normal_row_cex(t, inv, h_members[hi], in_h, y))
      return std::pair{static_cast<int>(hi), y};
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> normal_cex_parallel(const IndexTable& t,
                                                       std::span<const std::int32_t> inv,
                                                       std::span<const std::int32_t> h_members,
                                                       const std::vector<bool>& in_h) {
  const int n = t.n;
  const int m = static_cast<int>(h_members.size());
  std::atomic<std::int64_t> best(kNone);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int hi = 0; hi < m; ++hi) {
    const std::int64_t base = static_cast<std::int64_t>(hi) * n;
    if (base >= best.load(std::memory_order_relaxed))
      continue;
    int y = 0;
    if (normal_row_cex(t, inv, h_members[hi], in_h, y))
      atomic_min(best, base + y);
  }
  const std::int64_t pos = best.load();
  if (pos == kNone)
    return std::nullopt;
  return std::pair{static_cast<int>(pos / n), static_cast<int>(pos % n)};
}

std::optional<std::pair<int, int>> closure_cex(const IndexTable& t, Exec exec) {
  const std::int64_t work = static_cast<std::int64_t>(t.n) * t.n;
  return pick_parallel(exec, work) ? closure_cex_parallel(t) : closure_cex_serial(t);
}

std::optional<std::array<int, 3>> assoc_cex(const IndexTable& t, Exec exec) {
  const std::int64_t work = static_cast<std::int64_t>(t.n) * t.n * t.n;
  return pick_parallel(exec, work) ? assoc_cex_parallel(t) : assoc_cex_serial(t);
}

std::optional<int> inverses_cex(const IndexTable& t, Exec exec) {
  const std::int64_t work = static_cast<std::int64_t>(t.n) * t.n;
  return pick_parallel(exec, work) ? inverses_cex_parallel(t) : inverses_cex_serial(t);
}

std::optional<std::pair<int, int>> abelian_cex(const IndexTable& t, Exec exec) {
  const std::int64_t work = static_cast<std::int64_t>(t.n) * t.n;
  return pick_parallel(exec, work) ? abelian_cex_parallel(t) : abelian_cex_serial(t);
}

std::optional<std::pair<int, int>> normal_cex(const IndexTable& t,
                                              std::span<const std::int32_t> inv,
                                              std::span<const std::int32_t> h_members,
                                              const std::vector<bool>& in_h, Exec exec) {
  const std::int64_t work = static_cast<std::int64_t>(h_members.size()) * t.n;
  return pick_parallel(exec, work) ? normal_cex_parallel(t, inv, h_members, in_h)
                                   : normal_cex_serial(t, inv, h_members, in_h);
}

} // namespace cayley::scan
