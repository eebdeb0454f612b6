#pragma once

// Brute-force reference computations for the tests. Everything here works on
// raw step vectors and plain 64-bit arithmetic so it shares no code path with
// the library.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using RawStep = std::pair<std::int64_t, std::int64_t>;
using RawPath = std::vector<RawStep>;

/// Every (n,m)-path, found by trying all x in [1, m-n] and y in [1-n, 1] for
/// every step and keeping the sequences with the right sums.
inline std::vector<RawPath> all_paths(int n, std::int64_t m) {
  const int len = n + 1;
  const std::int64_t y_lo = 1 - n;
  std::vector<RawPath> out;
  RawPath cur(static_cast<std::size_t>(len), {1, y_lo});
  for (;;) {
    std::int64_t sx = 0;
    std::int64_t sy = 0;
    for (const auto& [x, y] : cur) {
      sx += x;
      sy += y;
    }
    if (sx == m && sy == 1) out.push_back(cur);
    int k = len - 1;
    for (; k >= 0; --k) {
      auto& [x, y] = cur[static_cast<std::size_t>(k)];
      if (y < 1) {
        ++y;
        break;
      }
      y = y_lo;
      if (x < m - n) {
        ++x;
        break;
      }
      x = 1;
    }
    if (k < 0) break;
  }
  return out;
}

inline std::int64_t npl(const RawPath& p) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::int64_t height = 0;
    for (std::size_t j = 0; j <= i; ++j) height += p[j].second;
    if (height <= 0) total += p[i].first;
  }
  return total;
}

inline std::int64_t rml(const RawPath& p) {
  // Scan every point; keep the lowest, later points winning ties.
  std::int64_t best_a = 0;
  std::int64_t best_b = 0;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    std::int64_t a = 0;
    std::int64_t b = 0;
    for (std::size_t j = 0; j < i; ++j) {
      b += p[j].first;
      a += p[j].second;
    }
    if (a < best_a || a == best_a) {
      best_a = a;
      best_b = b;
    }
  }
  return best_b;
}

/// Rotation starting after step i (1-based).
inline RawPath rotate(const RawPath& p, std::size_t i) {
  RawPath out;
  for (std::size_t k = 0; k < p.size(); ++k) out.push_back(p[(i + k) % p.size()]);
  return out;
}

/// Pascal's triangle.
inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> row(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    row[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) {
      row[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
  }
  return row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// Catalan numbers by the convolution recurrence.
inline std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < k; ++i) {
      c[static_cast<std::size_t>(k)] +=
          c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
    }
  }
  return c[static_cast<std::size_t>(n)];
}

}  // namespace oracle
