#pragma once

#include <cstdint>
#include <vector>

#include "chungfeller/core.hpp"

namespace chungfeller {

/// A path with a root (m - j, 0) inside the span of its last step,
/// 0 <= j <= x_{n+1} - 1.
class PointedLatticePath {
 public:
  PointedLatticePath(LatticePath path, std::int64_t root_offset);

  const LatticePath& path() const noexcept { return path_; }
  std::int64_t root_offset() const noexcept { return root_offset_; }
  PathPoint root() const noexcept { return {path_.m() - root_offset_, 0}; }

  friend bool operator==(const PointedLatticePath&, const PointedLatticePath&) = default;
  friend auto operator<=>(const PointedLatticePath& lhs, const PointedLatticePath& rhs) {
    if (auto c = lhs.path_ <=> rhs.path_; c != 0) return c;
    return lhs.root_offset_ <=> rhs.root_offset_;
  }

 private:
  LatticePath path_;
  std::int64_t root_offset_;
};

/// The pointed path [P_i; j] together with its (i, j) label relative to P.
struct ClassMember {
  int rotation = 0;
  std::int64_t offset = 0;
  PointedLatticePath realized;
};

/// Result of locating a pointed path in the enumeration of its class.
struct ClassIndex {
  LatticePath base;
  std::int64_t r = 0;
};

std::int64_t pnpl(const PointedLatticePath& q);
std::int64_t prml(const PointedLatticePath& q);

/// All m members [P_i; j], i in [n+1], 0 <= j <= x_i - 1, ordered by (i, j).
std::vector<ClassMember> pointed_class(const LatticePath& path);

/// The class ordered by path_order on i, then by j. Element r-1 is Theta(r).
std::vector<ClassMember> theta_sequence(const LatticePath& path);

/// The class ordered by position of i in sigma, then by j. Element r-1 is
/// Gamma(r).
std::vector<ClassMember> gamma_sequence(const LatticePath& path);

/// r-th member (1-based) under the path-order enumeration; pnpl is r-1.
PointedLatticePath theta(const LatticePath& path, std::int64_t r);

/// r-th member (1-based) under the sigma enumeration; prml is r-1.
PointedLatticePath gamma(const LatticePath& path, std::int64_t r);

/// Lexicographically smallest rotation of q's path. Shared by every member of
/// one equivalence class.
LatticePath canonical_base(const PointedLatticePath& q);

/// Canonical base plus the r with theta(base, r) == q.
ClassIndex theta_index(const PointedLatticePath& q);

/// Canonical base plus the r with gamma(base, r) == q.
ClassIndex gamma_index(const PointedLatticePath& q);

/// Every pointed path whose underlying path is a rotation of q's, sorted.
std::vector<PointedLatticePath> equivalence_class(const PointedLatticePath& q);

}  // namespace chungfeller
