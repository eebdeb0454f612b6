#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chungfeller {

/// Failure categories raised by every module of the library.
enum class ErrorCode {
  EmptyPath,
  EmptyOrderViolation,
  SumXViolation,
  SumYViolation,
  BoundYViolation,
  Overflow,
  IndexOutOfRange,
  RootOffsetOutOfRange,
  PreconditionNPL,
  PreconditionRML,
  PreconditionZeroTilde,
  InvalidRange,
  InvalidStepSet,
  NonDivisible,
  CapExceeded,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One vector of a path: horizontal advance x and height change y.
struct Step {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Step&, const Step&) = default;
};

/// A lattice point (b, a): b is the horizontal coordinate, a the height.
struct PathPoint {
  std::int64_t b = 0;
  std::int64_t a = 0;

  friend auto operator<=>(const PathPoint&, const PathPoint&) = default;
};

/// A permutation of [n+1], stored with 1-based values.
using Permutation = std::vector<int>;

/// An (n,m)-lattice path: n+1 steps with every x >= 1, sum of x equal to m,
/// every y in [1-n, 1] and sum of y equal to 1. Only constructible through
/// validation, so every instance satisfies these constraints.
class LatticePath {
 public:
  /// Validates and wraps `steps`. Throws Error on any violated constraint.
  explicit LatticePath(std::vector<Step> steps);

  /// Number of steps, n+1.
  int order() const noexcept { return static_cast<int>(steps_.size()); }
  int n() const noexcept { return order() - 1; }
  std::int64_t m() const noexcept { return m_; }

  std::span<const Step> steps() const noexcept { return steps_; }

  /// 1-based step access.
  const Step& step(int i) const;
  const Step& last() const noexcept { return steps_.back(); }

  friend bool operator==(const LatticePath& lhs, const LatticePath& rhs) {
    return lhs.steps_ == rhs.steps_;
  }
  friend auto operator<=>(const LatticePath& lhs, const LatticePath& rhs) {
    return lhs.steps_ <=> rhs.steps_;
  }

 private:
  struct Trusted {};
  LatticePath(Trusted, std::vector<Step> steps, std::int64_t m)
      : steps_(std::move(steps)), m_(m) {}

  friend LatticePath make_trusted_path(std::vector<Step> steps, std::int64_t m);

  std::vector<Step> steps_;
  std::int64_t m_ = 0;
};

/// Builds a path from steps already known to satisfy every constraint with
/// total length m. Used by generators and maps that preserve validity.
LatticePath make_trusted_path(std::vector<Step> steps, std::int64_t m);

/// Validates a raw step sequence, inferring n and m.
LatticePath validate(std::span<const std::pair<std::int64_t, std::int64_t>> steps);
LatticePath validate(std::vector<Step> steps);

/// Points (b_0,a_0)=(0,0) through (b_{n+1},a_{n+1})=(m,1).
std::vector<PathPoint> prefix_points(const LatticePath& path);

/// Indices i (1-based, ascending) whose height prefix sum is <= 0.
std::vector<int> non_positive_set(const LatticePath& path);

/// Non-positive length: total x over the non-positive set.
std::int64_t npl(const LatticePath& path);

/// Lowest point of the path, origin included; ties go to the largest index.
PathPoint rightmost_minimum(const LatticePath& path);

/// Rightmost minimum length: the b-coordinate of rightmost_minimum.
std::int64_t rml(const LatticePath& path);

/// [n+1] sorted by ascending height prefix sum, equal heights by descending
/// index.
Permutation path_order(const LatticePath& path);

/// (i, i-1, ..., 1, n+1, n, ..., i+1) with i = path_order(path)[0].
Permutation sigma(const LatticePath& path);

/// Rotation starting after step i: steps i+1..n+1 followed by 1..i.
LatticePath cyclic_permutation(const LatticePath& path, int i);

/// Inverse of a 1-based permutation: result[v-1] is the position of v.
Permutation inverse(const Permutation& perm);

}  // namespace chungfeller
