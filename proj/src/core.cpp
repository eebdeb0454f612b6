#include "chungfeller/core.hpp"

#include <algorithm>
#include <numeric>

namespace chungfeller {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyPath: return "EmptyPath";
    case ErrorCode::EmptyOrderViolation: return "EmptyOrderViolation";
    case ErrorCode::SumXViolation: return "SumXViolation";
    case ErrorCode::SumYViolation: return "SumYViolation";
    case ErrorCode::BoundYViolation: return "BoundYViolation";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RootOffsetOutOfRange: return "RootOffsetOutOfRange";
    case ErrorCode::PreconditionNPL: return "PreconditionNPL";
    case ErrorCode::PreconditionRML: return "PreconditionRML";
    case ErrorCode::PreconditionZeroTilde: return "PreconditionZeroTilde";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::InvalidStepSet: return "InvalidStepSet";
    case ErrorCode::NonDivisible: return "NonDivisible";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::int64_t checked_add(std::int64_t lhs, std::int64_t rhs) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(lhs, rhs, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in path coordinates");
  }
  return out;
}

// Returns m on success.
std::int64_t check_steps(const std::vector<Step>& steps) {
  if (steps.empty()) {
    throw Error(ErrorCode::EmptyPath, "path has no steps");
  }
  if (steps.size() < 2) {
    throw Error(ErrorCode::EmptyOrderViolation,
                "path needs at least two steps (n >= 1)");
  }
  const auto n = static_cast<std::int64_t>(steps.size()) - 1;
  std::int64_t sum_x = 0;
  std::int64_t sum_y = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Step& s = steps[k];
    if (s.x < 1) {
      throw Error(ErrorCode::SumXViolation,
                  "step " + std::to_string(k + 1) + " has x < 1");
    }
    if (s.y > 1 || s.y < 1 - n) {
      throw Error(ErrorCode::BoundYViolation,
                  "step " + std::to_string(k + 1) + " has y outside [" +
                      std::to_string(1 - n) + ", 1]");
    }
    sum_x = checked_add(sum_x, s.x);
    sum_y = checked_add(sum_y, s.y);
  }
  if (sum_y != 1) {
    throw Error(ErrorCode::SumYViolation,
                "sum of y is " + std::to_string(sum_y) + ", expected 1");
  }
  // x_i <= m-1 follows from x_i >= 1, n >= 1 and the sum.
  return sum_x;
}

// Height prefix sums a_1..a_{n+1}; index k holds a_{k+1}.
std::vector<std::int64_t> heights(const LatticePath& path) {
  std::vector<std::int64_t> a(path.steps().size());
  std::int64_t acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    acc += path.steps()[k].y;
    a[k] = acc;
  }
  return a;
}

}  // namespace

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  m_ = check_steps(steps_);
}

const Step& LatticePath::step(int i) const {
  if (i < 1 || i > order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "step index " + std::to_string(i) + " outside [1, " +
                    std::to_string(order()) + "]");
  }
  return steps_[static_cast<std::size_t>(i - 1)];
}

LatticePath make_trusted_path(std::vector<Step> steps, std::int64_t m) {
  return LatticePath(LatticePath::Trusted{}, std::move(steps), m);
}

LatticePath validate(std::span<const std::pair<std::int64_t, std::int64_t>> steps) {
  std::vector<Step> out;
  out.reserve(steps.size());
  for (const auto& [x, y] : steps) out.push_back({x, y});
  return LatticePath(std::move(out));
}

LatticePath validate(std::vector<Step> steps) { return LatticePath(std::move(steps)); }

std::vector<PathPoint> prefix_points(const LatticePath& path) {
  std::vector<PathPoint> points;
  points.reserve(path.steps().size() + 1);
  PathPoint p{0, 0};
  points.push_back(p);
  for (const Step& s : path.steps()) {
    p.b += s.x;
    p.a += s.y;
    points.push_back(p);
  }
  return points;
}

std::vector<int> non_positive_set(const LatticePath& path) {
  std::vector<int> out;
  const auto a = heights(path);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] <= 0) out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

std::int64_t npl(const LatticePath& path) {
  std::int64_t height = 0;
  std::int64_t length = 0;
  for (const Step& s : path.steps()) {
    height += s.y;
    if (height <= 0) length += s.x;
  }
  return length;
}

PathPoint rightmost_minimum(const LatticePath& path) {
  PathPoint best{0, 0};
  PathPoint p{0, 0};
  for (const Step& s : path.steps()) {
    p.b += s.x;
    p.a += s.y;
    if (p.a <= best.a) best = p;
  }
  return best;
}

std::int64_t rml(const LatticePath& path) { return rightmost_minimum(path).b; }

Permutation path_order(const LatticePath& path) {
  const auto a = heights(path);
  Permutation order(a.size());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&a](int i, int j) {
    const auto ai = a[static_cast<std::size_t>(i - 1)];
    const auto aj = a[static_cast<std::size_t>(j - 1)];
    return ai < aj || (ai == aj && i > j);
  });
  return order;
}

Permutation sigma(const LatticePath& path) {
  const int top = path.order();
  const int first = path_order(path).front();
  Permutation out;
  out.reserve(static_cast<std::size_t>(top));
  for (int v = first; v >= 1; --v) out.push_back(v);
  for (int v = top; v > first; --v) out.push_back(v);
  return out;
}

LatticePath cyclic_permutation(const LatticePath& path, int i) {
  if (i < 1 || i > path.order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "rotation index " + std::to_string(i) + " outside [1, " +
                    std::to_string(path.order()) + "]");
  }
  std::vector<Step> steps(path.steps().begin(), path.steps().end());
  std::rotate(steps.begin(), steps.begin() + i, steps.end());
  return make_trusted_path(std::move(steps), path.m());
}

Permutation inverse(const Permutation& perm) {
  Permutation inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    inv[static_cast<std::size_t>(perm[k] - 1)] = static_cast<int>(k) + 1;
  }
  return inv;
}

}  // namespace chungfeller
