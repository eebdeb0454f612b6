#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chungfeller/core.hpp"
#include "chungfeller/pointed.hpp"

namespace chungfeller {

using BigInt = boost::multiprecision::cpp_int;

/// Largest stream the engine agrees to produce unless told otherwise.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

enum class Statistic { NPL, RML, PNPL, PRML };

std::optional<Statistic> parse_statistic(std::string_view name);
std::string_view to_string(Statistic stat) noexcept;
bool is_pointed(Statistic stat) noexcept;

enum class ClosedForm {
  NplZero,       // C(m-1, n) c_n
  NplZeroTilde,  // C(m-2, n-1) c_n
  PointedTotal,  // C(2n, n) C(m, n+1)
  PointedPerR,   // C(2n, n) C(m, n+1) / m
};

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt catalan(std::int64_t n);

/// Number of plain (n,m)-paths, C(2n,n) C(m-1,n).
BigInt path_count(int n, std::int64_t m);

BigInt count_closed_form(ClosedForm kind, int n, std::int64_t m);

/// Fixed-length integer sequences with entries in [lo, hi] and a fixed sum,
/// produced in lexicographic order.
class BoundedSequenceStream {
 public:
  BoundedSequenceStream(std::int64_t length, std::int64_t lo, std::int64_t hi, std::int64_t sum);

  /// Next sequence, or nullptr once exhausted. The pointer stays valid until
  /// the following call.
  const std::vector<std::int64_t>* next();

 private:
  bool feasible(std::int64_t slots, std::int64_t sum) const;
  void fill_smallest(std::size_t from, std::int64_t sum);

  std::int64_t lo_;
  std::int64_t hi_;
  std::int64_t sum_;
  std::vector<std::int64_t> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Sequences of `parts` positive integers summing to `total`;
/// C(total-1, parts-1) of them.
BoundedSequenceStream compositions(std::int64_t total, std::int64_t parts);

/// Length n+1 sequences over [1-n, 1] summing to 1; C(2n, n) of them.
BoundedSequenceStream y_sequences(int n);

/// Every (n,m)-lattice path once: compositions outer, y-sequences inner.
class PathStream {
 public:
  PathStream(int n, std::int64_t m, std::uint64_t cap = kDefaultEnumerationCap);

  std::optional<LatticePath> next();

 private:
  int n_;
  std::int64_t m_;
  BoundedSequenceStream xs_;
  BoundedSequenceStream ys_;
  const std::vector<std::int64_t>* x_ = nullptr;
};

PathStream enumerate_paths(int n, std::int64_t m, std::uint64_t cap = kDefaultEnumerationCap);

/// Every pointed (n,m)-lattice path once; paths in PathStream order, then
/// ascending root offset.
class PointedStream {
 public:
  PointedStream(int n, std::int64_t m, std::uint64_t cap = kDefaultEnumerationCap);

  std::optional<PointedLatticePath> next();

 private:
  PathStream paths_;
  std::optional<LatticePath> current_;
  std::int64_t offset_ = 0;
};

PointedStream enumerate_pointed(int n, std::int64_t m,
                                std::uint64_t cap = kDefaultEnumerationCap);

/// A finite set of admissible steps. The grammar form is
/// {(1,1)} + {(2i-1,-1) : i in down} + {(2i,0) : i in flat}; an explicit list
/// of steps with x >= 1 and y <= 1 is also accepted.
class StepSet {
 public:
  static StepSet from_lengths(const std::set<std::int64_t>& down,
                              const std::set<std::int64_t>& flat);
  static StepSet from_steps(std::vector<Step> steps);
  /// "dyck", "schroeder" or "motzkin".
  static std::optional<StepSet> preset(std::string_view name);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  bool contains(const Step& s) const;
  bool admits(const LatticePath& path) const;

 private:
  explicit StepSet(std::vector<Step> steps);

  std::vector<Step> steps_;
};

/// Paths with `order` steps and length `length` using only steps of `set`,
/// lexicographic by step sequence. Bounded depth-first search; a branch is
/// cut as soon as the remaining steps cannot reach (length, 1).
class StepSetPathStream {
 public:
  StepSetPathStream(StepSet set, int order, std::int64_t length,
                    std::uint64_t cap = kDefaultEnumerationCap);

  std::optional<LatticePath> next();

 private:
  bool reachable(std::int64_t x, std::int64_t y, std::int64_t remaining) const;

  std::vector<Step> steps_;
  int order_;
  std::int64_t length_;
  std::uint64_t cap_;
  std::uint64_t emitted_ = 0;
  std::int64_t min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
  std::vector<std::size_t> choice_;
  std::vector<std::int64_t> prefix_x_;
  std::vector<std::int64_t> prefix_y_;
  int depth_ = 0;
  bool started_ = false;
  bool done_ = false;
};

StepSetPathStream enumerate_step_set_paths(const StepSet& set, int order, std::int64_t length,
                                           std::uint64_t cap = kDefaultEnumerationCap);

/// Exact histogram of a statistic. Every value in [0, m-1] has an entry.
struct Distribution {
  std::map<std::int64_t, BigInt> counts;
  BigInt total = 0;

  void add(std::int64_t value, const BigInt& count = 1);
  /// True iff every entry has the same count.
  bool is_flat() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// Histogram over all plain paths (NPL, RML) or all pointed paths (PNPL, PRML).
Distribution histogram(int n, std::int64_t m, Statistic stat,
                       std::uint64_t cap = kDefaultEnumerationCap);

/// Same, restricted to paths whose steps all lie in `set`.
Distribution histogram(const StepSet& set, int n, std::int64_t m, Statistic stat,
                       std::uint64_t cap = kDefaultEnumerationCap);

/// Draws pointed paths with a prescribed statistic value, uniformly.
///
/// A uniform path P is drawn by pairing a uniform composition of m with a
/// uniform y-sequence; the answer is the member of P's cyclic class carrying
/// the target value, located with theta (NPL/PNPL) or gamma (RML/PRML).
/// Every rotation class holds exactly n+1 distinct paths and exactly one
/// pointed member per value, so the result is uniform over all pointed paths
/// with that value.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  LatticePath draw_path(int n, std::int64_t m);
  PointedLatticePath draw(int n, std::int64_t m, Statistic stat, std::int64_t target);

 private:
  std::mt19937_64 rng_;
};

PointedLatticePath uniform_sample(int n, std::int64_t m, Statistic stat, std::int64_t target,
                                  std::uint64_t seed);

}  // namespace chungfeller
