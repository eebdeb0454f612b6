#include "chungfeller/enumeration.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <numeric>
#include <string>

namespace chungfeller {

namespace {

void require_order(int n, std::int64_t m) {
  if (n < 1 || m < static_cast<std::int64_t>(n) + 1) {
    throw Error(ErrorCode::InvalidRange, "need n >= 1 and m >= n+1, got n=" +
                                             std::to_string(n) + ", m=" + std::to_string(m));
  }
}

void require_within_cap(const BigInt& count, std::uint64_t cap, const char* what) {
  if (count > cap) {
    throw Error(ErrorCode::CapExceeded, std::string(what) + " has " + count.str() +
                                            " items, above the cap of " + std::to_string(cap));
  }
}

BigInt pointed_total(int n, std::int64_t m) {
  return binomial(2 * static_cast<std::int64_t>(n), n) * binomial(m, n + 1);
}

Distribution empty_distribution(std::int64_t m) {
  Distribution d;
  for (std::int64_t r = 0; r < m; ++r) d.counts[r] = 0;
  return d;
}

std::int64_t evaluate(Statistic stat, const LatticePath& path, std::int64_t offset) {
  switch (stat) {
    case Statistic::NPL:
    case Statistic::PNPL: return npl(path) + offset;
    case Statistic::RML:
    case Statistic::PRML: return rml(path) + offset;
  }
  return 0;
}

// Adds path, or all its pointed versions, to the histogram.
void tally(Distribution& d, Statistic stat, const LatticePath& path) {
  if (!is_pointed(stat)) {
    d.add(evaluate(stat, path, 0));
    return;
  }
  for (std::int64_t j = 0; j < path.last().x; ++j) d.add(evaluate(stat, path, j));
}

}  // namespace

std::optional<Statistic> parse_statistic(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, Statistic>, 8> names{{
      {"npl", Statistic::NPL},
      {"rml", Statistic::RML},
      {"pnpl", Statistic::PNPL},
      {"prml", Statistic::PRML},
      {"NPL", Statistic::NPL},
      {"RML", Statistic::RML},
      {"PNPL", Statistic::PNPL},
      {"PRML", Statistic::PRML},
  }};
  for (const auto& [key, stat] : names) {
    if (key == name) return stat;
  }
  return std::nullopt;
}

std::string_view to_string(Statistic stat) noexcept {
  switch (stat) {
    case Statistic::NPL: return "NPL";
    case Statistic::RML: return "RML";
    case Statistic::PNPL: return "PNPL";
    case Statistic::PRML: return "PRML";
  }
  return "unknown";
}

bool is_pointed(Statistic stat) noexcept {
  return stat == Statistic::PNPL || stat == Statistic::PRML;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt catalan(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidRange, "catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

BigInt path_count(int n, std::int64_t m) {
  require_order(n, m);
  return binomial(2 * static_cast<std::int64_t>(n), n) * binomial(m - 1, n);
}

BigInt count_closed_form(ClosedForm kind, int n, std::int64_t m) {
  require_order(n, m);
  switch (kind) {
    case ClosedForm::NplZero: return binomial(m - 1, n) * catalan(n);
    case ClosedForm::NplZeroTilde: return binomial(m - 2, n - 1) * catalan(n);
    case ClosedForm::PointedTotal: return pointed_total(n, m);
    case ClosedForm::PointedPerR: {
      const BigInt total = pointed_total(n, m);
      if (total % m != 0) {
        throw Error(ErrorCode::NonDivisible,
                    "pointed total " + total.str() + " not divisible by m=" + std::to_string(m));
      }
      return total / m;
    }
  }
  throw Error(ErrorCode::InvalidRange, "unknown closed form");
}

// ---------------------------------------------------------------------------

BoundedSequenceStream::BoundedSequenceStream(std::int64_t length, std::int64_t lo,
                                             std::int64_t hi, std::int64_t sum)
    : lo_(lo), hi_(hi), sum_(sum) {
  if (length < 1 || lo > hi) {
    throw Error(ErrorCode::InvalidRange, "bounded sequence needs length >= 1 and lo <= hi");
  }
  current_.resize(static_cast<std::size_t>(length));
}

bool BoundedSequenceStream::feasible(std::int64_t slots, std::int64_t sum) const {
  return slots * lo_ <= sum && sum <= slots * hi_;
}

void BoundedSequenceStream::fill_smallest(std::size_t from, std::int64_t sum) {
  const auto len = current_.size();
  for (std::size_t q = from; q < len; ++q) {
    const auto after = static_cast<std::int64_t>(len - q - 1);
    const std::int64_t v = std::max(lo_, sum - after * hi_);
    current_[q] = v;
    sum -= v;
  }
}

const std::vector<std::int64_t>* BoundedSequenceStream::next() {
  if (done_) return nullptr;
  const auto len = static_cast<std::int64_t>(current_.size());
  if (!started_) {
    started_ = true;
    if (!feasible(len, sum_)) {
      done_ = true;
      return nullptr;
    }
    fill_smallest(0, sum_);
    return &current_;
  }
  // Bump the rightmost position that still leaves a completable suffix.
  std::int64_t suffix = current_.back();
  for (std::int64_t p = len - 2; p >= 0; --p) {
    const auto idx = static_cast<std::size_t>(p);
    suffix += current_[idx];
    const std::int64_t before = sum_ - suffix;
    const std::int64_t bumped = current_[idx] + 1;
    if (bumped <= hi_ && feasible(len - p - 1, sum_ - before - bumped)) {
      current_[idx] = bumped;
      fill_smallest(idx + 1, sum_ - before - bumped);
      return &current_;
    }
  }
  done_ = true;
  return nullptr;
}

BoundedSequenceStream compositions(std::int64_t total, std::int64_t parts) {
  if (parts < 1 || total < parts) {
    throw Error(ErrorCode::InvalidRange, "compositions need parts >= 1 and total >= parts");
  }
  return BoundedSequenceStream(parts, 1, total, total);
}

BoundedSequenceStream y_sequences(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidRange, "y-sequences need n >= 1");
  return BoundedSequenceStream(n + 1, 1 - n, 1, 1);
}

// ---------------------------------------------------------------------------

PathStream::PathStream(int n, std::int64_t m, std::uint64_t cap)
    : n_(n), m_(m), xs_(compositions(m, n + 1)), ys_(y_sequences(n)) {
  require_order(n, m);
  require_within_cap(path_count(n, m), cap, "path enumeration");
  x_ = xs_.next();
}

std::optional<LatticePath> PathStream::next() {
  if (x_ == nullptr) return std::nullopt;
  const std::vector<std::int64_t>* y = ys_.next();
  if (y == nullptr) {
    x_ = xs_.next();
    if (x_ == nullptr) return std::nullopt;
    ys_ = y_sequences(n_);
    y = ys_.next();
  }
  std::vector<Step> steps(x_->size());
  for (std::size_t k = 0; k < steps.size(); ++k) steps[k] = {(*x_)[k], (*y)[k]};
  return make_trusted_path(std::move(steps), m_);
}

PathStream enumerate_paths(int n, std::int64_t m, std::uint64_t cap) {
  return PathStream(n, m, cap);
}

PointedStream::PointedStream(int n, std::int64_t m, std::uint64_t cap) : paths_(n, m, cap) {
  require_within_cap(pointed_total(n, m), cap, "pointed enumeration");
}

std::optional<PointedLatticePath> PointedStream::next() {
  if (!current_ || offset_ >= current_->last().x) {
    current_ = paths_.next();
    offset_ = 0;
    if (!current_) return std::nullopt;
  }
  return PointedLatticePath(*current_, offset_++);
}

PointedStream enumerate_pointed(int n, std::int64_t m, std::uint64_t cap) {
  return PointedStream(n, m, cap);
}

// ---------------------------------------------------------------------------

StepSet::StepSet(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw Error(ErrorCode::InvalidStepSet, "step set is empty");
  for (const Step& s : steps_) {
    if (s.x < 1 || s.y > 1) {
      throw Error(ErrorCode::InvalidStepSet, "step (" + std::to_string(s.x) + "," +
                                                 std::to_string(s.y) +
                                                 ") needs x >= 1 and y <= 1");
    }
  }
  std::sort(steps_.begin(), steps_.end());
  steps_.erase(std::unique(steps_.begin(), steps_.end()), steps_.end());
}

StepSet StepSet::from_lengths(const std::set<std::int64_t>& down,
                              const std::set<std::int64_t>& flat) {
  std::vector<Step> steps{{1, 1}};
  for (const auto i : down) {
    if (i < 1) throw Error(ErrorCode::InvalidStepSet, "down lengths must be positive");
    steps.push_back({2 * i - 1, -1});
  }
  for (const auto i : flat) {
    if (i < 1) throw Error(ErrorCode::InvalidStepSet, "flat lengths must be positive");
    steps.push_back({2 * i, 0});
  }
  return StepSet(std::move(steps));
}

StepSet StepSet::from_steps(std::vector<Step> steps) { return StepSet(std::move(steps)); }

std::optional<StepSet> StepSet::preset(std::string_view name) {
  if (name == "dyck") return from_lengths({1}, {});
  if (name == "schroeder") return from_lengths({1}, {1});
  if (name == "motzkin") return from_steps({{1, 1}, {1, -1}, {1, 0}});
  return std::nullopt;
}

bool StepSet::contains(const Step& s) const {
  return std::binary_search(steps_.begin(), steps_.end(), s);
}

bool StepSet::admits(const LatticePath& path) const {
  return std::all_of(path.steps().begin(), path.steps().end(),
                     [this](const Step& s) { return contains(s); });
}

StepSetPathStream::StepSetPathStream(StepSet set, int order, std::int64_t length,
                                     std::uint64_t cap)
    : steps_(set.steps()), order_(order), length_(length), cap_(cap) {
  require_order(order - 1, length);
  min_x_ = max_x_ = steps_.front().x;
  min_y_ = max_y_ = steps_.front().y;
  for (const Step& s : steps_) {
    min_x_ = std::min(min_x_, s.x);
    max_x_ = std::max(max_x_, s.x);
    min_y_ = std::min(min_y_, s.y);
    max_y_ = std::max(max_y_, s.y);
  }
  const auto depth = static_cast<std::size_t>(order);
  choice_.assign(depth, 0);
  prefix_x_.assign(depth + 1, 0);
  prefix_y_.assign(depth + 1, 0);
}

bool StepSetPathStream::reachable(std::int64_t x, std::int64_t y, std::int64_t remaining) const {
  return x + remaining * min_x_ <= length_ && length_ <= x + remaining * max_x_ &&
         y + remaining * min_y_ <= 1 && 1 <= y + remaining * max_y_;
}

std::optional<LatticePath> StepSetPathStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    depth_ = 0;
    choice_[0] = 0;
  } else {
    depth_ = order_ - 1;
    ++choice_[static_cast<std::size_t>(depth_)];
  }
  for (;;) {
    const auto d = static_cast<std::size_t>(depth_);
    if (choice_[d] == steps_.size()) {
      if (depth_ == 0) {
        done_ = true;
        return std::nullopt;
      }
      --depth_;
      ++choice_[d - 1];
      continue;
    }
    const Step& s = steps_[choice_[d]];
    const std::int64_t x = prefix_x_[d] + s.x;
    const std::int64_t y = prefix_y_[d] + s.y;
    const std::int64_t remaining = order_ - depth_ - 1;
    if (!reachable(x, y, remaining)) {
      ++choice_[d];
      continue;
    }
    prefix_x_[d + 1] = x;
    prefix_y_[d + 1] = y;
    if (remaining == 0) {
      if (++emitted_ > cap_) {
        throw Error(ErrorCode::CapExceeded,
                    "step-set enumeration exceeded the cap of " + std::to_string(cap_));
      }
      std::vector<Step> path(static_cast<std::size_t>(order_));
      for (std::size_t k = 0; k < path.size(); ++k) path[k] = steps_[choice_[k]];
      return LatticePath(std::move(path));
    }
    ++depth_;
    choice_[d + 1] = 0;
  }
}

StepSetPathStream enumerate_step_set_paths(const StepSet& set, int order, std::int64_t length,
                                           std::uint64_t cap) {
  return StepSetPathStream(set, order, length, cap);
}

// ---------------------------------------------------------------------------

void Distribution::add(std::int64_t value, const BigInt& count) {
  counts[value] += count;
  total += count;
}

bool Distribution::is_flat() const {
  if (counts.empty()) return true;
  const BigInt& first = counts.begin()->second;
  return std::all_of(counts.begin(), counts.end(),
                     [&first](const auto& entry) { return entry.second == first; });
}

Distribution histogram(int n, std::int64_t m, Statistic stat, std::uint64_t cap) {
  require_order(n, m);
  if (is_pointed(stat)) require_within_cap(pointed_total(n, m), cap, "pointed enumeration");
  Distribution d = empty_distribution(m);
  auto paths = enumerate_paths(n, m, cap);
  while (auto path = paths.next()) tally(d, stat, *path);
  return d;
}

Distribution histogram(const StepSet& set, int n, std::int64_t m, Statistic stat,
                       std::uint64_t cap) {
  Distribution d = empty_distribution(m);
  auto paths = enumerate_step_set_paths(set, n + 1, m, cap);
  while (auto path = paths.next()) tally(d, stat, *path);
  return d;
}

// ---------------------------------------------------------------------------

LatticePath Sampler::draw_path(int n, std::int64_t m) {
  require_order(n, m);
  const auto parts = static_cast<std::size_t>(n) + 1;

  // Composition of m: n distinct cut points in [1, m-1].
  std::vector<std::int64_t> pool(static_cast<std::size_t>(m - 1));
  std::iota(pool.begin(), pool.end(), std::int64_t{1});
  std::vector<std::int64_t> cuts;
  cuts.reserve(parts);
  std::sample(pool.begin(), pool.end(), std::back_inserter(cuts), n, rng_);
  cuts.push_back(m);

  // y_i = 1 - z_i where z is a weak composition of n into n+1 parts, drawn
  // as n bar positions among 2n slots.
  std::vector<int> slots(2 * static_cast<std::size_t>(n));
  std::iota(slots.begin(), slots.end(), 0);
  std::vector<int> bars;
  bars.reserve(static_cast<std::size_t>(n));
  std::sample(slots.begin(), slots.end(), std::back_inserter(bars), n, rng_);

  std::vector<Step> steps(parts);
  std::int64_t prev_cut = 0;
  int prev_bar = -1;
  for (std::size_t k = 0; k < parts; ++k) {
    const int bar = k < bars.size() ? bars[k] : 2 * n;
    const std::int64_t stars = bar - prev_bar - 1;
    steps[k] = {cuts[k] - prev_cut, 1 - stars};
    prev_cut = cuts[k];
    prev_bar = bar;
  }
  return make_trusted_path(std::move(steps), m);
}

PointedLatticePath Sampler::draw(int n, std::int64_t m, Statistic stat, std::int64_t target) {
  require_order(n, m);
  if (target < 0 || target > m - 1) {
    throw Error(ErrorCode::InvalidRange, "target value " + std::to_string(target) +
                                             " outside [0, " + std::to_string(m - 1) + "]");
  }
  const LatticePath path = draw_path(n, m);
  switch (stat) {
    case Statistic::NPL:
    case Statistic::PNPL: return theta(path, target + 1);
    case Statistic::RML:
    case Statistic::PRML: return gamma(path, target + 1);
  }
  throw Error(ErrorCode::InvalidRange, "unknown statistic");
}

PointedLatticePath uniform_sample(int n, std::int64_t m, Statistic stat, std::int64_t target,
                                  std::uint64_t seed) {
  return Sampler(seed).draw(n, m, stat, target);
}

}  // namespace chungfeller
