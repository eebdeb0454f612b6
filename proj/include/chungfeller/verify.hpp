#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chungfeller/enumeration.hpp"

namespace chungfeller {

struct Check {
  std::string name;
  std::string parameters;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Check> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }

  void add(std::string name, std::string parameters, std::string expected,
           std::string observed);

  nlohmann::ordered_json to_json() const;
};

enum class Suite { All, Npl, Rml, Pointed, StepSets };

std::optional<Suite> parse_suite(std::string_view name);

/// (n, m) pairs to check, in order.
using Grid = std::vector<std::pair<int, std::int64_t>>;

/// Throws Error(CapExceeded) if any cell of the grid is too large for the
/// suite. Called before any check runs, so a refused run has no output.
void require_grid_within_cap(const Grid& grid, Suite suite, std::uint64_t cap);

/// Runs every exhaustive check of `suite` on each grid cell, in grid order.
VerificationReport verify(const Grid& grid, Suite suite,
                          std::uint64_t cap = kDefaultEnumerationCap);

// Individual check families, each appending to `report`.
void verify_npl(VerificationReport& report, int n, std::int64_t m, std::uint64_t cap);
void verify_rml(VerificationReport& report, int n, std::int64_t m, std::uint64_t cap);
void verify_pointed(VerificationReport& report, int n, std::int64_t m, std::uint64_t cap);
void verify_step_sets(VerificationReport& report, int n, std::int64_t m, std::uint64_t cap);
/// Cyclic shifts of every y-sequence of length n+1 realise each count of
/// non-positive prefixes 0..n once, and each count is hit by c_n sequences.
void verify_mohanty(VerificationReport& report, int n, std::uint64_t cap);

}  // namespace chungfeller
