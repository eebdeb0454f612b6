#include "chungfeller/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "chungfeller/bijections.hpp"
#include "chungfeller/pointed.hpp"

namespace chungfeller {

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

void VerificationReport::add(std::string name, std::string parameters, std::string expected,
                             std::string observed) {
  const bool pass = expected == observed;
  checks.push_back(
      {std::move(name), std::move(parameters), std::move(expected), std::move(observed), pass});
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    list.push_back({{"name", c.name},
                    {"parameters", c.parameters},
                    {"expected", c.expected},
                    {"observed", c.observed},
                    {"pass", c.pass}});
  }
  return {{"checks", std::move(list)},
          {"summary",
           {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}}}};
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "npl") return Suite::Npl;
  if (name == "rml") return Suite::Rml;
  if (name == "pointed") return Suite::Pointed;
  if (name == "stepsets") return Suite::StepSets;
  return std::nullopt;
}

namespace {

using PathMap = std::function<LatticePath(const LatticePath&)>;
using Levels = std::vector<std::vector<LatticePath>>;

std::string params(int n, std::int64_t m) {
  return "n=" + std::to_string(n) + ",m=" + std::to_string(m);
}

std::string params(int n, std::int64_t m, std::int64_t r) {
  return params(n, m) + ",r=" + std::to_string(r);
}

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k != 0) out += ',';
    out += values[k].str();
  }
  return out;
}

std::string join(const Distribution& d) {
  std::vector<BigInt> values;
  for (const auto& entry : d.counts) values.push_back(entry.second);
  return join(values);
}

// Plain paths grouped by statistic value, each level sorted.
Levels levels(int n, std::int64_t m, std::int64_t (*stat)(const LatticePath&),
              std::uint64_t cap) {
  Levels out(static_cast<std::size_t>(m));
  auto paths = enumerate_paths(n, m, cap);
  while (auto path = paths.next()) {
    out[static_cast<std::size_t>(stat(*path))].push_back(std::move(*path));
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<LatticePath> with_unit_last_step(const std::vector<LatticePath>& paths) {
  std::vector<LatticePath> out;
  std::copy_if(paths.begin(), paths.end(), std::back_inserter(out),
               [](const LatticePath& p) { return p.last().x == 1; });
  return out;
}

// Image of `domain` under `forward` must be exactly `target`, and `backward`
// must undo `forward` pointwise.
void check_bijection(VerificationReport& report, const std::string& name,
                     const std::string& parameters, const std::vector<LatticePath>& domain,
                     const std::vector<LatticePath>& target, const PathMap& forward,
                     const PathMap& backward) {
  std::vector<LatticePath> image;
  image.reserve(domain.size());
  std::size_t round_trip_failures = 0;
  for (const LatticePath& p : domain) {
    LatticePath q = forward(p);
    if (backward(q) != p) ++round_trip_failures;
    image.push_back(std::move(q));
  }
  std::sort(image.begin(), image.end());
  const bool duplicate = std::adjacent_find(image.begin(), image.end()) != image.end();

  std::string observed;
  if (duplicate) {
    observed = "not injective";
  } else if (image != target) {
    observed = "image has " + std::to_string(image.size()) + " paths, target has " +
               std::to_string(target.size()) + " and differs";
  } else if (round_trip_failures != 0) {
    observed = std::to_string(round_trip_failures) + " round-trip failures";
  } else {
    observed = "bijection size " + std::to_string(domain.size());
  }
  report.add(name, parameters, "bijection size " + std::to_string(target.size()), observed);
}

void check_plain_histogram(VerificationReport& report, const char* name, int n,
                           std::int64_t m, Statistic stat, std::uint64_t cap) {
  std::vector<BigInt> expected;
  expected.push_back(count_closed_form(ClosedForm::NplZero, n, m));
  for (std::int64_t r = 1; r < m; ++r) {
    expected.push_back(count_closed_form(ClosedForm::NplZeroTilde, n, m));
  }
  report.add(name, params(n, m), join(expected), join(histogram(n, m, stat, cap)));
}

std::string flat_counts(int n, std::int64_t m) {
  return join(std::vector<BigInt>(static_cast<std::size_t>(m),
                                  count_closed_form(ClosedForm::PointedPerR, n, m)));
}

}  // namespace

void verify_npl(VerificationReport& report, int n, std::int64_t m, std::uint64_t cap) {
  check_plain_histogram(report, "npl_histogram", n, m, Statistic::NPL, cap);

  std::size_t mismatches = 0;
  auto paths = enumerate_paths(n, m, cap);
  while (auto p = paths.next()) {
    if ((npl(*p) == 0) != (rml(*p) == 0)) ++mismatches;
  }
  report.add("npl_zero_iff_rml_zero", params(n, m), "0 mismatches",
             std::to_string(mismatches) + " mismatches");

  const Levels by_npl = levels(n, m, &npl, cap);
  const auto tilde = with_unit_last_step(by_npl[0]);
  report.add("npl_tilde_count", params(n, m),
             count_closed_form(ClosedForm::NplZeroTilde, n, m).str(),
             std::to_string(tilde.size()));
  check_bijection(report, "phi_zero_bijection", params(n, m, 0), tilde, by_npl[1], &phi_zero,
                  &phi_zero_inv);
  for (std::int64_t r = 1; r <= m - 2; ++r) {
    const auto level = static_cast<std::size_t>(r);
    check_bijection(report, "phi_bijection", params(n, m, r), by_npl[level],
                    by_npl[level + 1], &phi, &phi_inv);
  }
}

void verify_rml(VerificationReport& report, int n, std::int64_t m, std::uint64_t cap) {
  check_plain_histogram(report, "rml_histogram", n, m, Statistic::RML, cap);

  const Levels by_rml = levels(n, m, &rml, cap);
  const auto tilde = with_unit_last_step(by_rml[0]);
  report.add("rml_tilde_count", params(n, m),
             count_closed_form(ClosedForm::NplZeroTilde, n, m).str(),
             std::to_string(tilde.size()));
  check_bijection(report, "psi_zero_bijection", params(n, m, 0), tilde, by_rml[1], &psi_zero,
                  &psi_zero_inv);
  for (std::int64_t r = 1; r <= m - 2; ++r) {
    const auto level = static_cast<std::size_t>(r);
    check_bijection(report, "psi_bijection", params(n, m, r), by_rml[level],
                    by_rml[level + 1], &psi, &psi_inv);
  }
}

void verify_pointed(VerificationReport& report, int n, std::int64_t m, std::uint64_t cap) {
  const std::string expected_flat = flat_counts(n, m);
  report.add("pnpl_histogram", params(n, m), expected_flat,
             join(histogram(n, m, Statistic::PNPL, cap)));
  report.add("prml_histogram", params(n, m), expected_flat,
             join(histogram(n, m, Statistic::PRML, cap)));

  std::size_t theta_bad = 0;
  std::size_t gamma_bad = 0;
  auto paths = enumerate_paths(n, m, cap);
  while (auto p = paths.next()) {
    const auto by_theta = theta_sequence(*p);
    const auto by_gamma = gamma_sequence(*p);
    for (std::int64_t r = 1; r <= m; ++r) {
      const auto k = static_cast<std::size_t>(r - 1);
      if (pnpl(by_theta[k].realized) != r - 1) ++theta_bad;
      if (prml(by_gamma[k].realized) != r - 1) ++gamma_bad;
    }
  }
  report.add("theta_pointwise", params(n, m), "0 violations",
             std::to_string(theta_bad) + " violations");
  report.add("gamma_pointwise", params(n, m), "0 violations",
             std::to_string(gamma_bad) + " violations");

  // Partition of all pointed paths into cyclic classes, each of size m.
  std::map<LatticePath, std::size_t> class_sizes;
  std::size_t index_bad = 0;
  auto pointed = enumerate_pointed(n, m, cap);
  while (auto q = pointed.next()) {
    ++class_sizes[canonical_base(*q)];
    const ClassIndex by_theta = theta_index(*q);
    const ClassIndex by_gamma = gamma_index(*q);
    if (by_theta.r - 1 != pnpl(*q) || theta(by_theta.base, by_theta.r) != *q) ++index_bad;
    if (by_gamma.r - 1 != prml(*q) || gamma(by_gamma.base, by_gamma.r) != *q) ++index_bad;
  }
  const auto odd_sized = std::count_if(class_sizes.begin(), class_sizes.end(),
                                       [m](const auto& e) {
                                         return static_cast<std::int64_t>(e.second) != m;
                                       });
  report.add("class_partition", params(n, m),
             count_closed_form(ClosedForm::PointedPerR, n, m).str() + " classes of size " +
                 std::to_string(m),
             std::to_string(class_sizes.size()) + " classes of size " +
                 (odd_sized == 0 ? std::to_string(m) : "mixed"));
  report.add("class_index_round_trip", params(n, m), "0 violations",
             std::to_string(index_bad) + " violations");

  if (m == n + 1) verify_mohanty(report, n, cap);
}

void verify_step_sets(VerificationReport& report, int n, std::int64_t m, std::uint64_t cap) {
  for (const char* name : {"dyck", "schroeder", "motzkin"}) {
    const StepSet set = *StepSet::preset(name);
    const Distribution by_pnpl = histogram(set, n, m, Statistic::PNPL, cap);
    if (by_pnpl.total == 0) continue;
    const Distribution by_prml = histogram(set, n, m, Statistic::PRML, cap);
    const std::string where = std::string(name) + "," + params(n, m);

    // Same restricted histogram from filtering the unrestricted space.
    Distribution filtered;
    for (std::int64_t r = 0; r < m; ++r) filtered.counts[r] = 0;
    auto paths = enumerate_paths(n, m, cap);
    while (auto p = paths.next()) {
      if (!set.admits(*p)) continue;
      for (std::int64_t j = 0; j < p->last().x; ++j) filtered.add(npl(*p) + j);
    }
    report.add("step_set_dfs_matches_filter", where, join(filtered), join(by_pnpl));

    const BigInt per_value = by_pnpl.total / m;
    const std::string flat = join(std::vector<BigInt>(static_cast<std::size_t>(m), per_value));
    report.add("step_set_pnpl_flat", where, flat, join(by_pnpl));
    report.add("step_set_prml_flat", where, flat, join(by_prml));
  }
}

void verify_mohanty(VerificationReport& report, int n, std::uint64_t cap) {
  const std::int64_t m = n + 1;
  if (binomial(2 * static_cast<std::int64_t>(n), n) > cap) {
    throw Error(ErrorCode::CapExceeded, "y-sequence enumeration exceeds the cap");
  }
  std::size_t bad_orbits = 0;
  std::size_t remark_bad = 0;
  std::vector<BigInt> per_value(static_cast<std::size_t>(m), 0);
  auto ys = y_sequences(n);
  while (const auto* y = ys.next()) {
    // Count of non-positive prefix sums, straight from the sequence.
    std::int64_t height = 0;
    std::int64_t non_positive = 0;
    std::vector<Step> steps;
    for (const auto v : *y) {
      height += v;
      if (height <= 0) ++non_positive;
      steps.push_back({1, v});
    }
    const LatticePath path(std::move(steps));
    if (pnpl(PointedLatticePath(path, 0)) != non_positive) ++remark_bad;
    per_value[static_cast<std::size_t>(non_positive)] += 1;

    std::vector<std::int64_t> orbit;
    for (int i = 1; i <= path.order(); ++i) {
      orbit.push_back(pnpl(PointedLatticePath(cyclic_permutation(path, i), 0)));
    }
    std::sort(orbit.begin(), orbit.end());
    for (std::int64_t k = 0; k < m; ++k) {
      if (orbit[static_cast<std::size_t>(k)] != k) {
        ++bad_orbits;
        break;
      }
    }
  }
  const std::string where = "n=" + std::to_string(n);
  report.add("mohanty_orbit_values", where, "0 violations",
             std::to_string(bad_orbits) + " violations");
  report.add("mohanty_pnpl_equals_count", where, "0 violations",
             std::to_string(remark_bad) + " violations");
  report.add("mohanty_count_per_value", where,
             join(std::vector<BigInt>(static_cast<std::size_t>(m), catalan(n))),
             join(per_value));
}

void require_grid_within_cap(const Grid& grid, Suite suite, std::uint64_t cap) {
  const bool pointed = suite == Suite::All || suite == Suite::Pointed;
  for (const auto& [n, m] : grid) {
    if (n < 1 || m < n + 1) {
      throw Error(ErrorCode::InvalidRange,
                  "grid cell n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                      " needs n >= 1 and m >= n+1");
    }
    const BigInt size = pointed ? count_closed_form(ClosedForm::PointedTotal, n, m)
                                : path_count(n, m);
    if (size > cap) {
      throw Error(ErrorCode::CapExceeded, "grid cell " + params(n, m) + " has " + size.str() +
                                              " items, above the cap of " +
                                              std::to_string(cap));
    }
  }
}

VerificationReport verify(const Grid& grid, Suite suite, std::uint64_t cap) {
  require_grid_within_cap(grid, suite, cap);
  const auto runs = [suite](Suite family) { return suite == Suite::All || suite == family; };
  VerificationReport report;
  for (const auto& [n, m] : grid) {
    if (runs(Suite::Npl)) verify_npl(report, n, m, cap);
    if (runs(Suite::Rml)) verify_rml(report, n, m, cap);
    if (runs(Suite::Pointed)) verify_pointed(report, n, m, cap);
    if (runs(Suite::StepSets)) verify_step_sets(report, n, m, cap);
  }
  return report;
}

}  // namespace chungfeller
