// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "chungfeller/bijections.hpp"
#include "chungfeller/enumeration.hpp"
#include "chungfeller/pointed.hpp"
#include "oracle.hpp"

using namespace chungfeller;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Grid = std::vector<std::pair<int, std::int64_t>>;

Grid small_grid() {
  Grid grid;
  for (int n = 1; n <= 4; ++n) {
    for (std::int64_t m = n + 1; m <= n + 4; ++m) grid.emplace_back(n, m);
  }
  return grid;
}

std::string tag(int n, std::int64_t m) {
  return "n=" + std::to_string(n) + ",m=" + std::to_string(m);
}

LatticePath path(std::vector<Step> steps) { return LatticePath(std::move(steps)); }

std::vector<LatticePath> all_paths(int n, std::int64_t m) {
  std::vector<LatticePath> out;
  auto stream = enumerate_paths(n, m);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

Outcome worked_examples() {
  Outcome o;
  const auto p = path({{1, 1}, {1, -2}, {2, 1}, {1, 1}, {1, -1}, {1, -1}, {1, 1}, {1, 1}, {2, 0}});
  o.expect(non_positive_set(p) == std::vector<int>{2, 3, 5, 6, 7}, "NP set");
  o.expect(npl(p) == 6, "NPL");
  o.expect(path_order(p) == Permutation{6, 2, 7, 5, 3, 9, 8, 4, 1}, "pi_P");
  o.expect(rightmost_minimum(p) == PathPoint{7, -1}, "rightmost minimum");
  o.expect(rml(p) == 7, "RML");

  const auto q = path({{1, 1}, {1, -2}, {1, 1}, {2, 1}});
  const PointedLatticePath pointed(q, 1);
  o.expect(pnpl(pointed) == 3, "PNPL");
  o.expect(prml(pointed) == 3, "PRML");
  o.expect(sigma(q) == Permutation{2, 1, 4, 3}, "sigma_P");

  using Label = std::pair<int, std::int64_t>;
  const auto labels = [](const std::vector<ClassMember>& seq) {
    std::vector<Label> out;
    for (const auto& c : seq) out.emplace_back(c.rotation, c.offset);
    return out;
  };
  o.expect(labels(theta_sequence(q)) == std::vector<Label>{{2, 0}, {3, 0}, {4, 0}, {4, 1}, {1, 0}},
           "Theta matrix");
  o.expect(labels(gamma_sequence(q)) == std::vector<Label>{{2, 0}, {1, 0}, {4, 0}, {4, 1}, {3, 0}},
           "Gamma matrix");
  o.expect(theta(q, 1) == PointedLatticePath(path({{1, 1}, {2, 1}, {1, 1}, {1, -2}}), 0),
           "Theta column 1");
  o.expect(gamma(q, 2) == PointedLatticePath(path({{1, -2}, {1, 1}, {2, 1}, {1, 1}}), 0),
           "Gamma column 2");
  for (std::int64_t r = 1; r <= 5; ++r) {
    o.expect(pnpl(theta(q, r)) == r - 1, "Theta values");
    o.expect(prml(gamma(q, r)) == r - 1, "Gamma values");
  }
  return o;
}

Outcome plain_flat() {
  Outcome o;
  for (const auto& [n, m] : small_grid()) {
    const auto c = oracle::catalan(n);
    const BigInt zero = oracle::choose(static_cast<int>(m - 1), n) * c;
    const BigInt rest = oracle::choose(static_cast<int>(m - 2), n - 1) * c;
    for (const auto stat : {Statistic::NPL, Statistic::RML}) {
      const auto d = histogram(n, m, stat);
      bool good = d.counts.size() == static_cast<std::size_t>(m);
      for (const auto& [r, count] : d.counts) good = good && count == (r == 0 ? zero : rest);
      o.expect(good, std::string(to_string(stat)) + " histogram " + tag(n, m));
    }
  }
  return o;
}

Outcome pointed_flat() {
  Outcome o;
  for (const auto& [n, m] : small_grid()) {
    const std::uint64_t total = oracle::choose(2 * n, n) * oracle::choose(static_cast<int>(m), n + 1);
    const BigInt per_r = total / static_cast<std::uint64_t>(m);
    for (const auto stat : {Statistic::PNPL, Statistic::PRML}) {
      const auto d = histogram(n, m, stat);
      bool good = d.counts.size() == static_cast<std::size_t>(m) && d.total == total;
      for (const auto& [r, count] : d.counts) good = good && count == per_r;
      o.expect(good, std::string(to_string(stat)) + " histogram " + tag(n, m));
    }
  }
  return o;
}

Outcome pointwise() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [n, m] : small_grid()) {
    for (const auto& p : all_paths(n, m)) {
      for (std::int64_t r = 1; r <= m; ++r) {
        o.expect(pnpl(theta(p, r)) == r - 1, "theta " + tag(n, m));
        o.expect(prml(gamma(p, r)) == r - 1, "gamma " + tag(n, m));
        ++checked;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " (P, r) pairs";
  return o;
}

using Map = LatticePath (*)(const LatticePath&);

bool is_bijection(std::vector<LatticePath> from, std::vector<LatticePath> to, Map f, Map f_inv) {
  if (from.size() != to.size()) return false;
  std::vector<LatticePath> image;
  image.reserve(from.size());
  for (const auto& p : from) {
    auto q = f(p);
    if (f_inv(q) != p) return false;
    image.push_back(std::move(q));
  }
  std::sort(image.begin(), image.end());
  std::sort(to.begin(), to.end());
  return image == to;
}

Outcome bijections() {
  Outcome o;
  for (const auto& [n, m] : small_grid()) {
    const auto paths = all_paths(n, m);
    std::vector<std::vector<LatticePath>> by_npl(static_cast<std::size_t>(m));
    std::vector<std::vector<LatticePath>> by_rml(static_cast<std::size_t>(m));
    std::vector<LatticePath> npl_tilde;
    std::vector<LatticePath> rml_tilde;
    for (const auto& p : paths) {
      by_npl[static_cast<std::size_t>(npl(p))].push_back(p);
      by_rml[static_cast<std::size_t>(rml(p))].push_back(p);
      if (p.last().x == 1 && npl(p) == 0) npl_tilde.push_back(p);
      if (p.last().x == 1 && rml(p) == 0) rml_tilde.push_back(p);
    }
    o.expect(is_bijection(npl_tilde, by_npl[1], &phi_zero, &phi_zero_inv), "phi_zero " + tag(n, m));
    o.expect(is_bijection(rml_tilde, by_rml[1], &psi_zero, &psi_zero_inv), "psi_zero " + tag(n, m));
    for (std::size_t r = 1; r + 1 < static_cast<std::size_t>(m); ++r) {
      o.expect(is_bijection(by_npl[r], by_npl[r + 1], &phi, &phi_inv),
               "phi r=" + std::to_string(r) + " " + tag(n, m));
      o.expect(is_bijection(by_rml[r], by_rml[r + 1], &psi, &psi_inv),
               "psi r=" + std::to_string(r) + " " + tag(n, m));
    }
  }
  return o;
}

Outcome unit_steps() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::int64_t> expected(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) expected[static_cast<std::size_t>(k)] = k;
    std::map<std::int64_t, std::uint64_t> per_value;
    for (const auto& p : all_paths(n, n + 1)) {
      std::vector<std::int64_t> orbit;
      for (int i = 1; i <= n + 1; ++i) {
        orbit.push_back(pnpl(PointedLatticePath(cyclic_permutation(p, i), 0)));
      }
      std::sort(orbit.begin(), orbit.end());
      o.expect(orbit == expected, "orbit values n=" + std::to_string(n));
      ++per_value[pnpl(PointedLatticePath(p, 0))];
    }
    bool good = per_value.size() == static_cast<std::size_t>(n) + 1;
    for (const auto& [value, count] : per_value) good = good && count == oracle::catalan(n);
    o.expect(good, "count per value n=" + std::to_string(n));
  }
  return o;
}

Outcome step_sets() {
  Outcome o;
  int nonempty = 0;
  const auto check = [&](const std::string& name, int n, std::int64_t m) {
    const auto set = *StepSet::preset(name);
    for (const auto stat : {Statistic::PNPL, Statistic::PRML}) {
      const auto d = histogram(set, n, m, stat);
      if (d.total == 0) return;
      o.expect(d.is_flat(), name + " " + std::string(to_string(stat)) + " " + tag(n, m));
    }
    ++nonempty;
  };
  for (const int n : {2, 4, 6}) check("dyck", n, n + 1);
  for (const std::string name : {"schroeder", "motzkin"}) {
    for (int n = 1; n <= 5; ++n) {
      for (std::int64_t m = n + 1; m <= n + 4; ++m) check(name, n, m);
    }
  }
  if (o.ok) o.detail = std::to_string(nonempty) + " nonempty (set, n, m)";
  return o;
}

Outcome sampler() {
  Outcome o;
  constexpr int n = 3;
  constexpr std::int64_t m = 5;
  constexpr int draws = 10'000;
  constexpr std::uint64_t seed = 20240601;

  std::set<PointedLatticePath> valid;
  auto stream = enumerate_pointed(n, m);
  while (auto q = stream.next()) {
    if (pnpl(*q) == 0) valid.insert(*q);
  }
  o.expect(valid.size() == 20, "valid output count");

  std::map<PointedLatticePath, int> hits;
  std::vector<PointedLatticePath> first_run;
  Sampler sampler(seed);
  for (int k = 0; k < draws; ++k) {
    auto q = sampler.draw(n, m, Statistic::PNPL, 0);
    o.expect(valid.count(q) == 1, "draw outside the target set");
    ++hits[q];
    first_run.push_back(std::move(q));
  }
  o.expect(hits.size() == valid.size(), "not every valid output was hit");

  const double expected = static_cast<double>(draws) / static_cast<double>(valid.size());
  double stat = 0;
  for (const auto& v : valid) {
    const double diff = hits[v] - expected;
    stat += diff * diff / expected;
  }
  const boost::math::chi_squared dist(static_cast<double>(valid.size() - 1));
  const double critical = boost::math::quantile(boost::math::complement(dist, 0.01));
  o.expect(stat < critical, "chi-square " + std::to_string(stat) + " >= " +
                                std::to_string(critical));

  Sampler again(seed);
  bool same = true;
  for (const auto& q : first_run) same = same && again.draw(n, m, Statistic::PNPL, 0) == q;
  o.expect(same, "same seed gave a different sequence");
  o.expect(uniform_sample(n, m, Statistic::PNPL, 0, 7) == uniform_sample(n, m, Statistic::PNPL, 0, 7),
           "uniform_sample not reproducible");

  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "chi2=%.2f < %.2f (df=%zu)", stat, critical, valid.size() - 1);
    o.detail = buf;
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked examples", 1.0, worked_examples},
      {2, "flat NPL/RML histograms", 10.0, plain_flat},
      {3, "flat PNPL/PRML histograms", 30.0, pointed_flat},
      {4, "pointwise theta/gamma", 30.0, pointwise},
      {5, "bijection soundness", 30.0, bijections},
      {6, "unit-step orbits", 10.0, unit_steps},
      {7, "step-set flatness", 30.0, step_sets},
      {8, "uniform sampler", 10.0, sampler},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && elapsed >= c.limit_seconds) {
      o.ok = false;
      o.detail = "over time limit";
    }
    if (!o.ok) ++failures;
    std::printf("criterion %d %s: %s (%.3fs / %.0fs)%s%s\n", c.id, c.name, o.ok ? "PASS" : "FAIL",
                elapsed, c.limit_seconds, o.detail.empty() ? "" : " ", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
