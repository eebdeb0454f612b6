// cfpath: command-line frontend for the lattice-path library.
//
// Exit codes: 0 success, 1 internal error, 2 unparseable input, 3 invariant or
// precondition violation, 4 failed verification, 5 enumeration cap exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "chungfeller/bijections.hpp"
#include "chungfeller/core.hpp"
#include "chungfeller/enumeration.hpp"
#include "chungfeller/path_io.hpp"
#include "chungfeller/pointed.hpp"
#include "chungfeller/verify.hpp"

namespace cf = chungfeller;
using Json = nlohmann::ordered_json;

namespace {

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kInvariant = 3,
  kVerifyFailed = 4,
  kCapExceeded = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t enumeration_cap() {
  const char* env = std::getenv("CF_ENUM_CAP");
  if (env == nullptr || *env == '\0') return cf::kDefaultEnumerationCap;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used != std::string_view(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("CF_ENUM_CAP is not a non-negative integer: ") + env);
  }
}

std::int64_t parse_int(std::string_view text) {
  try {
    std::size_t used = 0;
    const auto value = std::stoll(std::string(text), &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw UsageError("not an integer: " + std::string(text));
  }
}

// "a..b" or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  const auto lo = parse_int(std::string_view(text).substr(0, dots));
  const auto hi = parse_int(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw UsageError("empty range: " + text);
  return {lo, hi};
}

cf::Statistic parse_statistic(const std::string& name) {
  if (auto stat = cf::parse_statistic(name)) return *stat;
  throw UsageError("unknown statistic: " + name);
}

// A preset name, an explicit list [[x,y],...], or {"down":[...],"flat":[...]}.
cf::StepSet parse_step_set(const std::string& text) {
  if (auto preset = cf::StepSet::preset(text)) return *preset;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception&) {
    throw UsageError("step set is neither a preset nor JSON: " + text);
  }
  if (j.is_array()) return cf::StepSet::from_steps(cf::steps_from_json(j));
  if (j.is_object()) {
    std::set<std::int64_t> down;
    std::set<std::int64_t> flat;
    try {
      if (j.contains("down")) down = j.at("down").get<std::set<std::int64_t>>();
      if (j.contains("flat")) flat = j.at("flat").get<std::set<std::int64_t>>();
    } catch (const Json::exception&) {
      throw UsageError("step set lengths must be integer arrays");
    }
    return cf::StepSet::from_lengths(down, flat);
  }
  throw UsageError("step set JSON must be an array or an object");
}

std::string csv_quote(const std::string& field) { return '"' + field + '"'; }

struct Options {
  std::string path;
  std::string stat = "npl";
  std::optional<std::int64_t> root_offset;
  int n = 0;
  std::int64_t m = 0;
  bool pointed = false;
  std::string step_set;
  std::string format = "json";
  std::string map;
  bool trace = false;
  std::optional<std::int64_t> r;
  std::string n_range;
  std::string m_range;
  std::string m_offset;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::int64_t count = 1;
};

int cmd_stat(const Options& o) {
  const auto stat = parse_statistic(o.stat);
  const cf::LatticePath path = cf::parse_path(o.path);
  if (cf::is_pointed(stat)) {
    if (!o.root_offset) throw UsageError("--stat " + o.stat + " needs --root-offset");
    const cf::PointedLatticePath q(path, *o.root_offset);
    std::cout << (stat == cf::Statistic::PNPL ? cf::pnpl(q) : cf::prml(q)) << '\n';
  } else {
    if (o.root_offset) throw UsageError("--root-offset only applies to pnpl and prml");
    std::cout << (stat == cf::Statistic::NPL ? cf::npl(path) : cf::rml(path)) << '\n';
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::uint64_t cap) {
  const bool csv = o.format == "csv";
  if (csv) std::cout << (o.pointed ? "path,root_offset\n" : "path\n");
  const auto emit = [&](const cf::LatticePath& p) {
    if (!o.pointed) {
      if (csv) {
        std::cout << csv_quote(cf::format_path(p)) << '\n';
      } else {
        std::cout << cf::to_json(p).dump() << '\n';
      }
      return;
    }
    for (std::int64_t j = 0; j < p.last().x; ++j) {
      if (csv) {
        std::cout << csv_quote(cf::format_path(p)) << ',' << j << '\n';
      } else {
        std::cout << cf::to_json(cf::PointedLatticePath(p, j)).dump() << '\n';
      }
    }
  };
  if (o.step_set.empty()) {
    if (o.pointed) {
      // Validate the cap for the pointed space before printing anything.
      cf::enumerate_pointed(o.n, o.m, cap);
    }
    auto paths = cf::enumerate_paths(o.n, o.m, cap);
    while (auto p = paths.next()) emit(*p);
  } else {
    auto paths = cf::enumerate_step_set_paths(parse_step_set(o.step_set), o.n + 1, o.m, cap);
    while (auto p = paths.next()) emit(*p);
  }
  return kOk;
}

int cmd_histogram(const Options& o, std::uint64_t cap) {
  const auto stat = parse_statistic(o.stat);
  const cf::Distribution d = o.step_set.empty()
                                 ? cf::histogram(o.n, o.m, stat, cap)
                                 : cf::histogram(parse_step_set(o.step_set), o.n, o.m, stat, cap);
  if (o.format == "csv") {
    std::cout << cf::to_csv(d);
  } else {
    std::cout << cf::to_json(d, o.n, o.m, stat).dump() << '\n';
  }
  return kOk;
}

int cmd_biject(const Options& o) {
  const auto map = cf::parse_bijection_map(o.map);
  if (!map) throw UsageError("unknown map: " + o.map);
  cf::LatticePath path = cf::parse_path(o.path);
  if (!o.trace) {
    std::cout << cf::to_json(cf::apply(*map, path)).dump() << '\n';
    return kOk;
  }
  std::cout << cf::to_json(path).dump() << '\n';
  while (cf::in_domain(*map, path)) {
    path = cf::apply(*map, path);
    std::cout << cf::to_json(path).dump() << '\n';
  }
  return kOk;
}

int cmd_class_order(const Options& o, bool use_theta) {
  const cf::LatticePath path = cf::parse_path(o.path);
  const auto members = use_theta ? cf::theta_sequence(path) : cf::gamma_sequence(path);
  if (o.r) {
    const auto q = use_theta ? cf::theta(path, *o.r) : cf::gamma(path, *o.r);
    std::cout << cf::to_json(q).dump() << '\n';
    return kOk;
  }
  Json order = Json::array();
  Json paths = Json::array();
  Json stat = Json::array();
  for (const auto& member : members) {
    order.push_back({member.rotation, member.offset});
    paths.push_back(cf::to_json(member.realized));
    stat.push_back(use_theta ? cf::pnpl(member.realized) : cf::prml(member.realized));
  }
  Json out{{"order", std::move(order)}, {"paths", std::move(paths)}, {"stat", std::move(stat)}};
  std::cout << out.dump() << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::uint64_t cap) {
  const auto suite = cf::parse_suite(o.suite);
  if (!suite) throw UsageError("unknown suite: " + o.suite);
  if (o.m_range.empty() == o.m_offset.empty()) {
    throw UsageError("give exactly one of --m and --m-offset");
  }
  const auto [n_lo, n_hi] = parse_range(o.n_range);
  cf::Grid grid;
  for (auto n = n_lo; n <= n_hi; ++n) {
    const auto [lo, hi] = parse_range(o.m_range.empty() ? o.m_offset : o.m_range);
    const std::int64_t base = o.m_range.empty() ? n + 1 : 0;
    for (auto m = base + lo; m <= base + hi; ++m) grid.emplace_back(static_cast<int>(n), m);
  }
  const cf::VerificationReport report = cf::verify(grid, *suite, cap);
  std::cout << report.to_json().dump(2) << '\n';
  if (!report.ok()) {
    std::cerr << report.failed() << " of " << report.checks.size() << " checks failed\n";
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_sample(const Options& o) {
  if (!o.r) throw UsageError("sample needs --r");
  if (o.count < 1) throw UsageError("--count must be positive");
  const auto stat = parse_statistic(o.stat);
  cf::Sampler sampler(o.seed);
  for (std::int64_t k = 0; k < o.count; ++k) {
    std::cout << cf::to_json(sampler.draw(o.n, o.m, stat, *o.r)).dump() << '\n';
  }
  return kOk;
}

int exit_code_for(cf::ErrorCode code) {
  switch (code) {
    case cf::ErrorCode::ParseError: return kParse;
    case cf::ErrorCode::CapExceeded: return kCapExceeded;
    default: return kInvariant;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice paths, their statistics, level-shifting bijections and cyclic classes"};
  app.require_subcommand(1);
  Options o;

  const auto add_path = [&o](CLI::App* cmd) {
    cmd->add_option("--path", o.path, "Path literal, e.g. \"(1,1)(1,-2)(2,1)\"")->required();
  };
  const auto add_size = [&o](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Order parameter n (paths have n+1 steps)")->required();
    cmd->add_option("--m", o.m, "Path length m")->required();
  };

  auto* stat = app.add_subcommand("stat", "Compute one statistic of a path");
  add_path(stat);
  stat->add_option("--stat", o.stat, "npl | rml | pnpl | prml")->required();
  stat->add_option("--root-offset", o.root_offset, "Root offset j for pointed statistics");

  auto* enumerate = app.add_subcommand("enumerate", "List every (pointed) path");
  add_size(enumerate);
  enumerate->add_flag("--pointed", o.pointed, "Emit pointed paths");
  enumerate->add_option("--step-set", o.step_set, "Preset name or JSON step list");
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* histogram = app.add_subcommand("histogram", "Exact distribution of a statistic");
  add_size(histogram);
  histogram->add_option("--statistic", o.stat, "npl | rml | pnpl | prml")->required();
  histogram->add_option("--step-set", o.step_set, "Preset name or JSON step list");
  histogram->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* biject = app.add_subcommand("biject", "Apply a level-shifting map");
  add_path(biject);
  biject->add_option("--map", o.map,
                     "phi | phi_inv | phi_zero | phi_zero_inv | psi | psi_inv | psi_zero | "
                     "psi_zero_inv")
      ->required();
  biject->add_flag("--trace", o.trace, "Repeat while the map's precondition holds");

  auto* theta = app.add_subcommand("theta", "Class of a path ordered by the path order");
  add_path(theta);
  theta->add_option("--r", o.r, "Emit only the r-th member");

  auto* gamma = app.add_subcommand("gamma", "Class of a path ordered by sigma");
  add_path(gamma);
  gamma->add_option("--r", o.r, "Emit only the r-th member");

  auto* verify = app.add_subcommand("verify", "Run exhaustive checks over a parameter grid");
  verify->add_option("--n", o.n_range, "n or a..b")->required();
  verify->add_option("--m", o.m_range, "m or a..b");
  verify->add_option("--m-offset", o.m_offset, "a..b: m ranges over n+1+a .. n+1+b");
  verify->add_option("--suite", o.suite, "all | npl | rml | pointed | stepsets");

  auto* sample = app.add_subcommand("sample", "Uniform pointed path with a given statistic");
  add_size(sample);
  sample->add_option("--statistic", o.stat, "pnpl | prml (npl/rml are aliases)");
  sample->add_option("--r", o.r, "Target statistic value in [0, m-1]");
  sample->add_option("--seed", o.seed, "RNG seed");
  sample->add_option("--count", o.count, "Number of draws from one seeded stream");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    const std::uint64_t cap = enumeration_cap();
    if (*stat) return cmd_stat(o);
    if (*enumerate) return cmd_enumerate(o, cap);
    if (*histogram) return cmd_histogram(o, cap);
    if (*biject) return cmd_biject(o);
    if (*theta) return cmd_class_order(o, true);
    if (*gamma) return cmd_class_order(o, false);
    if (*verify) return cmd_verify(o, cap);
    if (*sample) return cmd_sample(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const cf::Error& e) {
    std::cerr << "error [" << cf::to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
