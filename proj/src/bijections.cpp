#include "chungfeller/bijections.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace chungfeller {

namespace {

void require_npl(const LatticePath& path, std::int64_t lo, std::int64_t hi,
                 const char* map) {
  const auto value = npl(path);
  if (value < lo || value > hi) {
    throw Error(ErrorCode::PreconditionNPL,
                std::string(map) + " needs NPL in [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "], got " + std::to_string(value));
  }
}

void require_rml(const LatticePath& path, std::int64_t lo, std::int64_t hi,
                 const char* map) {
  const auto value = rml(path);
  if (value < lo || value > hi) {
    throw Error(ErrorCode::PreconditionRML,
                std::string(map) + " needs RML in [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "], got " + std::to_string(value));
  }
}

// 1-based position of `value` in `perm`.
int position_of(const Permutation& perm, int value) {
  const auto it = std::find(perm.begin(), perm.end(), value);
  return static_cast<int>(it - perm.begin()) + 1;
}

// Moves `delta` units of horizontal length from step n+1 to step i.
LatticePath shift_length(const LatticePath& path, int i, std::int64_t delta) {
  std::vector<Step> steps(path.steps().begin(), path.steps().end());
  steps[static_cast<std::size_t>(i - 1)].x += delta;
  steps.back().x -= delta;
  return make_trusted_path(std::move(steps), path.m());
}

LatticePath last_to_front(const LatticePath& path) {
  return cyclic_permutation(path, path.n());
}

LatticePath first_to_back(const LatticePath& path) {
  return cyclic_permutation(path, 1);
}

LatticePath shift_first(const LatticePath& path, std::int64_t delta) {
  return shift_length(path, 1, delta);
}

}  // namespace

LatticePath phi(const LatticePath& path) {
  require_npl(path, 1, path.m() - 2, "phi");
  const int top = path.order();
  const auto order = path_order(path);
  const int k = position_of(order, top);
  const auto at = [&order](int pos) { return order[static_cast<std::size_t>(pos - 1)]; };

  if (k <= path.n()) {
    if (path.last().x == 1) return cyclic_permutation(path, at(k + 1));
    return shift_length(path, at(k - 1), 1);
  }
  // k == n+1; NPL <= m-2 forces x_{n+1} >= 2.
  return shift_length(path, at(path.n()), 1);
}

LatticePath phi_inv(const LatticePath& path) {
  require_npl(path, 2, path.m() - 1, "phi_inv");
  const auto order = path_order(path);
  const int k = position_of(order, path.order());
  const int i = order[static_cast<std::size_t>(k - 2)];
  if (path.step(i).x == 1) return cyclic_permutation(path, i);
  return shift_length(path, i, -1);
}

LatticePath phi_zero(const LatticePath& path) {
  if (npl(path) != 0 || path.last().x != 1) {
    throw Error(ErrorCode::PreconditionZeroTilde,
                "phi_zero needs NPL = 0 and x_{n+1} = 1");
  }
  return cyclic_permutation(path, path_order(path)[1]);
}

LatticePath phi_zero_inv(const LatticePath& path) {
  require_npl(path, 1, 1, "phi_zero_inv");
  return cyclic_permutation(path, path_order(path)[0]);
}

LatticePath psi(const LatticePath& path) {
  require_rml(path, 1, path.m() - 2, "psi");
  if (path.last().x == 1) return last_to_front(path);
  return shift_first(path, 1);
}

LatticePath psi_inv(const LatticePath& path) {
  require_rml(path, 2, path.m() - 1, "psi_inv");
  if (path.step(1).x == 1) return first_to_back(path);
  return shift_first(path, -1);
}

LatticePath psi_zero(const LatticePath& path) {
  if (rml(path) != 0 || path.last().x != 1) {
    throw Error(ErrorCode::PreconditionZeroTilde,
                "psi_zero needs RML = 0 and x_{n+1} = 1");
  }
  return last_to_front(path);
}

LatticePath psi_zero_inv(const LatticePath& path) {
  require_rml(path, 1, 1, "psi_zero_inv");
  return first_to_back(path);
}

namespace {

struct MapName {
  BijectionMap map;
  std::string_view name;
};

constexpr std::array<MapName, 8> kMapNames{{
    {BijectionMap::Phi, "phi"},
    {BijectionMap::PhiInv, "phi_inv"},
    {BijectionMap::PhiZero, "phi_zero"},
    {BijectionMap::PhiZeroInv, "phi_zero_inv"},
    {BijectionMap::Psi, "psi"},
    {BijectionMap::PsiInv, "psi_inv"},
    {BijectionMap::PsiZero, "psi_zero"},
    {BijectionMap::PsiZeroInv, "psi_zero_inv"},
}};

}  // namespace

std::optional<BijectionMap> parse_bijection_map(std::string_view name) {
  for (const auto& entry : kMapNames) {
    if (entry.name == name) return entry.map;
  }
  return std::nullopt;
}

std::string_view to_string(BijectionMap map) noexcept {
  for (const auto& entry : kMapNames) {
    if (entry.map == map) return entry.name;
  }
  return "unknown";
}

bool in_domain(BijectionMap map, const LatticePath& path) {
  const auto m = path.m();
  switch (map) {
    case BijectionMap::Phi: {
      const auto r = npl(path);
      return r >= 1 && r <= m - 2;
    }
    case BijectionMap::PhiInv: {
      const auto r = npl(path);
      return r >= 2 && r <= m - 1;
    }
    case BijectionMap::PhiZero: return npl(path) == 0 && path.last().x == 1;
    case BijectionMap::PhiZeroInv: return npl(path) == 1;
    case BijectionMap::Psi: {
      const auto r = rml(path);
      return r >= 1 && r <= m - 2;
    }
    case BijectionMap::PsiInv: {
      const auto r = rml(path);
      return r >= 2 && r <= m - 1;
    }
    case BijectionMap::PsiZero: return rml(path) == 0 && path.last().x == 1;
    case BijectionMap::PsiZeroInv: return rml(path) == 1;
  }
  return false;
}

LatticePath apply(BijectionMap map, const LatticePath& path) {
  switch (map) {
    case BijectionMap::Phi: return phi(path);
    case BijectionMap::PhiInv: return phi_inv(path);
    case BijectionMap::PhiZero: return phi_zero(path);
    case BijectionMap::PhiZeroInv: return phi_zero_inv(path);
    case BijectionMap::Psi: return psi(path);
    case BijectionMap::PsiInv: return psi_inv(path);
    case BijectionMap::PsiZero: return psi_zero(path);
    case BijectionMap::PsiZeroInv: return psi_zero_inv(path);
  }
  throw Error(ErrorCode::InvalidRange, "unknown bijection map");
}

}  // namespace chungfeller
