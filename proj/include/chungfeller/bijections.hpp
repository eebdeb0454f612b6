#pragma once

#include <optional>
#include <string_view>

#include "chungfeller/core.hpp"

namespace chungfeller {

// Level-shifting maps on plain paths. Each throws Error when its argument is
// outside the domain on which the map is a bijection; inputs are never
// modified.

/// NPL r -> r+1 for 1 <= r <= m-2.
LatticePath phi(const LatticePath& path);
/// NPL r -> r-1 for 2 <= r <= m-1.
LatticePath phi_inv(const LatticePath& path);
/// NPL 0 with x_{n+1} = 1 -> NPL 1.
LatticePath phi_zero(const LatticePath& path);
/// NPL 1 -> NPL 0 with x_{n+1} = 1.
LatticePath phi_zero_inv(const LatticePath& path);

/// RML r -> r+1 for 1 <= r <= m-2.
LatticePath psi(const LatticePath& path);
/// RML r -> r-1 for 2 <= r <= m-1.
LatticePath psi_inv(const LatticePath& path);
/// RML 0 with x_{n+1} = 1 -> RML 1.
LatticePath psi_zero(const LatticePath& path);
/// RML 1 -> RML 0 with x_{n+1} = 1.
LatticePath psi_zero_inv(const LatticePath& path);

enum class BijectionMap {
  Phi,
  PhiInv,
  PhiZero,
  PhiZeroInv,
  Psi,
  PsiInv,
  PsiZero,
  PsiZeroInv,
};

std::optional<BijectionMap> parse_bijection_map(std::string_view name);
std::string_view to_string(BijectionMap map) noexcept;

/// True iff `path` lies in the domain of `map`.
bool in_domain(BijectionMap map, const LatticePath& path);

LatticePath apply(BijectionMap map, const LatticePath& path);

}  // namespace chungfeller
