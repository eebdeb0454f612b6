#include "chungfeller/pointed.hpp"

#include <algorithm>
#include <string>

namespace chungfeller {

PointedLatticePath::PointedLatticePath(LatticePath path, std::int64_t root_offset)
    : path_(std::move(path)), root_offset_(root_offset) {
  if (root_offset_ < 0 || root_offset_ > path_.last().x - 1) {
    throw Error(ErrorCode::RootOffsetOutOfRange,
                "root offset " + std::to_string(root_offset_) + " outside [0, " +
                    std::to_string(path_.last().x - 1) + "]");
  }
}

std::int64_t pnpl(const PointedLatticePath& q) { return npl(q.path()) + q.root_offset(); }

std::int64_t prml(const PointedLatticePath& q) { return rml(q.path()) + q.root_offset(); }

namespace {

// Expands rotation indices, taken in the given order, into class members
// with every legal offset in ascending order.
std::vector<ClassMember> expand(const LatticePath& path, const Permutation& rotations) {
  std::vector<ClassMember> members;
  members.reserve(static_cast<std::size_t>(path.m()));
  for (const int i : rotations) {
    const LatticePath rotated = cyclic_permutation(path, i);
    const std::int64_t width = path.step(i).x;
    for (std::int64_t j = 0; j < width; ++j) {
      members.push_back({i, j, PointedLatticePath(rotated, j)});
    }
  }
  return members;
}

void require_rank(const LatticePath& path, std::int64_t r) {
  if (r < 1 || r > path.m()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "rank " + std::to_string(r) + " outside [1, " + std::to_string(path.m()) + "]");
  }
}

ClassIndex locate(const PointedLatticePath& q,
                  std::vector<ClassMember> (*sequence)(const LatticePath&)) {
  LatticePath base = canonical_base(q);
  const auto members = sequence(base);
  const auto it = std::find_if(members.begin(), members.end(),
                               [&q](const ClassMember& c) { return c.realized == q; });
  // Every pointed path occurs in the class of its own canonical base.
  const auto r = static_cast<std::int64_t>(it - members.begin()) + 1;
  return {std::move(base), r};
}

}  // namespace

std::vector<ClassMember> pointed_class(const LatticePath& path) {
  Permutation identity(static_cast<std::size_t>(path.order()));
  for (std::size_t k = 0; k < identity.size(); ++k) identity[k] = static_cast<int>(k) + 1;
  return expand(path, identity);
}

std::vector<ClassMember> theta_sequence(const LatticePath& path) {
  return expand(path, path_order(path));
}

std::vector<ClassMember> gamma_sequence(const LatticePath& path) {
  return expand(path, sigma(path));
}

PointedLatticePath theta(const LatticePath& path, std::int64_t r) {
  require_rank(path, r);
  return theta_sequence(path)[static_cast<std::size_t>(r - 1)].realized;
}

PointedLatticePath gamma(const LatticePath& path, std::int64_t r) {
  require_rank(path, r);
  return gamma_sequence(path)[static_cast<std::size_t>(r - 1)].realized;
}

LatticePath canonical_base(const PointedLatticePath& q) {
  const LatticePath& path = q.path();
  LatticePath best = path;
  for (int i = 1; i < path.order(); ++i) {
    LatticePath candidate = cyclic_permutation(path, i);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

ClassIndex theta_index(const PointedLatticePath& q) { return locate(q, &theta_sequence); }

ClassIndex gamma_index(const PointedLatticePath& q) { return locate(q, &gamma_sequence); }

std::vector<PointedLatticePath> equivalence_class(const PointedLatticePath& q) {
  std::vector<PointedLatticePath> out;
  for (auto& member : pointed_class(q.path())) out.push_back(std::move(member.realized));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chungfeller
