#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <vector>

#include "gammatop/error.hpp"
#include "gammatop/space.hpp"

namespace gammatop {

inline constexpr std::size_t kMaxEnumeratedPoints = 4;

namespace detail {

/// Closes a family under pairwise union and intersection (and adds the empty and full sets).
inline std::vector<PointSet::Mask> close_family(std::vector<PointSet::Mask> family, std::size_t n) {
  std::vector<bool> member(std::size_t{1} << n, false);
  family.push_back(0);
  family.push_back(PointSet::full(n).mask());
  std::vector<PointSet::Mask> out;
  for (auto m : family) {
    if (!member[m]) {
      member[m] = true;
      out.push_back(m);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (auto m : {out[i] | out[j], out[i] & out[j]}) {
        if (!member[m]) {
          member[m] = true;
          out.push_back(m);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](auto a, auto b) { return CanonicalLess{}(PointSet(a), PointSet(b)); });
  return out;
}

}  // namespace detail

/// Every labeled topology on n points, each exactly once, in canonical order.
///
/// Topologies are generated by closing subbases: starting from the indiscrete
/// topology, each known topology is extended by one non-open set and closed
/// again until no new family appears.
inline std::vector<FiniteSpace> enumerate_topologies(std::size_t n) {
  if (n == 0 || n > kMaxEnumeratedPoints) {
    throw Error(ErrorCode::SizeTooLarge, "topology enumeration supports 1 to 4 points");
  }
  using Family = std::vector<PointSet::Mask>;
  std::set<Family> seen;
  std::deque<Family> frontier;
  Family start = detail::close_family({}, n);
  seen.insert(start);
  frontier.push_back(std::move(start));

  const PointSet::Mask subsets = PointSet::Mask{1} << n;
  while (!frontier.empty()) {
    Family current = std::move(frontier.front());
    frontier.pop_front();
    std::vector<bool> open(subsets, false);
    for (auto m : current) open[m] = true;
    for (PointSet::Mask s = 0; s < subsets; ++s) {
      if (open[s]) continue;
      Family extended = current;
      extended.push_back(s);
      Family closed = detail::close_family(std::move(extended), n);
      if (seen.insert(closed).second) frontier.push_back(std::move(closed));
    }
  }

  std::vector<FiniteSpace> spaces;
  spaces.reserve(seen.size());
  for (const auto& family : seen) {
    std::vector<PointSet> opens;
    opens.reserve(family.size());
    for (auto m : family) opens.emplace_back(m);
    spaces.push_back(validate_space(n, opens));
  }
  std::sort(spaces.begin(), spaces.end(), [](const FiniteSpace& a, const FiniteSpace& b) {
    return canonical_before(a, b);
  });
  return spaces;
}

}  // namespace gammatop
