#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gammatop/point_set.hpp"

namespace gammatop {

namespace detail {

class SetCoverSearch {
 public:
  SetCoverSearch(std::vector<PointSet> sets, std::vector<std::size_t> ids, std::vector<std::size_t> incumbent)
      : sets_(std::move(sets)), ids_(std::move(ids)), best_(std::move(incumbent)) {
    for (PointSet s : sets_) widest_ = std::max(widest_, s.size());
  }

  std::vector<std::size_t> run(PointSet target) {
    std::vector<std::size_t> chosen;
    branch(target, chosen);
    return best_;
  }

 private:
  void branch(PointSet uncovered, std::vector<std::size_t>& chosen) {
    if (uncovered.empty()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    // Each further set covers at most widest_ new points.
    const std::size_t bound = chosen.size() + (uncovered.size() + widest_ - 1) / widest_;
    if (bound >= best_.size()) return;

    // Branch on the uncovered point with the fewest candidate sets.
    std::size_t pivot = 0;
    std::size_t fewest = sets_.size() + 1;
    for (std::size_t p : uncovered.points()) {
      std::size_t count = 0;
      for (PointSet s : sets_) count += s.contains(p);
      if (count < fewest) {
        fewest = count;
        pivot = p;
      }
    }
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (!sets_[i].contains(pivot)) continue;
      chosen.push_back(ids_[i]);
      branch(uncovered - sets_[i], chosen);
      chosen.pop_back();
    }
  }

  std::vector<PointSet> sets_;
  std::vector<std::size_t> ids_;
  std::vector<std::size_t> best_;
  std::size_t widest_ = 1;
};

}  // namespace detail

/// Minimum-cardinality subfamily of `sets` whose union contains `target`.
///
/// Exact branch-and-bound: dominated sets are dropped, the greedy cover seeds
/// the incumbent, and each node branches on the uncovered point with the
/// fewest candidates. Returns the chosen indices in increasing order, or
/// nullopt when the whole family does not cover the target.
inline std::optional<std::vector<std::size_t>> minimum_set_cover(std::span<const PointSet> sets, PointSet target) {
  PointSet reachable;
  for (PointSet s : sets) reachable |= s & target;
  if (!target.subset_of(reachable)) return std::nullopt;
  if (target.empty()) return std::vector<std::size_t>{};

  // Dominance: keep set i unless some other set covers its part of the target
  // strictly, or equally with a lower index.
  std::vector<PointSet> kept;
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const PointSet si = sets[i] & target;
    if (si.empty()) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (j == i) continue;
      const PointSet sj = sets[j] & target;
      dominated = si.subset_of(sj) && (si != sj || j < i);
    }
    if (!dominated) {
      kept.push_back(si);
      ids.push_back(i);
    }
  }

  std::vector<std::size_t> greedy;
  PointSet uncovered = target;
  while (!uncovered.empty()) {
    std::size_t pick = 0;
    std::size_t gain = 0;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const std::size_t g = (kept[k] & uncovered).size();
      if (g > gain) {
        gain = g;
        pick = k;
      }
    }
    greedy.push_back(ids[pick]);
    uncovered = uncovered - kept[pick];
  }

  auto best = detail::SetCoverSearch(std::move(kept), std::move(ids), std::move(greedy)).run(target);
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace gammatop
