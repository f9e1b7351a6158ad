#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gammatop/context.hpp"
#include "gammatop/error.hpp"
#include "gammatop/set_cover.hpp"

namespace gammatop {

/// Sets that witness the failure of a separation property, e.g. {A, B} for an
/// inseparable pair of gamma-closed sets or {{x}, A} for a point and a set.
using Violation = std::vector<PointSet>;

// ---------------------------------------------------------------------------
// Neighbourhoods

/// The gamma-open sets containing a point, plus the general gamma-nbd test.
struct GammaNbdSystem {
  std::size_t point = 0;
  std::vector<PointSet> gamma_open_nbds;

  /// U is a gamma-nbd of the point iff the point lies in int_gamma(U).
  bool is_gamma_nbd(const GammaContext& ctx, PointSet u) const { return ctx.interior(u).contains(point); }
};

inline GammaNbdSystem gamma_nbd_system(const GammaContext& ctx, std::size_t x) {
  if (!ctx.ground().contains(x)) {
    throw Error(ErrorCode::PointOutOfRange, "point is not in the ground set", {PointSet::singleton(x)});
  }
  GammaNbdSystem sys{.point = x, .gamma_open_nbds = {}};
  for (PointSet g : ctx.gamma_open_family()) {
    if (g.contains(x)) sys.gamma_open_nbds.push_back(g);
  }
  return sys;
}

// ---------------------------------------------------------------------------
// Separation

inline std::optional<Violation> find_gamma_T2_violation(const GammaContext& ctx) {
  const auto opens = ctx.space().opens();
  const auto images = ctx.operation().images();
  const std::size_t n = ctx.space().size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool separated = false;
      for (std::size_t i = 0; i < opens.size() && !separated; ++i) {
        if (!opens[i].contains(x)) continue;
        for (std::size_t j = 0; j < opens.size() && !separated; ++j) {
          separated = opens[j].contains(y) && !images[i].intersects(images[j]);
        }
      }
      if (!separated) return Violation{PointSet::singleton(x), PointSet::singleton(y)};
    }
  }
  return std::nullopt;
}

/// Distinct points have open neighbourhoods with disjoint gamma-images.
inline bool is_gamma_T2(const GammaContext& ctx) { return !find_gamma_T2_violation(ctx); }

/// A point outside a gamma-closed set A and A itself have disjoint gamma-open
/// neighbourhoods. Witness: {{x}, A}.
inline std::optional<Violation> find_gamma_star_regular_violation(const GammaContext& ctx, ClosedVariant variant) {
  const auto family = ctx.gamma_open_family();
  for (PointSet a : ctx.gamma_closed_family(variant)) {
    for (std::size_t x : (ctx.ground() - a).points()) {
      const bool separated = std::any_of(family.begin(), family.end(), [&](PointSet u) {
        return u.contains(x) && a.subset_of(ctx.largest_gamma_open_within(ctx.ground() - u));
      });
      if (!separated) return Violation{PointSet::singleton(x), a};
    }
  }
  return std::nullopt;
}

inline bool is_gamma_star_regular(const GammaContext& ctx, ClosedVariant variant = ClosedVariant::jankovic) {
  return !find_gamma_star_regular_violation(ctx, variant);
}

/// Point/closed-set separation by gamma-open U ∋ x, V ⊇ A with disjoint gamma-closures.
inline std::optional<Violation> find_star_regular_by_closures_violation(const GammaContext& ctx,
                                                                        ClosedVariant variant) {
  const auto family = ctx.gamma_open_family();
  for (PointSet a : ctx.gamma_closed_family(variant)) {
    for (std::size_t x : (ctx.ground() - a).points()) {
      bool separated = false;
      for (PointSet u : family) {
        if (!u.contains(x)) continue;
        const PointSet cu = ctx.closure(u);
        separated = std::any_of(family.begin(), family.end(), [&](PointSet v) {
          return a.subset_of(v) && !cu.intersects(ctx.closure(v));
        });
        if (separated) break;
      }
      if (!separated) return Violation{PointSet::singleton(x), a};
    }
  }
  return std::nullopt;
}

inline bool is_star_regular_by_closures(const GammaContext& ctx, ClosedVariant variant = ClosedVariant::jankovic) {
  return !find_star_regular_by_closures_violation(ctx, variant);
}

/// Disjoint gamma-closed sets have disjoint gamma-open neighbourhoods. Witness: {A, B}.
inline std::optional<Violation> find_gamma_normal_violation(const GammaContext& ctx, ClosedVariant variant) {
  const auto closed = ctx.gamma_closed_family(variant);
  const auto family = ctx.gamma_open_family();
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i + 1; j < closed.size(); ++j) {
      const PointSet a = closed[i];
      const PointSet b = closed[j];
      if (a.intersects(b)) continue;
      const bool separated = std::any_of(family.begin(), family.end(), [&](PointSet u) {
        return a.subset_of(u) && b.subset_of(ctx.largest_gamma_open_within(ctx.ground() - u));
      });
      if (!separated) return Violation{a, b};
    }
  }
  return std::nullopt;
}

inline bool is_gamma_normal(const GammaContext& ctx, ClosedVariant variant = ClosedVariant::jankovic) {
  return !find_gamma_normal_violation(ctx, variant);
}

/// Disjoint gamma-closed A, B admit gamma-open U ⊇ A, V ⊇ B with cl(U) ∩ cl(V) = ∅.
inline std::optional<Violation> find_normal_by_closures_violation(const GammaContext& ctx, ClosedVariant variant) {
  const auto closed = ctx.gamma_closed_family(variant);
  const auto family = ctx.gamma_open_family();
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i + 1; j < closed.size(); ++j) {
      const PointSet a = closed[i];
      const PointSet b = closed[j];
      if (a.intersects(b)) continue;
      bool separated = false;
      for (PointSet u : family) {
        if (!a.subset_of(u)) continue;
        const PointSet cu = ctx.closure(u);
        separated = std::any_of(family.begin(), family.end(), [&](PointSet v) {
          return b.subset_of(v) && !cu.intersects(ctx.closure(v));
        });
        if (separated) break;
      }
      if (!separated) return Violation{a, b};
    }
  }
  return std::nullopt;
}

inline bool is_normal_by_closures(const GammaContext& ctx, ClosedVariant variant = ClosedVariant::jankovic) {
  return !find_normal_by_closures_violation(ctx, variant);
}

/// Every gamma-open U around a gamma-closed A contains the gamma-closure of some
/// gamma-open V ⊇ A. Witness: {A, U}.
inline std::optional<Violation> find_shrinkability_violation(const GammaContext& ctx, ClosedVariant variant) {
  const auto family = ctx.gamma_open_family();
  for (PointSet a : ctx.gamma_closed_family(variant)) {
    for (PointSet u : family) {
      if (!a.subset_of(u)) continue;
      const bool shrinks = std::any_of(family.begin(), family.end(), [&](PointSet v) {
        return a.subset_of(v) && ctx.closure(v).subset_of(u);
      });
      if (!shrinks) return Violation{a, u};
    }
  }
  return std::nullopt;
}

inline bool is_gamma_shrinkable(const GammaContext& ctx, ClosedVariant variant = ClosedVariant::jankovic) {
  return !find_shrinkability_violation(ctx, variant);
}

// ---------------------------------------------------------------------------
// Compactness

/// Families larger than this are not enumerated cover by cover; see is_gamma0_compact.
inline constexpr std::size_t kLiteralCoverLimit = 20;

/// For every cover of the ground set (or of A, under CoverMode::target) by
/// distinct gamma-open sets, some subfamily's gamma-closures cover A.
///
/// Covers are enumerated literally as subfamilies of the gamma-open family.
/// Since V ⊆ cl_gamma(V) for gamma-open V, a cover's own closures always
/// contain what the cover contains, so for families beyond
/// kLiteralCoverLimit the answer is decided by that containment alone.
inline bool is_gamma0_compact(const GammaContext& ctx, PointSet a, CoverMode mode = CoverMode::whole_space) {
  if (!a.subset_of(ctx.ground())) return false;
  const auto family = ctx.gamma_open_family();
  const PointSet must_cover = mode == CoverMode::whole_space ? ctx.ground() : a;
  if (family.size() > kLiteralCoverLimit) {
    PointSet all;
    for (PointSet g : family) all |= g;
    return !must_cover.subset_of(all) || a.subset_of(must_cover);
  }
  std::vector<PointSet> closures;
  closures.reserve(family.size());
  for (PointSet g : family) closures.push_back(ctx.closure(g));

  const std::size_t subfamilies = std::size_t{1} << family.size();
  for (std::size_t pick = 1; pick < subfamilies; ++pick) {
    PointSet covered;
    PointSet closed_union;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if ((pick >> i) & 1U) {
        covered |= family[i];
        closed_union |= closures[i];
      }
    }
    if (!must_cover.subset_of(covered)) continue;
    // A finite cover is its own finite subfamily, so only the closures matter.
    if (!a.subset_of(closed_union)) return false;
  }
  return true;
}

/// The space itself is gamma0-compact.
inline bool is_gamma0_compact_space(const GammaContext& ctx, CoverMode mode = CoverMode::whole_space) {
  return is_gamma0_compact(ctx, ctx.ground(), mode);
}

/// A nonempty subset is gamma0-compact as a subspace with the relative structure.
inline bool is_gamma0_compact_subspace(const GammaContext& ctx, PointSet a, CoverMode mode = CoverMode::whole_space) {
  if (a.empty()) return true;
  return is_gamma0_compact_space(relativize(ctx, a), mode);
}

struct SubcoverCertificate {
  std::vector<std::size_t> chosen_indices;
  PointSet covered;
};

/// A minimum-cardinality subfamily of a gamma-open cover of the ground set
/// whose gamma-closures contain `target`.
inline SubcoverCertificate minimal_gamma0_subcover(const GammaContext& ctx, std::span<const PointSet> cover,
                                                   PointSet target) {
  PointSet covered;
  std::vector<PointSet> closures;
  closures.reserve(cover.size());
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (!ctx.is_gamma_open(cover[i])) {
      throw Error(ErrorCode::MemberNotGammaOpen, "cover member is not gamma-open", {cover[i]}, i);
    }
    covered |= cover[i];
    closures.push_back(ctx.closure(cover[i]));
  }
  if (covered != ctx.ground()) throw Error(ErrorCode::NotACoverOfX, "family does not cover the ground set", {covered});
  auto chosen = minimum_set_cover(closures, target);
  if (!chosen) throw Error(ErrorCode::Uncoverable, "target is not inside the union of the closures", {target});
  SubcoverCertificate cert{.chosen_indices = std::move(*chosen), .covered = {}};
  for (std::size_t i : cert.chosen_indices) cert.covered |= closures[i];
  return cert;
}

// ---------------------------------------------------------------------------
// Local compactness

struct LocalCompactness {
  bool holds = false;
  /// One gamma0-compact gamma-nbd per ground point (indexed by point), if found.
  std::vector<std::optional<PointSet>> witnesses;
};

/// Searches for a gamma-nbd of x that is gamma0-compact as a subspace: first
/// among the gamma-open sets containing x, then among all gamma-nbds, each in
/// canonical order.
inline std::optional<PointSet> find_compact_gamma_nbd(const GammaContext& ctx, std::size_t x, CoverMode mode) {
  for (PointSet g : ctx.gamma_open_family()) {
    if (g.contains(x) && is_gamma0_compact_subspace(ctx, g, mode)) return g;
  }
  std::vector<PointSet> nbds;
  for_each_subset(ctx.ground(), [&](PointSet u) {
    if (ctx.interior(u).contains(x) && !ctx.is_gamma_open(u)) nbds.push_back(u);
  });
  std::sort(nbds.begin(), nbds.end(), CanonicalLess{});
  for (PointSet u : nbds) {
    if (is_gamma0_compact_subspace(ctx, u, mode)) return u;
  }
  return std::nullopt;
}

inline LocalCompactness is_gamma_locally_compact(const GammaContext& ctx, CoverMode mode = CoverMode::whole_space) {
  LocalCompactness out{.holds = true, .witnesses = std::vector<std::optional<PointSet>>(ctx.space().size())};
  for (std::size_t x : ctx.ground().points()) {
    out.witnesses[x] = find_compact_gamma_nbd(ctx, x, mode);
    if (!out.witnesses[x]) out.holds = false;
  }
  return out;
}

/// Every point is a gamma-interior point of some subset that is gamma0-compact as a subspace.
inline bool every_point_interior_to_compact(const GammaContext& ctx, CoverMode mode = CoverMode::whole_space) {
  for (std::size_t x : ctx.ground().points()) {
    bool found = false;
    for_each_subset(ctx.ground(), [&](PointSet c) {
      if (!found && ctx.interior(c).contains(x) && is_gamma0_compact_subspace(ctx, c, mode)) found = true;
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace gammatop
