#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gammatop/error.hpp"
#include "gammatop/operation.hpp"
#include "gammatop/space.hpp"

namespace gammatop {

/// Which definition of "gamma-closed" is in force.
///   jankovic: the complement is gamma-open.
///   kasahara: cl_gamma(A) ⊆ A.
enum class ClosedVariant { jankovic, kasahara };

/// Which direction of the "open operation" condition is in force.
///   ogata:   some gamma-open B with x ∈ B ⊆ gamma(U).
///   printed: some gamma-open B with x ∈ B and gamma(U) ⊆ B.
enum class OpenDirection { ogata, printed };

/// Which covers gamma0-compactness of A quantifies over: covers of the whole
/// ground set, or covers of A only.
enum class CoverMode { whole_space, target };

struct Variants {
  ClosedVariant closed = ClosedVariant::jankovic;
  OpenDirection open = OpenDirection::ogata;
  CoverMode cover = CoverMode::whole_space;

  friend bool operator==(const Variants&, const Variants&) = default;
};

constexpr std::string_view to_string(ClosedVariant v) { return v == ClosedVariant::jankovic ? "jankovic" : "kasahara"; }
constexpr std::string_view to_string(OpenDirection v) { return v == OpenDirection::ogata ? "ogata" : "printed"; }
constexpr std::string_view to_string(CoverMode v) { return v == CoverMode::whole_space ? "X" : "A"; }

/// A space together with an operation on its opens, with the gamma-interior,
/// gamma-closure and gamma-open family tabulated for every subset.
///
/// The tables are filled once at construction and never change afterwards, so
/// a context (and its copies, which share the tables) may be read from any
/// number of threads.
///
/// A context can also be *relative*: the subspace structure on a subset A of a
/// parent context, whose gamma-open family is {A ∩ O : O gamma-open in the
/// parent} and whose closure of B ⊆ A is A ∩ cl_gamma(B) in the parent. Such a
/// context has no operation table; interior is the union of the relative
/// gamma-open sets inside the argument. Point indices always refer to the
/// parent space.
class GammaContext {
 public:
  GammaContext(FiniteSpace space, GammaOperation op) : space_(std::move(space)) {
    auto t = std::make_shared<Tables>();
    const std::size_t n = space_.size();
    const std::size_t subsets = std::size_t{1} << n;
    const auto opens = space_.opens();
    const auto images = op.images();
    t->ground = space_.full();
    t->interior.resize(subsets);
    t->closure.resize(subsets);

    // int_gamma(A) = { x ∈ A : x ∈ N ∈ tau and gamma(N) ⊆ A }; N ⊆ gamma(N) ⊆ A.
    for (std::size_t m = 0; m < subsets; ++m) {
      const PointSet a(static_cast<PointSet::Mask>(m));
      PointSet inner;
      for (std::size_t i = 0; i < opens.size(); ++i) {
        if (images[i].subset_of(a)) inner |= opens[i] & a;
      }
      t->interior[m] = inner;
    }
    // cl_gamma(A) = { x : gamma(U) ∩ A ≠ ∅ for every open U ∋ x }.
    for (std::size_t m = 0; m < subsets; ++m) {
      const PointSet a(static_cast<PointSet::Mask>(m));
      PointSet cl;
      for (std::size_t x = 0; x < n; ++x) {
        bool hit_all = true;
        for (std::size_t i = 0; i < opens.size() && hit_all; ++i) {
          if (opens[i].contains(x) && !images[i].intersects(a)) hit_all = false;
        }
        if (hit_all) cl = cl.with(x);
      }
      t->closure[m] = cl;
    }
    for (std::size_t m = 0; m < subsets; ++m) {
      if (t->interior[m].mask() == m) t->family.emplace_back(static_cast<PointSet::Mask>(m));
    }
    std::sort(t->family.begin(), t->family.end(), CanonicalLess{});
    t->op = std::move(op);
    tables_ = std::move(t);
  }

  const FiniteSpace& space() const { return space_; }
  bool is_relative() const { return !tables_->op.has_value(); }

  const GammaOperation& operation() const {
    if (!tables_->op) throw Error(ErrorCode::PreconditionViolated, "a relative context has no operation table");
    return *tables_->op;
  }

  /// The point set this context lives on: X, or the subspace for relative contexts.
  PointSet ground() const { return tables_->ground; }

  PointSet gamma(PointSet open) const {
    const auto idx = space_.index_of_open(open);
    if (!idx) throw Error(ErrorCode::UnknownOpen, "gamma is only defined on open sets", {open});
    return operation().image(*idx);
  }

  PointSet interior(PointSet a) const { return tables_->interior[(a & ground()).mask()]; }
  PointSet closure(PointSet a) const { return tables_->closure[(a & ground()).mask()]; }

  bool is_gamma_open(PointSet a) const { return a.subset_of(ground()) && interior(a) == a; }

  bool is_gamma_closed(PointSet a, ClosedVariant variant) const {
    if (!a.subset_of(ground())) return false;
    return variant == ClosedVariant::jankovic ? is_gamma_open(ground() - a) : closure(a).subset_of(a);
  }

  /// All gamma-open subsets of the ground set, in canonical order.
  std::span<const PointSet> gamma_open_family() const { return tables_->family; }

  std::vector<PointSet> gamma_closed_family(ClosedVariant variant) const {
    std::vector<PointSet> out;
    for_each_subset(ground(), [&](PointSet a) {
      if (is_gamma_closed(a, variant)) out.push_back(a);
    });
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
  }

  /// Union of all gamma-open subsets of s: the largest gamma-open set inside s.
  PointSet largest_gamma_open_within(PointSet s) const {
    PointSet out;
    for (PointSet b : tables_->family) {
      if (b.subset_of(s)) out |= b;
    }
    return out;
  }

 private:
  struct Tables {
    PointSet ground;
    std::vector<PointSet> interior;
    std::vector<PointSet> closure;
    std::vector<PointSet> family;
    std::optional<GammaOperation> op;
  };

  GammaContext(FiniteSpace space, std::shared_ptr<const Tables> tables)
      : space_(std::move(space)), tables_(std::move(tables)) {}

  friend GammaContext relativize(const GammaContext& parent, PointSet subspace);

  FiniteSpace space_;
  std::shared_ptr<const Tables> tables_;
};

/// The relative structure on a nonempty subset of the parent's ground set.
inline GammaContext relativize(const GammaContext& parent, PointSet subspace) {
  if (subspace.empty()) throw Error(ErrorCode::EmptySubspace, "cannot relativize to the empty set");
  if (!subspace.subset_of(parent.ground())) {
    throw Error(ErrorCode::PointOutOfRange, "subspace is not contained in the ground set", {subspace});
  }
  auto t = std::make_shared<GammaContext::Tables>();
  const std::size_t subsets = std::size_t{1} << parent.space().size();
  t->ground = subspace;
  for (PointSet o : parent.gamma_open_family()) t->family.push_back(o & subspace);
  std::sort(t->family.begin(), t->family.end(), CanonicalLess{});
  t->family.erase(std::unique(t->family.begin(), t->family.end()), t->family.end());
  t->interior.resize(subsets);
  t->closure.resize(subsets);
  for_each_subset(subspace, [&](PointSet b) {
    PointSet inner;
    for (PointSet g : t->family) {
      if (g.subset_of(b)) inner |= g;
    }
    t->interior[b.mask()] = inner;
    t->closure[b.mask()] = subspace & parent.closure(b);
  });
  return GammaContext(parent.space(), std::move(t));
}

inline PointSet gamma_interior(const GammaContext& ctx, PointSet a) { return ctx.interior(a); }
inline PointSet gamma_closure(const GammaContext& ctx, PointSet a) { return ctx.closure(a); }
inline bool is_gamma_open(const GammaContext& ctx, PointSet a) { return ctx.is_gamma_open(a); }
inline std::span<const PointSet> gamma_open_family(const GammaContext& ctx) { return ctx.gamma_open_family(); }
inline bool is_gamma_closed(const GammaContext& ctx, PointSet a, ClosedVariant variant = ClosedVariant::jankovic) {
  return ctx.is_gamma_closed(a, variant);
}

struct OperationClass {
  bool monotone = false;
  bool regular = false;
  bool open_ogata = false;
  bool open_as_printed = false;
  bool gamma_open_op = false;

  bool is_open(OpenDirection direction) const {
    return direction == OpenDirection::ogata ? open_ogata : open_as_printed;
  }
};

inline bool is_monotone(const GammaContext& ctx) {
  const auto opens = ctx.space().opens();
  const auto images = ctx.operation().images();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (opens[i].subset_of(opens[j]) && !images[i].subset_of(images[j])) return false;
    }
  }
  return true;
}

/// For open U, V ∋ x there is an open W ∋ x with gamma(W) ⊆ gamma(U) ∩ gamma(V).
inline bool is_regular_operation(const GammaContext& ctx) {
  const auto opens = ctx.space().opens();
  const auto images = ctx.operation().images();
  for (std::size_t x = 0; x < ctx.space().size(); ++x) {
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if (!opens[i].contains(x)) continue;
      for (std::size_t j = i; j < opens.size(); ++j) {
        if (!opens[j].contains(x)) continue;
        const PointSet meet = images[i] & images[j];
        bool found = false;
        for (std::size_t k = 0; k < opens.size() && !found; ++k) {
          found = opens[k].contains(x) && images[k].subset_of(meet);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

inline bool is_open_operation(const GammaContext& ctx, OpenDirection direction) {
  const auto opens = ctx.space().opens();
  const auto images = ctx.operation().images();
  const auto family = ctx.gamma_open_family();
  for (std::size_t x = 0; x < ctx.space().size(); ++x) {
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if (!opens[i].contains(x)) continue;
      const bool found = std::any_of(family.begin(), family.end(), [&](PointSet b) {
        if (!b.contains(x)) return false;
        return direction == OpenDirection::ogata ? b.subset_of(images[i]) : images[i].subset_of(b);
      });
      if (!found) return false;
    }
  }
  return true;
}

/// Every image gamma(V) is itself gamma-open.
inline bool is_gamma_open_operation(const GammaContext& ctx) {
  const auto images = ctx.operation().images();
  return std::all_of(images.begin(), images.end(), [&](PointSet img) { return ctx.is_gamma_open(img); });
}

inline OperationClass classify_operation(const GammaContext& ctx) {
  return {
      .monotone = is_monotone(ctx),
      .regular = is_regular_operation(ctx),
      .open_ogata = is_open_operation(ctx, OpenDirection::ogata),
      .open_as_printed = is_open_operation(ctx, OpenDirection::printed),
      .gamma_open_op = is_gamma_open_operation(ctx),
  };
}

}  // namespace gammatop
