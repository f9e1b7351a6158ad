#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "gammatop/context.hpp"
#include "gammatop/error.hpp"
#include "gammatop/json_io.hpp"
#include "gammatop/morphisms.hpp"
#include "gammatop/pool.hpp"
#include "gammatop/properties.hpp"

namespace gammatop {

enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11, T12, T13, T14, TA, L32, T413 };

enum class InstanceKind { context, map };

/// Which definitional flags a theorem's verdict can depend on.
struct VariantAxes {
  bool closed = false;
  bool open = false;
  bool cover = false;
};

using Instance = std::variant<GammaContext, SpaceMap>;

/// Result of evaluating a conclusion; the witness locates the failure.
struct Conclusion {
  bool holds = true;
  Json witness = nullptr;
};

struct TheoremSpec {
  TheoremId id;
  std::string_view name;
  InstanceKind instance_kind;
  VariantAxes variant_axes;
  std::string_view statement;
  bool (*hypothesis)(const Instance&, const Variants&);
  Conclusion (*conclusion)(const Instance&, const Variants&);
};

namespace detail {

inline const GammaContext& ctx_of(const Instance& inst) { return std::get<GammaContext>(inst); }
inline const SpaceMap& map_of(const Instance& inst) { return std::get<SpaceMap>(inst); }

inline Json violation_json(const FiniteSpace& space, const std::optional<Violation>& v) {
  if (!v) return nullptr;
  return family_to_json(space, *v);
}

inline Conclusion holds() { return {}; }
inline Conclusion fails(Json witness) { return {false, std::move(witness)}; }

inline bool lc(const GammaContext& c, const Variants& v) { return is_gamma_locally_compact(c, v.cover).holds; }

inline Conclusion biconditional(const FiniteSpace& space, bool lhs, bool rhs, const std::optional<Violation>& lhs_bad,
                                const std::optional<Violation>& rhs_bad) {
  if (lhs == rhs) return holds();
  return fails(Json{{"left", lhs}, {"right", rhs}, {"left_violation", violation_json(space, lhs_bad)},
                    {"right_violation", violation_json(space, rhs_bad)}});
}

// -- map theorems -----------------------------------------------------------

inline bool t1_hyp(const Instance& i, const Variants& v) {
  const auto& f = map_of(i);
  return f.is_injective() && is_open_operation(f.codomain(), v.open) && is_gb_continuous(f);
}
inline Conclusion t1_concl(const Instance& i, const Variants& v) {
  const auto& f = map_of(i);
  std::optional<PointSet> bad;
  for_each_subset(f.domain().ground(), [&](PointSet c) {
    if (!bad && is_gamma0_compact(f.domain(), c, v.cover) && !is_gamma0_compact(f.codomain(), f.image(c), v.cover)) {
      bad = c;
    }
  });
  if (!bad) return holds();
  return fails(Json{{"C", set_to_json(f.domain().space(), *bad)}});
}

inline bool closed_map_hyp(const SpaceMap& f, const Variants& v) {
  return is_gb_continuous(f) && is_regular_operation(f.domain()) && is_gamma_open_operation(f.domain()) &&
         is_open_operation(f.codomain(), v.open) && is_gamma_T2(f.codomain()) &&
         is_gamma0_compact_space(f.domain(), v.cover);
}
inline bool t2_hyp(const Instance& i, const Variants& v) {
  const auto& f = map_of(i);
  return f.is_injective() && closed_map_hyp(f, v);
}
inline Conclusion t2_concl(const Instance& i, const Variants& v) {
  const auto& f = map_of(i);
  for (PointSet a : f.domain().gamma_closed_family(v.closed)) {
    if (!f.codomain().is_gamma_closed(f.image(a), v.closed)) {
      return fails(Json{{"closed_set", set_to_json(f.domain().space(), a)},
                        {"image", set_to_json(f.codomain().space(), f.image(a))}});
    }
  }
  return holds();
}

inline bool t3_hyp(const Instance& i, const Variants& v) {
  const auto& f = map_of(i);
  return f.is_bijective() && closed_map_hyp(f, v);
}
inline Conclusion t3_concl(const Instance& i, const Variants&) {
  const auto& f = map_of(i);
  if (is_gb_homeomorphism(f)) return holds();
  return fails(Json{{"inverse_continuous", false}});
}

inline bool t12_hyp(const Instance& i, const Variants& v) {
  const auto& f = map_of(i);
  return f.is_surjective() && is_open_operation(f.codomain(), v.open) && is_gb_open(f) && is_gb_continuous(f) &&
         lc(f.domain(), v);
}
inline Conclusion t12_concl(const Instance& i, const Variants& v) {
  const auto& f = map_of(i);
  const auto result = is_gamma_locally_compact(f.codomain(), v.cover);
  if (result.holds) return holds();
  Json missing = Json::array();
  for (std::size_t y = 0; y < result.witnesses.size(); ++y) {
    if (!result.witnesses[y]) missing.push_back(f.codomain().space().label(y));
  }
  return fails(Json{{"points_without_compact_nbd", missing}});
}

inline bool t413_hyp(const Instance& i, const Variants&) { return is_gb_continuous(map_of(i)); }
inline Conclusion t413_concl(const Instance& i, const Variants&) {
  const auto& f = map_of(i);
  const auto bad = find_closure_image_violation(f);
  if (!bad) return holds();
  return fails(Json{{"A", set_to_json(f.domain().space(), *bad)},
                    {"image_of_closure", set_to_json(f.codomain().space(), f.image(f.domain().closure(*bad)))},
                    {"closure_of_image", set_to_json(f.codomain().space(), f.codomain().closure(f.image(*bad)))}});
}

// -- context theorems -------------------------------------------------------

inline bool t4_hyp(const Instance& i, const Variants& v) {
  const auto& c = ctx_of(i);
  if (!is_regular_operation(c) || !is_open_operation(c, v.open)) return false;
  std::vector<PointSet> compact;
  for_each_subset(c.ground(), [&](PointSet a) {
    if (is_gamma0_compact(c, a, v.cover)) compact.push_back(a);
  });
  for (PointSet a : compact) {
    for (PointSet b : compact) {
      if ((c.closure(a) | c.closure(b)) == c.ground()) return true;
    }
  }
  return false;
}
inline Conclusion t4_concl(const Instance& i, const Variants& v) {
  return is_gamma0_compact_space(ctx_of(i), v.cover) ? holds() : fails(nullptr);
}

inline bool always(const Instance&, const Variants&) { return true; }

inline Conclusion t5_concl(const Instance& i, const Variants& v) {
  const auto& c = ctx_of(i);
  const auto lhs = find_gamma_star_regular_violation(c, v.closed);
  const auto rhs = find_star_regular_by_closures_violation(c, v.closed);
  return biconditional(c.space(), !lhs, !rhs, lhs, rhs);
}

inline bool t6_hyp(const Instance& i, const Variants& v) { return is_gamma0_compact_space(ctx_of(i), v.cover); }
inline Conclusion lc_concl(const Instance& i, const Variants& v) {
  const auto& c = ctx_of(i);
  const auto result = is_gamma_locally_compact(c, v.cover);
  if (result.holds) return holds();
  Json missing = Json::array();
  for (std::size_t x : c.ground().points()) {
    if (!result.witnesses[x]) missing.push_back(c.space().label(x));
  }
  return fails(Json{{"points_without_compact_nbd", missing}});
}

inline bool hereditary_hyp(const Instance& i, const Variants& v) {
  const auto& c = ctx_of(i);
  return is_regular_operation(c) && lc(c, v);
}
inline Conclusion hereditary_concl(const Instance& i, const Variants& v) {
  const auto& c = ctx_of(i);
  for (PointSet a : c.gamma_closed_family(v.closed)) {
    if (a.empty()) continue;
    if (!lc(relativize(c, a), v)) return fails(Json{{"closed_subspace", set_to_json(c.space(), a)}});
  }
  return holds();
}

inline bool t8_hyp(const Instance& i, const Variants& v) {
  const auto& c = ctx_of(i);
  return is_regular_operation(c) && is_open_operation(c, v.open) && is_gamma_T2(c) && lc(c, v);
}
inline Conclusion t8_concl(const Instance& i, const Variants& v) {
  const auto& c = ctx_of(i);
  for (std::size_t x : c.ground().points()) {
    std::optional<PointSet> bad;
    for_each_subset(c.ground(), [&](PointSet u) {
      if (bad || !c.interior(u).contains(x)) return;
      bool found = false;
      for_each_subset(u, [&](PointSet w) {
        if (!found && c.interior(w).contains(x) && is_gamma0_compact_subspace(c, w, v.cover)) found = true;
      });
      if (!found) bad = u;
    });
    if (bad) return fails(Json{{"x", c.space().label(x)}, {"U", set_to_json(c.space(), *bad)}});
  }
  return holds();
}

inline bool t9_hyp(const Instance& i, const Variants& v) { return lc(ctx_of(i), v); }
inline Conclusion interior_compact_concl(const Instance& i, const Variants& v) {
  return every_point_interior_to_compact(ctx_of(i), v.cover) ? holds() : fails(nullptr);
}

inline bool t2_space_hyp(const GammaContext& c) {
  return is_regular_operation(c) && is_gamma_open_operation(c) && is_gamma_T2(c);
}
inline bool t10_hyp(const Instance& i, const Variants& v) {
  const auto& c = ctx_of(i);
  return t2_space_hyp(c) && every_point_interior_to_compact(c, v.cover);
}
inline bool t11_hyp(const Instance& i, const Variants&) { return t2_space_hyp(ctx_of(i)); }
inline Conclusion t11_concl(const Instance& i, const Variants& v) {
  const auto& c = ctx_of(i);
  const bool lhs = lc(c, v);
  const bool rhs = every_point_interior_to_compact(c, v.cover);
  if (lhs == rhs) return holds();
  return fails(Json{{"locally_compact", lhs}, {"interior_to_compact", rhs}});
}

inline Conclusion t14_concl(const Instance& i, const Variants& v) {
  const auto& c = ctx_of(i);
  const auto lhs = find_gamma_normal_violation(c, v.closed);
  const auto rhs = find_normal_by_closures_violation(c, v.closed);
  return biconditional(c.space(), !lhs, !rhs, lhs, rhs);
}

inline Conclusion ta_concl(const Instance& i, const Variants& v) {
  const auto& c = ctx_of(i);
  const auto lhs = find_gamma_normal_violation(c, v.closed);
  const auto rhs = find_shrinkability_violation(c, v.closed);
  return biconditional(c.space(), !lhs, !rhs, lhs, rhs);
}

inline Conclusion l32_concl(const Instance& i, const Variants&) {
  const auto& c = ctx_of(i);
  for (PointSet a : c.gamma_open_family()) {
    std::optional<PointSet> bad;
    for_each_subset(c.ground(), [&](PointSet b) {
      if (!bad && !(a & c.closure(b)).subset_of(c.closure(a & b))) bad = b;
    });
    if (bad) return fails(Json{{"A", set_to_json(c.space(), a)}, {"B", set_to_json(c.space(), *bad)}});
  }
  return holds();
}

}  // namespace detail

/// Every audited statement, one entry each.
inline std::span<const TheoremSpec> theorem_registry() {
  using enum InstanceKind;
  using namespace detail;
  static const std::array<TheoremSpec, 17> registry{{
      {TheoremId::T1, "T1", map, {false, true, true},
       "a (gamma,beta)-continuous injection with beta open maps gamma0-compact sets to beta0-compact sets",
       t1_hyp, t1_concl},
      {TheoremId::T2, "T2", map, {true, true, true},
       "a (gamma,beta)-continuous injection from a gamma0-compact space into a beta-T2 space, with gamma regular "
       "and gamma-open and beta open, is (gamma,beta)-closed",
       t2_hyp, t2_concl},
      {TheoremId::T3, "T3", map, {true, true, true},
       "a (gamma,beta)-continuous bijection from a gamma0-compact space onto a beta-T2 space, with gamma regular "
       "and gamma-open and beta open, is a (gamma,beta)-homeomorphism",
       t3_hyp, t3_concl},
      {TheoremId::T4, "T4", context, {false, true, true},
       "with gamma regular and open, X = cl(A) u cl(B) for gamma0-compact A, B makes X gamma0-compact", t4_hyp,
       t4_concl},
      {TheoremId::T5, "T5", context, {true, false, false},
       "gamma*-regular iff points and gamma-closed sets separate by gamma-open sets with disjoint gamma-closures",
       always, t5_concl},
      {TheoremId::T6, "T6", context, {false, false, true}, "every gamma0-compact space is gamma-locally compact",
       t6_hyp, lc_concl},
      {TheoremId::T7, "T7", context, {true, false, true},
       "with gamma regular, gamma-closed subspaces of a gamma-locally compact space are gamma-locally compact",
       hereditary_hyp, hereditary_concl},
      {TheoremId::T8, "T8", context, {true, true, true},
       "in a gamma-locally compact gamma-T2 space with gamma regular and open, every gamma-nbd of x contains a "
       "gamma0-compact gamma-nbd of x",
       t8_hyp, t8_concl},
      {TheoremId::T9, "T9", context, {false, false, true},
       "in a gamma-locally compact space every point is a gamma-interior point of a gamma0-compact subspace", t9_hyp,
       interior_compact_concl},
      {TheoremId::T10, "T10", context, {true, true, true},
       "in a gamma-T2 space with gamma regular and gamma-open, if every point is a gamma-interior point of a "
       "gamma0-compact subspace then the space is gamma-locally compact",
       t10_hyp, lc_concl},
      {TheoremId::T11, "T11", context, {true, true, true},
       "in a gamma-T2 space with gamma regular and gamma-open, gamma-local compactness is equivalent to every point "
       "being a gamma-interior point of a gamma0-compact subspace",
       t11_hyp, t11_concl},
      {TheoremId::T12, "T12", map, {false, true, true},
       "a (gamma,beta)-open (gamma,beta)-continuous surjection with beta open carries gamma-local compactness to "
       "the codomain",
       t12_hyp, t12_concl},
      {TheoremId::T13, "T13", context, {true, false, true},
       "with gamma regular, every gamma-closed subspace of a gamma-locally compact space is gamma-locally compact",
       hereditary_hyp, hereditary_concl},
      {TheoremId::T14, "T14", context, {true, false, false},
       "gamma-normal iff disjoint gamma-closed sets separate by gamma-open sets with disjoint gamma-closures", always,
       t14_concl},
      {TheoremId::TA, "TA", context, {true, false, false},
       "gamma-normal iff every gamma-open U around a gamma-closed A contains cl_gamma(V) for a gamma-open V "
       "around A",
       always, ta_concl},
      {TheoremId::L32, "L32", context, {false, false, false},
       "for gamma-open A and any B, A n cl_gamma(B) is inside cl_gamma(A n B)", always, l32_concl},
      {TheoremId::T413, "T413", map, {false, false, false},
       "a (gamma,beta)-continuous map satisfies f(cl_gamma(A)) inside cl_beta(f(A))", t413_hyp, t413_concl},
  }};
  return registry;
}

inline const TheoremSpec& find_theorem(TheoremId id) {
  for (const auto& t : theorem_registry()) {
    if (t.id == id) return t;
  }
  throw Error(ErrorCode::UnknownTheorem, "theorem not registered");
}

inline const TheoremSpec& find_theorem(std::string_view name) {
  for (const auto& t : theorem_registry()) {
    if (t.name == name) return t;
  }
  throw Error(ErrorCode::UnknownTheorem, "no theorem named '" + std::string(name) + "'");
}

inline Json variants_to_json(const Variants& v) {
  return Json{{"closed", std::string(to_string(v.closed))},
              {"open_op", std::string(to_string(v.open))},
              {"cover_mode", std::string(to_string(v.cover))}};
}

inline Variants variants_from_json(const Json& j) {
  Variants v;
  v.closed = j.at("closed").get<std::string>() == "kasahara" ? ClosedVariant::kasahara : ClosedVariant::jankovic;
  v.open = j.at("open_op").get<std::string>() == "printed" ? OpenDirection::printed : OpenDirection::ogata;
  v.cover = j.at("cover_mode").get<std::string>() == "A" ? CoverMode::target : CoverMode::whole_space;
  return v;
}

/// Counterexample lists are truncated to this many entries; failure_total keeps the full count.
inline constexpr std::size_t kMaxReportedFailures = 20;

struct AuditVerdict {
  TheoremId theorem = TheoremId::T1;
  Variants variants;
  std::size_t n = 0;
  std::string pool;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t scanned = 0;
  std::uint64_t hyp_held = 0;
  std::uint64_t failure_total = 0;
  std::vector<Json> failures;

  Json to_json() const {
    const auto& spec = find_theorem(theorem);
    Json out;
    out["theorem"] = std::string(spec.name);
    out["statement"] = std::string(spec.statement);
    out["variants"] = variants_to_json(variants);
    out["n"] = n;
    out["pool"] = pool;
    out["seed"] = seed;
    out["scanned"] = scanned;
    out["hyp_held"] = hyp_held;
    out["failures"] = failures;
    out["failure_total"] = failure_total;
    return out;
  }
};

namespace detail {

struct Partial {
  std::uint64_t scanned = 0;
  std::uint64_t hyp_held = 0;
  std::uint64_t failure_total = 0;
  std::vector<Json> failures;
};

/// Splits [0, total) into contiguous ranges, runs `scan(begin, end)` on each
/// (in parallel when jobs > 1) and merges the partial results in range order.
template <class Scan>
Partial sweep(std::uint64_t total, std::size_t jobs, Scan scan) {
  jobs = std::max<std::size_t>(1, jobs);
  const std::size_t chunks = total == 0 ? 1 : static_cast<std::size_t>(std::min<std::uint64_t>(total, jobs * 4));
  std::vector<Partial> parts(chunks);
  auto range = [&](std::size_t c) {
    return std::pair<std::uint64_t, std::uint64_t>{total * c / chunks, total * (c + 1) / chunks};
  };
  if (jobs == 1) {
    for (std::size_t c = 0; c < chunks; ++c) parts[c] = scan(range(c).first, range(c).second);
  } else {
    std::vector<std::jthread> workers;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t c = next++; c < chunks; c = next++) parts[c] = scan(range(c).first, range(c).second);
      });
    }
  }
  Partial merged;
  for (auto& p : parts) {
    merged.scanned += p.scanned;
    merged.hyp_held += p.hyp_held;
    merged.failure_total += p.failure_total;
    for (auto& f : p.failures) {
      if (merged.failures.size() < kMaxReportedFailures) merged.failures.push_back(std::move(f));
    }
  }
  return merged;
}

inline void record(Partial& part, const TheoremSpec& spec, const Instance& inst, const Variants& v,
                   std::uint64_t index, Json (*serialize)(const Instance&)) {
  ++part.scanned;
  if (!spec.hypothesis(inst, v)) return;
  ++part.hyp_held;
  Conclusion c = spec.conclusion(inst, v);
  if (c.holds) return;
  ++part.failure_total;
  if (part.failures.size() < kMaxReportedFailures) {
    part.failures.push_back(Json{{"index", index}, {"instance", serialize(inst)}, {"witness", std::move(c.witness)}});
  }
}

inline Json serialize_context(const Instance& inst) { return context_to_json(ctx_of(inst)); }
inline Json serialize_map(const Instance& inst) { return map_to_json(map_of(inst)); }

}  // namespace detail

/// Largest point count accepted for context-kind and map-kind audits.
inline constexpr std::size_t kMaxContextAuditPoints = 4;
inline constexpr std::size_t kMaxMapAuditPoints = 3;
/// Map audits with exhaustive pools are scanned exhaustively up to this size;
/// above it the context pool on each side is the builtins.
inline constexpr std::size_t kExhaustiveMapPoolLimit = 2;

/// The context pool a theorem's sweep actually uses at size n.
inline PoolSpec effective_pool(const TheoremSpec& spec, std::size_t n, PoolSpec pool) {
  if (spec.instance_kind == InstanceKind::map && pool.kind == PoolKind::exhaustive && n > kExhaustiveMapPoolLimit) {
    pool.kind = PoolKind::builtins;
  }
  return pool;
}

/// Scans every instance on exactly n points, evaluating hypothesis and,
/// where it holds, conclusion. Deterministic for fixed arguments regardless
/// of `jobs`.
inline AuditVerdict audit(TheoremId id, std::size_t n, const Variants& variants, PoolSpec pool = {},
                          std::size_t jobs = 1) {
  const TheoremSpec& spec = find_theorem(id);
  const std::size_t limit = spec.instance_kind == InstanceKind::map ? kMaxMapAuditPoints : kMaxContextAuditPoints;
  if (n == 0 || n > limit) {
    throw Error(ErrorCode::SizeTooLarge, std::string(spec.name) + " audits support 1 to " + std::to_string(limit) +
                                             " points");
  }
  const ContextPool contexts(n, effective_pool(spec, n, pool));
  AuditVerdict verdict;
  verdict.theorem = id;
  verdict.variants = variants;
  verdict.n = n;
  verdict.pool = contexts.describe();
  verdict.seed = pool.seed;

  detail::Partial result;
  if (spec.instance_kind == InstanceKind::context) {
    result = detail::sweep(contexts.size(), jobs, [&](std::uint64_t begin, std::uint64_t end) {
      detail::Partial part;
      for (std::uint64_t i = begin; i < end; ++i) {
        detail::record(part, spec, Instance(contexts.at(i)), variants, i, detail::serialize_context);
      }
      return part;
    });
  } else {
    std::vector<GammaContext> pool_contexts;
    for (std::uint64_t i = 0; i < contexts.size(); ++i) pool_contexts.push_back(contexts.at(i));
    std::vector<std::vector<std::size_t>> tables;
    for_each_point_function(n, n, MapFilter::all, [&](const std::vector<std::size_t>& t) { tables.push_back(t); });
    const std::uint64_t c = pool_contexts.size();
    const std::uint64_t m = tables.size();
    result = detail::sweep(c * c * m, jobs, [&](std::uint64_t begin, std::uint64_t end) {
      detail::Partial part;
      for (std::uint64_t i = begin; i < end; ++i) {
        const std::uint64_t map_index = i % m;
        const std::uint64_t cod = (i / m) % c;
        const std::uint64_t dom = i / (m * c);
        Instance inst(SpaceMap(pool_contexts[dom], pool_contexts[cod], tables[map_index]));
        detail::record(part, spec, inst, variants, i, detail::serialize_map);
      }
      return part;
    });
  }
  verdict.scanned = result.scanned;
  verdict.hyp_held = result.hyp_held;
  verdict.failure_total = result.failure_total;
  verdict.failures = std::move(result.failures);
  return verdict;
}

/// Variant flags pinned by the caller; unpinned axes are swept.
struct PinnedVariants {
  std::optional<ClosedVariant> closed;
  std::optional<OpenDirection> open;
  std::optional<CoverMode> cover;
};

/// The variant combinations a theorem is audited under: every value of each
/// axis it is sensitive to (unless pinned), defaults elsewhere.
inline std::vector<Variants> variant_combinations(const TheoremSpec& spec, const PinnedVariants& pinned = {}) {
  std::vector<ClosedVariant> closed{pinned.closed.value_or(ClosedVariant::jankovic)};
  std::vector<OpenDirection> open{pinned.open.value_or(OpenDirection::ogata)};
  std::vector<CoverMode> cover{pinned.cover.value_or(CoverMode::whole_space)};
  if (spec.variant_axes.closed && !pinned.closed) closed.push_back(ClosedVariant::kasahara);
  if (spec.variant_axes.open && !pinned.open) open.push_back(OpenDirection::printed);
  if (spec.variant_axes.cover && !pinned.cover) cover.push_back(CoverMode::target);
  std::vector<Variants> out;
  for (auto c : closed) {
    for (auto o : open) {
      for (auto v : cover) out.push_back({c, o, v});
    }
  }
  return out;
}

inline std::vector<AuditVerdict> audit_sweep(TheoremId id, std::size_t n, const PinnedVariants& pinned = {},
                                             PoolSpec pool = {}, std::size_t jobs = 1) {
  std::vector<AuditVerdict> out;
  for (const Variants& v : variant_combinations(find_theorem(id), pinned)) out.push_back(audit(id, n, v, pool, jobs));
  return out;
}

/// Reloads a serialized failure and re-evaluates it: true iff the hypothesis
/// still holds and the conclusion still fails under the given variants.
inline bool recheck_failure(TheoremId id, const Variants& variants, const Json& failure) {
  const TheoremSpec& spec = find_theorem(id);
  const Json& inst = failure.at("instance");
  const Instance instance = spec.instance_kind == InstanceKind::context ? Instance(context_from_json(inst))
                                                                         : Instance(map_from_json(inst));
  return spec.hypothesis(instance, variants) && !spec.conclusion(instance, variants).holds;
}

}  // namespace gammatop
