#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>

#include "gammatop/audit.hpp"
#include "gammatop/context.hpp"
#include "gammatop/json_io.hpp"
#include "gammatop/morphisms.hpp"
#include "gammatop/properties.hpp"

namespace gammatop {

/// "{a, c}" style rendering for text reports.
inline std::string format_set(const FiniteSpace& space, PointSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p : s.points()) {
    if (!first) out += ", ";
    out += space.label(p);
    first = false;
  }
  return out + "}";
}

inline std::string format_family(const FiniteSpace& space, std::span<const PointSet> family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ", ";
    out += format_set(space, family[i]);
  }
  return out + "}";
}

/// Kasahara and Jankovic gamma-closedness agree on every subset.
inline bool closed_variants_agree(const GammaContext& ctx) {
  bool agree = true;
  for_each_subset(ctx.ground(), [&](PointSet a) {
    agree = agree && ctx.is_gamma_closed(a, ClosedVariant::jankovic) == ctx.is_gamma_closed(a, ClosedVariant::kasahara);
  });
  return agree;
}

inline Json analyze_context(const GammaContext& ctx, const Variants& v) {
  const FiniteSpace& space = ctx.space();
  const auto cls = classify_operation(ctx);
  const auto local = is_gamma_locally_compact(ctx, v.cover);

  Json props;
  props["T2"] = is_T2(space);
  props["regular"] = is_regular(space);
  props["normal"] = is_normal(space);
  props["gamma_T2"] = is_gamma_T2(ctx);
  props["gamma_star_regular"] = is_gamma_star_regular(ctx, v.closed);
  props["gamma_normal"] = is_gamma_normal(ctx, v.closed);
  props["gamma0_compact"] = is_gamma0_compact_space(ctx, v.cover);
  props["gamma_locally_compact"] = local.holds;
  props["op_monotone"] = cls.monotone;
  props["op_regular"] = cls.regular;
  props["op_open"] = cls.is_open(v.open);
  props["op_open_ogata"] = cls.open_ogata;
  props["op_open_printed"] = cls.open_as_printed;
  props["gamma_open_op"] = cls.gamma_open_op;
  props["closed_variants_agree"] = closed_variants_agree(ctx);

  Json nbds = Json::object();
  Json compact = Json::object();
  for (std::size_t x = 0; x < space.size(); ++x) {
    nbds[space.label(x)] = family_to_json(space, gamma_nbd_system(ctx, x).gamma_open_nbds);
    compact[space.label(x)] = local.witnesses[x] ? set_to_json(space, *local.witnesses[x]) : Json(nullptr);
  }
  Json witnesses;
  witnesses["gamma_nbd_systems"] = std::move(nbds);
  witnesses["locally_compact"] = std::move(compact);
  witnesses["gamma_T2_violation"] = detail::violation_json(space, find_gamma_T2_violation(ctx));
  witnesses["gamma_star_regular_violation"] =
      detail::violation_json(space, find_gamma_star_regular_violation(ctx, v.closed));
  witnesses["gamma_normal_violation"] = detail::violation_json(space, find_gamma_normal_violation(ctx, v.closed));

  Json out;
  out["space"] = space_to_json(space);
  out["gamma"] = operation_to_json(space, ctx.operation());
  out["variants"] = variants_to_json(v);
  out["gamma_open_family"] = family_to_json(space, ctx.gamma_open_family());
  out["gamma_closed_family"] = family_to_json(space, ctx.gamma_closed_family(v.closed));
  out["properties"] = std::move(props);
  out["witnesses"] = std::move(witnesses);
  return out;
}

inline Json analyze_map(const SpaceMap& f, const Variants& v) {
  const bool continuous = is_gb_continuous(f);
  Json props;
  props["injective"] = f.is_injective();
  props["surjective"] = f.is_surjective();
  props["bijective"] = f.is_bijective();
  props["gb_continuous"] = continuous;
  props["gb_open"] = is_gb_open(f);
  props["gb_closed"] = is_gb_closed(f, v.closed);
  props["gb_homeomorphism"] = is_gb_homeomorphism(f);
  props["closure_image_lemma"] = continuous ? Json(closure_image_lemma(f)) : Json(nullptr);
  Json out = map_to_json(f);
  out["variants"] = variants_to_json(v);
  out["properties"] = std::move(props);
  return out;
}

namespace detail {

inline bool is_label_set(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (!e.is_string()) return false;
  }
  return true;
}

/// Label arrays render as {a, c}; arrays of label arrays as {{a}, {a, c}}.
inline std::string render_value(const Json& j) {
  if (is_label_set(j) && !j.empty()) {
    std::string out = "{";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].get<std::string>();
    return out + "}";
  }
  if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& e) { return is_label_set(e); })) {
    std::string out = "{";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + render_value(j[i]);
    return out + "}";
  }
  if (j.is_array() && j.empty()) return "{}";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace detail

/// Renders a JSON report as indented "key: value" lines.
inline void render_text(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_text(os, value, depth + 1);
    } else {
      os << pad << key << ": " << detail::render_value(value) << "\n";
    }
  }
}

inline std::string render_text(const Json& j) {
  std::ostringstream os;
  render_text(os, j, 0);
  return os.str();
}

}  // namespace gammatop
