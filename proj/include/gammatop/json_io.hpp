#pragma once

// JSON schemas shared by every command:
//
//   space:     {"points": ["a","b","c"], "opens": [[], ["a"], ..., ["a","b","c"]]}
//   operation: {"kind": "identity" | "closure" | "int-closure"}
//              {"kind": "pivot", "point": "b"}
//              {"kind": "table", "entries": [{"open": ["a"], "image": ["a","c"]}, ...]}
//   context:   {"space": <space>, "gamma": <operation>}
//   map:       {"domain": <context>, "codomain": <context>, "table": {"a": "x", ...}}
//
// Sets are arrays of point labels in point order; families are in canonical order.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gammatop/context.hpp"
#include "gammatop/error.hpp"
#include "gammatop/morphisms.hpp"
#include "gammatop/operation.hpp"
#include "gammatop/space.hpp"

namespace gammatop {

using Json = nlohmann::ordered_json;

inline Json set_to_json(const FiniteSpace& space, PointSet s) {
  Json out = Json::array();
  for (std::size_t p : s.points()) out.push_back(space.label(p));
  return out;
}

inline Json family_to_json(const FiniteSpace& space, std::span<const PointSet> family) {
  Json out = Json::array();
  for (PointSet s : family) out.push_back(set_to_json(space, s));
  return out;
}

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::size_t point_index(const std::vector<std::string>& labels, const Json& label) {
  if (!label.is_string()) throw Error(ErrorCode::ParseError, "point labels must be strings");
  const auto& name = label.get_ref<const std::string&>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == name) return i;
  }
  throw Error(ErrorCode::PointOutOfRange, "unknown point '" + name + "'");
}

}  // namespace detail

inline PointSet set_from_json(const std::vector<std::string>& labels, const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "a set must be an array of point labels");
  PointSet out;
  for (const auto& label : j) out = out.with(detail::point_index(labels, label));
  return out;
}

inline Json space_to_json(const FiniteSpace& space) {
  Json out;
  out["points"] = space.labels();
  out["opens"] = family_to_json(space, space.opens());
  return out;
}

inline FiniteSpace space_from_json(const Json& j) {
  const Json& points = detail::require(j, "points");
  const Json& opens = detail::require(j, "opens");
  if (!points.is_array() || !opens.is_array()) throw Error(ErrorCode::ParseError, "'points' and 'opens' must be arrays");
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (!p.is_string()) throw Error(ErrorCode::ParseError, "point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  if (labels.empty() || labels.size() > kMaxPoints) {
    throw Error(ErrorCode::SizeTooLarge, "a space needs between 1 and " + std::to_string(kMaxPoints) + " points");
  }
  std::vector<PointSet> family;
  for (const auto& s : opens) family.push_back(set_from_json(labels, s));
  const std::size_t n = labels.size();
  return validate_space(n, family, std::move(labels));
}

inline Json operation_to_json(const FiniteSpace& space, const GammaOperation& op) {
  Json out;
  const auto& tag = op.tag();
  out["kind"] = std::string(to_string(tag.kind));
  if (tag.kind == OperationKind::pivot) {
    out["point"] = space.label(tag.pivot);
  } else if (tag.kind == OperationKind::custom) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < space.opens().size(); ++i) {
      entries.push_back(Json{{"open", set_to_json(space, space.opens()[i])}, {"image", set_to_json(space, op.image(i))}});
    }
    out["entries"] = std::move(entries);
  }
  return out;
}

inline GammaOperation operation_from_json(const FiniteSpace& space, const Json& j) {
  const Json& kind = detail::require(j, "kind");
  if (!kind.is_string()) throw Error(ErrorCode::ParseError, "'kind' must be a string");
  const auto& k = kind.get_ref<const std::string&>();
  if (k == "identity") return make_operation(space, OperationTag{OperationKind::identity});
  if (k == "closure") return make_operation(space, OperationTag{OperationKind::closure});
  if (k == "int-closure") return make_operation(space, OperationTag{OperationKind::int_closure});
  if (k == "pivot") {
    const Json& point = detail::require(j, "point");
    if (!point.is_string()) throw Error(ErrorCode::ParseError, "pivot point must be a label");
    const auto& name = point.get_ref<const std::string&>();
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (space.label(i) == name) return make_operation(space, OperationTag{OperationKind::pivot, i});
    }
    throw Error(ErrorCode::PivotNotInSpace, "pivot point '" + name + "' is not in the space");
  }
  if (k == "table") {
    const Json& entries = detail::require(j, "entries");
    if (!entries.is_array()) throw Error(ErrorCode::ParseError, "'entries' must be an array");
    std::vector<std::pair<PointSet, PointSet>> pairs;
    for (const auto& e : entries) {
      pairs.emplace_back(set_from_json(space.labels(), detail::require(e, "open")),
                         set_from_json(space.labels(), detail::require(e, "image")));
    }
    return make_operation(space, pairs);
  }
  throw Error(ErrorCode::ParseError, "unknown operation kind '" + k + "'");
}

inline Json context_to_json(const GammaContext& ctx) {
  return Json{{"space", space_to_json(ctx.space())}, {"gamma", operation_to_json(ctx.space(), ctx.operation())}};
}

inline GammaContext context_from_json(const Json& j) {
  FiniteSpace space = space_from_json(detail::require(j, "space"));
  GammaOperation op = operation_from_json(space, detail::require(j, "gamma"));
  return GammaContext(std::move(space), std::move(op));
}

inline Json map_to_json(const SpaceMap& f) {
  Json table = Json::object();
  for (std::size_t x = 0; x < f.table().size(); ++x) {
    table[f.domain().space().label(x)] = f.codomain().space().label(f(x));
  }
  return Json{{"domain", context_to_json(f.domain())}, {"codomain", context_to_json(f.codomain())}, {"table", table}};
}

inline SpaceMap map_from_json(const Json& j) {
  GammaContext domain = context_from_json(detail::require(j, "domain"));
  GammaContext codomain = context_from_json(detail::require(j, "codomain"));
  const Json& table = detail::require(j, "table");
  if (!table.is_object()) throw Error(ErrorCode::ParseError, "map 'table' must be an object");
  const std::size_t n = domain.space().size();
  std::vector<std::size_t> images(n);
  std::vector<bool> assigned(n, false);
  for (const auto& [key, value] : table.items()) {
    const std::size_t x = detail::point_index(domain.space().labels(), Json(key));
    images[x] = detail::point_index(codomain.space().labels(), value);
    assigned[x] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!assigned[x]) throw Error(ErrorCode::PointOutOfRange, "map does not assign point '" + domain.space().label(x) + "'");
  }
  return SpaceMap(std::move(domain), std::move(codomain), std::move(images));
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace gammatop
