#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammatop/context.hpp"
#include "gammatop/error.hpp"
#include "gammatop/json_io.hpp"
#include "gammatop/pool.hpp"
#include "gammatop/properties.hpp"

namespace gammatop {

enum class Property {
  normal,
  gamma_normal,
  regular,
  gamma_star_regular,
  gamma_T2,
  T2,
  op_regular,
  op_open,
  gamma_open_op,
  gamma_locally_compact,
};

struct PropertyName {
  Property property;
  std::string_view name;
};

inline constexpr PropertyName kPropertyNames[] = {
    {Property::normal, "normal"},
    {Property::gamma_normal, "gamma_normal"},
    {Property::regular, "regular"},
    {Property::gamma_star_regular, "gamma_star_regular"},
    {Property::gamma_T2, "gamma_T2"},
    {Property::T2, "T2"},
    {Property::op_regular, "op_regular"},
    {Property::op_open, "op_open"},
    {Property::gamma_open_op, "gamma_open_op"},
    {Property::gamma_locally_compact, "gamma_locally_compact"},
};

constexpr std::string_view to_string(Property p) {
  for (const auto& entry : kPropertyNames) {
    if (entry.property == p) return entry.name;
  }
  return "?";
}

inline bool evaluate_property(const GammaContext& ctx, Property p, const Variants& v) {
  switch (p) {
    case Property::normal: return is_normal(ctx.space());
    case Property::gamma_normal: return is_gamma_normal(ctx, v.closed);
    case Property::regular: return is_regular(ctx.space());
    case Property::gamma_star_regular: return is_gamma_star_regular(ctx, v.closed);
    case Property::gamma_T2: return is_gamma_T2(ctx);
    case Property::T2: return is_T2(ctx.space());
    case Property::op_regular: return is_regular_operation(ctx);
    case Property::op_open: return is_open_operation(ctx, v.open);
    case Property::gamma_open_op: return is_gamma_open_operation(ctx);
    case Property::gamma_locally_compact: return is_gamma_locally_compact(ctx, v.cover).holds;
  }
  return false;
}

struct Literal {
  Property property;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct SearchQuery {
  std::vector<Literal> literals;
  std::size_t n = 3;
  PoolSpec pool;
  Variants variants;
};

/// Parses "lit,lit,..." where each literal is a property name optionally
/// prefixed with '!'. Whitespace around literals is ignored.
inline std::vector<Literal> parse_literals(std::string_view text) {
  std::vector<Literal> out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  while (true) {
    const auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    Literal lit{};
    if (!item.empty() && item.front() == '!') {
      lit.negated = true;
      item = trim(item.substr(1));
    }
    bool known = false;
    for (const auto& entry : kPropertyNames) {
      if (entry.name == item) {
        lit.property = entry.property;
        known = true;
      }
    }
    if (!known) throw Error(ErrorCode::ParseError, "unknown property '" + std::string(item) + "' in query");
    out.push_back(lit);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

inline std::string literals_to_string(const std::vector<Literal>& literals) {
  std::string out;
  for (const auto& lit : literals) {
    if (!out.empty()) out += ',';
    if (lit.negated) out += '!';
    out += to_string(lit.property);
  }
  return out;
}

struct SearchResult {
  std::optional<GammaContext> witness;
  /// Instances examined, including the witness when one is found.
  std::uint64_t scanned = 0;
  /// Size of the whole instance space for the query's bound.
  std::uint64_t instance_space = 0;

  bool found() const { return witness.has_value(); }
};

/// First (space, operation) instance, by increasing point count and then in
/// pool order, that satisfies every literal; otherwise an exhaustion report.
inline SearchResult find_counterexample(const SearchQuery& query) {
  if (query.n == 0 || query.n > kMaxEnumeratedPoints) {
    throw Error(ErrorCode::SizeTooLarge, "searches support 1 to 4 points");
  }
  SearchResult result;
  std::vector<ContextPool> pools;
  for (std::size_t k = 1; k <= query.n; ++k) {
    pools.emplace_back(k, query.pool);
    result.instance_space += pools.back().size();
  }
  for (const auto& pool : pools) {
    for (std::uint64_t i = 0; i < pool.size(); ++i) {
      GammaContext ctx = pool.at(i);
      ++result.scanned;
      bool all = true;
      for (const auto& lit : query.literals) {
        if (evaluate_property(ctx, lit.property, query.variants) == lit.negated) {
          all = false;
          break;
        }
      }
      if (all) {
        result.witness = std::move(ctx);
        return result;
      }
    }
  }
  return result;
}

}  // namespace gammatop
