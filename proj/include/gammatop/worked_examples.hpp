#pragma once

// Reference context: X = {a, b, c} with tau = {∅, X, {a}, {b}, {a,b}, {a,c}}
// and the pivot operation at b (gamma(A) = A when b ∈ A, cl(A) otherwise).
// A fixed list of published claims about this context is recomputed and each
// one is marked as agreeing or not.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gammatop/context.hpp"
#include "gammatop/json_io.hpp"
#include "gammatop/properties.hpp"
#include "gammatop/report.hpp"

namespace gammatop {

inline FiniteSpace reference_space() {
  const PointSet a = PointSet::singleton(0);
  const PointSet b = PointSet::singleton(1);
  const PointSet c = PointSet::singleton(2);
  const PointSet opens[] = {PointSet{}, a | b | c, a, b, a | b, a | c};
  return validate_space(3, opens);
}

inline GammaContext reference_context() {
  FiniteSpace space = reference_space();
  GammaOperation op = make_operation(space, OperationTag{OperationKind::pivot, 1});
  return GammaContext(std::move(space), std::move(op));
}

struct ClaimCheck {
  std::string example;
  std::string claim;
  Json printed;
  Json computed;
  bool agrees = false;
};

struct WorkedExamplesReport {
  GammaContext context = reference_context();
  std::vector<ClaimCheck> claims;
  std::vector<std::string> flags;
  bool gamma_normal_jankovic = false;
  bool gamma_normal_kasahara = false;
  bool normal = false;
  LocalCompactness local;

  Json to_json() const {
    const FiniteSpace& space = context.space();
    Json nbds = Json::object();
    Json witnesses = Json::object();
    for (std::size_t x = 0; x < space.size(); ++x) {
      nbds[space.label(x)] = family_to_json(space, gamma_nbd_system(context, x).gamma_open_nbds);
      witnesses[space.label(x)] = local.witnesses[x] ? set_to_json(space, *local.witnesses[x]) : Json(nullptr);
    }
    Json claim_list = Json::array();
    for (const auto& c : claims) {
      claim_list.push_back(Json{{"example", c.example},
                                {"claim", c.claim},
                                {"printed", c.printed},
                                {"computed", c.computed},
                                {"agrees", c.agrees}});
    }
    Json out;
    out["space"] = space_to_json(space);
    out["gamma"] = operation_to_json(space, context.operation());
    out["gamma_open_family"] = family_to_json(space, context.gamma_open_family());
    out["gamma_nbd_systems"] = std::move(nbds);
    out["gamma_locally_compact"] = Json{{"holds", local.holds}, {"witnesses", std::move(witnesses)}};
    out["normal"] = normal;
    out["gamma_normal"] = Json{{"jankovic", gamma_normal_jankovic}, {"kasahara", gamma_normal_kasahara}};
    out["claims"] = std::move(claim_list);
    out["flags"] = flags;
    return out;
  }

  std::string to_text() const {
    const FiniteSpace& space = context.space();
    std::string out;
    out += "space: " + format_family(space, space.opens()) + " on " + format_set(space, space.full()) + "\n";
    out += "gamma: pivot at b\n";
    out += "gamma-open family: " + format_family(space, context.gamma_open_family()) + "\n";
    for (std::size_t x = 0; x < space.size(); ++x) {
      out += "gamma-nbd system at " + space.label(x) + ": " +
             format_family(space, gamma_nbd_system(context, x).gamma_open_nbds) + "\n";
    }
    out += std::string("gamma-locally compact: ") + (local.holds ? "yes" : "no") + "\n";
    for (std::size_t x = 0; x < space.size(); ++x) {
      out += "  witness at " + space.label(x) + ": " +
             (local.witnesses[x] ? format_set(space, *local.witnesses[x]) : std::string("none")) + "\n";
    }
    out += std::string("normal: ") + (normal ? "yes" : "no") + "\n";
    out += std::string("gamma-normal (jankovic): ") + (gamma_normal_jankovic ? "yes" : "no") + "\n";
    out += std::string("gamma-normal (kasahara): ") + (gamma_normal_kasahara ? "yes" : "no") + "\n";
    out += "claims:\n";
    for (const auto& c : claims) {
      out += "  [" + std::string(c.agrees ? "agree" : "DISAGREE") + "] " + c.example + ": " + c.claim +
             " (printed " + detail::render_value(c.printed) + ", computed " + detail::render_value(c.computed) + ")\n";
    }
    out += "flags:\n";
    for (const auto& f : flags) out += "  " + f + "\n";
    return out;
  }
};

inline WorkedExamplesReport audit_worked_examples() {
  WorkedExamplesReport r;
  const GammaContext& ctx = r.context;
  const FiniteSpace& space = ctx.space();
  const PointSet a = PointSet::singleton(0);
  const PointSet b = PointSet::singleton(1);
  const PointSet c = PointSet::singleton(2);
  const PointSet x = space.full();

  r.local = is_gamma_locally_compact(ctx);
  r.normal = is_normal(space);
  r.gamma_normal_jankovic = is_gamma_normal(ctx, ClosedVariant::jankovic);
  r.gamma_normal_kasahara = is_gamma_normal(ctx, ClosedVariant::kasahara);
  const bool gamma_normal_agree = r.gamma_normal_jankovic == r.gamma_normal_kasahara;

  auto family_claim = [&](std::string example, std::string claim, std::vector<PointSet> printed,
                          std::vector<PointSet> computed) {
    std::sort(printed.begin(), printed.end(), CanonicalLess{});
    const bool agrees = printed == computed;
    r.claims.push_back({std::move(example), std::move(claim), family_to_json(space, printed),
                        family_to_json(space, computed), agrees});
  };
  auto bool_claim = [&](std::string example, std::string claim, bool printed, bool computed) {
    r.claims.push_back({std::move(example), std::move(claim), printed, computed, printed == computed});
  };

  const auto family = ctx.gamma_open_family();
  family_claim("local-compactness example", "gamma-open sets", {a | b, a | c, b, x, PointSet{}},
               {family.begin(), family.end()});
  family_claim("local-compactness example", "gamma-nbd system at a", {a | b, a | c, x},
               gamma_nbd_system(ctx, 0).gamma_open_nbds);
  family_claim("local-compactness example", "gamma-nbd system at b", {b, a | b, x},
               gamma_nbd_system(ctx, 1).gamma_open_nbds);
  family_claim("local-compactness example", "gamma-nbd system at c", {a | c, x},
               gamma_nbd_system(ctx, 2).gamma_open_nbds);
  bool_claim("local-compactness example", "X is gamma-locally compact", true, r.local.holds);

  bool_claim("example 1", "X is gamma-normal (jankovic)", true, r.gamma_normal_jankovic);
  bool_claim("example 1", "X is gamma-normal (kasahara)", true, r.gamma_normal_kasahara);
  bool_claim("example 1", "X is normal", false, r.normal);

  bool_claim("example 2", "X is gamma-normal (jankovic)", false, r.gamma_normal_jankovic);
  bool_claim("example 2", "X is gamma-normal (kasahara)", false, r.gamma_normal_kasahara);
  bool_claim("example 2", "{a} is gamma-closed (jankovic)", true, ctx.is_gamma_closed(a, ClosedVariant::jankovic));
  bool_claim("example 2", "{c} is gamma-closed (jankovic)", true, ctx.is_gamma_closed(c, ClosedVariant::jankovic));
  bool_claim("example 2", "X is normal", true, r.normal);

  r.flags.push_back(
      "conflict: identical space and operation, opposite gamma-normality claims in example 1 and example 2; "
      "computed verdict: " +
      std::string(r.gamma_normal_jankovic ? "gamma-normal" : "not gamma-normal") +
      (gamma_normal_agree ? " under both closed variants" : " (jankovic), closed variants disagree"));
  r.flags.push_back(
      "stray point: example 1 names the closed set {d}, but d is not a point of X = {a, b, c}; "
      "no 4-point reconstruction is attempted");
  return r;
}

}  // namespace gammatop
