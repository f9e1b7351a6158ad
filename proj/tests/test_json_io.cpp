#include <gtest/gtest.h>

#include "support.hpp"

using namespace gammatop;
using namespace testing_support;

namespace {

const char* kReference = R"({
  "space": {"points": ["a", "b", "c"], "opens": [[], ["a","b","c"], ["a"], ["b"], ["a","b"], ["a","c"]]},
  "gamma": {"kind": "pivot", "point": "b"}
})";

}  // namespace

TEST(JsonIo, LoadsReferenceContext) {
  const GammaContext ctx = context_from_json(parse_json(kReference));
  EXPECT_EQ(ctx.space(), reference_space());
  EXPECT_EQ(ctx.operation(), reference_context().operation());
  const Json report = analyze_context(ctx, Variants{});
  EXPECT_EQ(report["gamma_open_family"].dump(), R"([[],["b"],["a","b"],["a","c"],["a","b","c"]])");
}

TEST(JsonIo, RoundTripsEveryTwoPointContext) {
  for_each_exhaustive_context(2, [&](const GammaContext& ctx) {
    const Json j = context_to_json(ctx);
    const GammaContext back = context_from_json(parse_json(j.dump()));
    EXPECT_EQ(back.space(), ctx.space());
    EXPECT_EQ(back.operation(), ctx.operation());
    EXPECT_EQ(context_to_json(back).dump(), j.dump());
  });
}

TEST(JsonIo, BuiltinKindsRoundTrip) {
  const FiniteSpace s = reference_space();
  for (const auto& op : builtin_operations(s)) {
    const Json j = operation_to_json(s, op);
    EXPECT_EQ(operation_from_json(s, j), op);
    EXPECT_EQ(operation_from_json(s, j).tag(), op.tag());
  }
}

TEST(JsonIo, CustomLabels) {
  const Json j = parse_json(R"({"space": {"points": ["p", "q"], "opens": [[], ["q"], ["p", "q"]]},
                                "gamma": {"kind": "closure"}})");
  const GammaContext ctx = context_from_json(j);
  EXPECT_EQ(ctx.space().label(1), "q");
  EXPECT_EQ(set_to_json(ctx.space(), S("ab")).dump(), R"(["p","q"])");
}

TEST(JsonIo, MapRoundTrip) {
  const GammaContext ctx = reference_context();
  const SpaceMap f(ctx, ctx, {1, 0, 2});
  const SpaceMap back = map_from_json(parse_json(map_to_json(f).dump()));
  EXPECT_EQ(back.table(), f.table());
  EXPECT_EQ(map_to_json(back).dump(), map_to_json(f).dump());
}

TEST(JsonIo, ErrorPaths) {
  EXPECT_EQ(thrown_code([] { parse_json("{ not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(thrown_code([] { context_from_json(parse_json(R"({"space": {"points": ["a"]}})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(thrown_code([] {
              context_from_json(parse_json(R"({"space": {"points": ["a"], "opens": [[], ["z"]]},
                                                "gamma": {"kind": "identity"}})"));
            }),
            ErrorCode::PointOutOfRange);
  EXPECT_EQ(thrown_code([] {
              context_from_json(parse_json(R"({"space": {"points": ["a","b"], "opens": [[], ["a"], ["b"]]},
                                                "gamma": {"kind": "identity"}})"));
            }),
            ErrorCode::MissingEmptyOrFull);
  EXPECT_EQ(thrown_code([] {
              context_from_json(parse_json(R"({"space": {"points": ["a"], "opens": [[], ["a"]]},
                                                "gamma": {"kind": "bogus"}})"));
            }),
            ErrorCode::ParseError);
  EXPECT_EQ(thrown_code([] {
              context_from_json(parse_json(R"({"space": {"points": ["a"], "opens": [[], ["a"]]},
                                                "gamma": {"kind": "pivot", "point": "z"}})"));
            }),
            ErrorCode::PivotNotInSpace);
  EXPECT_EQ(thrown_code([] {
              context_from_json(parse_json(R"({"space": {"points": [], "opens": []},
                                                "gamma": {"kind": "identity"}})"));
            }),
            ErrorCode::SizeTooLarge);
}

TEST(JsonIo, NotExpansiveTable) {
  const Json j = parse_json(R"({
    "space": {"points": ["a","b","c"], "opens": [[], ["a"], ["b"], ["a","b"], ["a","c"], ["a","b","c"]]},
    "gamma": {"kind": "table", "entries": [
      {"open": [], "image": []}, {"open": ["a"], "image": ["b"]}, {"open": ["b"], "image": ["b"]},
      {"open": ["a","b"], "image": ["a","b"]}, {"open": ["a","c"], "image": ["a","c"]},
      {"open": ["a","b","c"], "image": ["a","b","c"]}]}})");
  EXPECT_EQ(thrown_code([&] { context_from_json(j); }), ErrorCode::NotExpansive);
  EXPECT_TRUE(is_invalid_input(ErrorCode::NotExpansive));
  EXPECT_FALSE(is_invalid_input(ErrorCode::ParseError));
}

TEST(Report, OnePointSpaceSatisfiesEverySeparationProperty) {
  const Json r = analyze_context(with_op(discrete_space(1), OperationKind::identity), Variants{});
  for (const auto* key : {"T2", "regular", "normal", "gamma_T2", "gamma_star_regular", "gamma_normal"}) {
    EXPECT_TRUE(r["properties"][key].get<bool>()) << key;
  }
}

TEST(Report, TextRendersLabelSets) {
  const std::string text = render_text(analyze_context(reference_context(), Variants{}));
  EXPECT_NE(text.find("gamma_open_family: {{}, {b}, {a, b}, {a, c}, {a, b, c}}"), std::string::npos);
  EXPECT_NE(text.find("  gamma_locally_compact: true"), std::string::npos);
}
