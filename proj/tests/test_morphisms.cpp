#include <gtest/gtest.h>

#include "support.hpp"

using namespace gammatop;
using namespace testing_support;

namespace {

SpaceMap identity_map(const GammaContext& ctx) {
  std::vector<std::size_t> t(ctx.space().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return SpaceMap(ctx, ctx, t);
}

}  // namespace

TEST(SpaceMap, ImagesAndPreimages) {
  const GammaContext ctx = reference_context();
  const SpaceMap swap(ctx, ctx, {1, 0, 2});
  EXPECT_EQ(swap.image(S("ac")), S("bc"));
  EXPECT_EQ(swap.preimage(S("b")), S("a"));
  EXPECT_TRUE(swap.is_bijective());
  EXPECT_EQ(swap.inverse().table(), (std::vector<std::size_t>{1, 0, 2}));
  const SpaceMap squash(ctx, ctx, {0, 0, 2});
  EXPECT_FALSE(squash.is_injective());
  EXPECT_FALSE(squash.is_surjective());
  EXPECT_EQ(thrown_code([&] { squash.inverse(); }), ErrorCode::PreconditionViolated);
}

TEST(SpaceMap, RejectsBadTables) {
  const GammaContext ctx = reference_context();
  EXPECT_EQ(thrown_code([&] { SpaceMap(ctx, ctx, {0, 1}); }), ErrorCode::PointOutOfRange);
  EXPECT_EQ(thrown_code([&] { SpaceMap(ctx, ctx, {0, 1, 3}); }), ErrorCode::PointOutOfRange);
  const GammaContext rel = relativize(ctx, S("ab"));
  EXPECT_EQ(thrown_code([&] { SpaceMap(rel, ctx, {0, 1, 2}); }), ErrorCode::PreconditionViolated);
}

TEST(MapEnumeration, Counts) {
  const GammaContext three = with_op(discrete_space(3), OperationKind::identity);
  const GammaContext two = with_op(discrete_space(2), OperationKind::identity);
  EXPECT_EQ(enumerate_maps(three, three).size(), 27u);
  EXPECT_EQ(enumerate_maps(three, three, MapFilter::bijective).size(), 6u);
  EXPECT_EQ(enumerate_maps(two, three, MapFilter::surjective).size(), 0u);
  EXPECT_EQ(enumerate_maps(two, three, MapFilter::injective).size(), 6u);
  EXPECT_EQ(enumerate_maps(three, two, MapFilter::surjective).size(), 6u);
}

TEST(Continuity, IdentityAndConstantMaps) {
  const GammaContext ctx = reference_context();
  EXPECT_TRUE(is_gb_continuous(identity_map(ctx)));
  EXPECT_TRUE(is_gb_open(identity_map(ctx)));
  EXPECT_TRUE(is_gb_closed(identity_map(ctx)));
  EXPECT_TRUE(is_gb_homeomorphism(identity_map(ctx)));
  EXPECT_TRUE(closure_image_lemma(identity_map(ctx)));

  const GammaContext point = with_op(discrete_space(1), OperationKind::identity);
  for_each_exhaustive_context(2, [&](const GammaContext& c) {
    const SpaceMap to_point(c, point, {0, 0});
    EXPECT_TRUE(is_gb_continuous(to_point));
    EXPECT_TRUE(closure_image_lemma(to_point));
  });
}

TEST(Continuity, IdentityOperationsReduceToClassicalContinuity) {
  std::size_t maps = 0;
  for (const auto& a : enumerate_topologies(3)) {
    const GammaContext dom = with_op(a, OperationKind::identity);
    const oracle::Model dm = to_model(dom);
    for (const auto& b : enumerate_topologies(3)) {
      const GammaContext cod = with_op(b, OperationKind::identity);
      const oracle::Model cm = to_model(cod);
      for (const SpaceMap& f : enumerate_maps(dom, cod)) {
        ++maps;
        ASSERT_EQ(is_gb_continuous(f), oracle::continuous(dm, cm, f.table()));
      }
    }
  }
  EXPECT_EQ(maps, 29u * 29u * 27u);
}

TEST(Continuity, SwapOnReference) {
  const GammaContext id = with_op(reference_space(), OperationKind::identity);
  const SpaceMap swap(id, id, {1, 0, 2});
  // {a,c} is open but its preimage {b,c} is not.
  EXPECT_FALSE(is_gb_continuous(swap));
  EXPECT_FALSE(is_gb_homeomorphism(swap));
  EXPECT_FALSE(is_gb_homeomorphism(SpaceMap(reference_context(), reference_context(), {1, 0, 2})));
}

TEST(ClosedMaps, ConstantMapOnDiscreteAndSierpinski) {
  const GammaContext disc = with_op(discrete_space(2), OperationKind::identity);
  EXPECT_TRUE(is_gb_closed(SpaceMap(disc, disc, {0, 0})));
  EXPECT_TRUE(is_gb_closed(SpaceMap(disc, disc, {1, 1})));

  const PointSet opens[] = {PointSet{}, S("a"), S("ab")};
  const GammaContext sierpinski = with_op(validate_space(2, opens), OperationKind::identity);
  // {b} is closed, {a} is not.
  EXPECT_TRUE(is_gb_closed(SpaceMap(sierpinski, sierpinski, {1, 1})));
  EXPECT_FALSE(is_gb_closed(SpaceMap(sierpinski, sierpinski, {0, 0})));
}

TEST(ClosureImage, RequiresContinuity) {
  const GammaContext id = with_op(reference_space(), OperationKind::identity);
  EXPECT_EQ(thrown_code([&] { closure_image_lemma(SpaceMap(id, id, {1, 0, 2})); }),
            ErrorCode::PreconditionViolated);
}

TEST(ClosureImage, HoldsForEveryContinuousMapOnTwoPoints) {
  std::vector<GammaContext> all;
  for_each_exhaustive_context(2, [&](const GammaContext& c) { all.push_back(c); });
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (const SpaceMap& f : enumerate_maps(a, b)) {
        ASSERT_TRUE(!is_gb_continuous(f) || !find_closure_image_violation(f));
      }
    }
  }
}
