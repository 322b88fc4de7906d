#include <gtest/gtest.h>

#include "greenring/greenring.hpp"

using namespace greenring;

namespace {

GreenElement V(const RingContext& ctx, std::int64_t r) { return basis_element(ctx, r); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

}  // namespace

TEST(Context, RejectsBadParameters) {
  EXPECT_EQ(kind_of([] { RingContext(4, 1); }), ErrorKind::invalid_context);
  EXPECT_EQ(kind_of([] { RingContext(3, 0); }), ErrorKind::invalid_context);
  EXPECT_EQ(kind_of([] { RingContext(2, 11); }), ErrorKind::invalid_context);  // 2048 > default cap
  RingContext ctx(3, 2);
  EXPECT_EQ(ctx.order(), 9);
  EXPECT_EQ(ctx.power(1), 3);
  EXPECT_EQ(ctx.level(4), 2);
  EXPECT_EQ(ctx.level(1), 0);
}

TEST(Context, OrderCapOverride) {
  const auto saved = order_cap();
  set_order_cap(4096);
  EXPECT_NO_THROW(RingContext(2, 11));
  set_order_cap(saved);
}

TEST(BasisElement, Conventions) {
  RingContext ctx(3, 2);
  auto v5 = V(ctx, 5);
  EXPECT_EQ(v5.coeff(5), 1);
  EXPECT_EQ(dim(v5), 5);
  EXPECT_TRUE(V(ctx, 0).is_zero());
  EXPECT_EQ(V(ctx, -4).coeff(4), -1);
  EXPECT_EQ(kind_of([&] { V(ctx, 10); }), ErrorKind::index_out_of_range);
  EXPECT_EQ(kind_of([&] { V(ctx, -10); }), ErrorKind::index_out_of_range);
}

TEST(Arithmetic, AddScaleNegate) {
  RingContext ctx(3, 2);
  EXPECT_EQ((V(ctx, 2) + V(ctx, 2)).coeff(2), 2);
  EXPECT_TRUE((V(ctx, 3) + negate(V(ctx, 3))).is_zero());
  EXPECT_EQ(scale(-2, V(ctx, 1)).coeff(1), -2);
  EXPECT_EQ(dim(zero(ctx)), 0);
  RingContext other(3, 1);
  EXPECT_EQ(kind_of([&] { add(V(ctx, 1), V(other, 1)); }), ErrorKind::context_mismatch);
}

TEST(Arithmetic, OverflowIsReported) {
  RingContext ctx(2, 1);
  auto big = scale(std::numeric_limits<std::int64_t>::max(), V(ctx, 1));
  EXPECT_EQ(kind_of([&] { add(big, big); }), ErrorKind::overflow);
}

TEST(Generators, X) {
  EXPECT_EQ(generator_X(RingContext(3, 2), 1), V(RingContext(3, 2), 4) - V(RingContext(3, 2), 2));
  RingContext c7(7, 2);
  EXPECT_EQ(generator_X(c7, 0), V(c7, 2));
  RingContext c2(2, 3);
  EXPECT_EQ(generator_X(c2, 2), V(c2, 5) - V(c2, 3));
  EXPECT_THROW(generator_X(c2, 3), Error);
  EXPECT_THROW(generator_X(c2, -1), Error);
}

TEST(Heller, Examples) {
  RingContext ctx(3, 2);
  EXPECT_EQ(heller(2, V(ctx, 2)), V(ctx, 7));
  EXPECT_TRUE(heller(2, V(ctx, 9)).is_zero());
  EXPECT_EQ(heller(1, V(ctx, 1) + V(ctx, 2)), V(ctx, 2) + V(ctx, 1));
  EXPECT_EQ(kind_of([&] { heller(1, V(ctx, 4)); }), ErrorKind::support);
}

TEST(Heller, CongruenceModRegular) {
  RingContext ctx(3, 2);
  EXPECT_TRUE(congruent_mod_regular(2, V(ctx, 9), zero(ctx)));
  EXPECT_FALSE(congruent_mod_regular(1, V(ctx, 2), V(ctx, 1)));
  EXPECT_TRUE(congruent_mod_regular(1, heller(1, heller(1, V(ctx, 2))), V(ctx, 2)));
  EXPECT_THROW(congruent_mod_regular(1, V(ctx, 5), V(ctx, 1)), Error);
}

TEST(Render, HumanReadable) {
  RingContext ctx(3, 2);
  EXPECT_EQ(to_string(zero(ctx)), "0");
  EXPECT_EQ(to_string(V(ctx, 5) - V(ctx, 3) + scale(2, V(ctx, 1))), "V5 - V3 + 2V1");
  EXPECT_EQ(to_string(negate(V(ctx, 4))), "-V4");
}

TEST(Parse, StrictGrammar) {
  RingContext ctx(3, 2);
  EXPECT_EQ(parse_element(ctx, "V5-V3+2V1"), V(ctx, 5) - V(ctx, 3) + scale(2, V(ctx, 1)));
  EXPECT_EQ(parse_element(ctx, " -3V2 + V2 "), scale(-2, V(ctx, 2)));
  EXPECT_TRUE(parse_element(ctx, "0").is_zero());
  EXPECT_TRUE(parse_element(ctx, "V0").is_zero());
  for (const char* bad : {"", "V", "5", "V5V3", "v5", "V5+", "V10", "++V1", "2*V1", "V1.5"}) {
    EXPECT_EQ(kind_of([&] { parse_element(ctx, bad); }), ErrorKind::parse) << bad;
  }
}

TEST(Parse, RoundTripsRendering) {
  RingContext ctx(5, 2);
  auto w = V(ctx, 25) - scale(3, V(ctx, 7)) + V(ctx, 1);
  EXPECT_EQ(parse_element(ctx, to_string(w)), w);
}
