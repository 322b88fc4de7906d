#include <gtest/gtest.h>

#include <random>

#include "greenring/greenring.hpp"

using namespace greenring;

TEST(Json, CanonicalForm) {
  RingContext ctx(3, 2);
  auto w = basis_element(ctx, 9) - basis_element(ctx, 2) + scale(4, basis_element(ctx, 1));
  EXPECT_EQ(to_json(w).dump(), R"({"p":3,"nu":2,"coeffs":{"1":4,"2":-1,"9":1}})");
  EXPECT_EQ(to_json(zero(ctx)).dump(), R"({"p":3,"nu":2,"coeffs":{}})");
}

TEST(Json, RoundTripRandomElements) {
  for (auto [p, nu] : {std::pair{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
    RingContext ctx(p, nu);
    auto rng = verify::make_rng(ctx, 7);
    for (int i = 0; i < 200; ++i) {
      auto w = scale(1 + i, verify::random_element(ctx, rng, ctx.order(), 0.3));
      const auto text = to_json(w).dump();
      EXPECT_EQ(element_from_json(text), w);
      EXPECT_EQ(to_json(element_from_json(text)).dump(), text);
    }
  }
}

TEST(Json, DecompositionReport) {
  RingContext ctx(5, 1);
  auto rep = decompose(ctx, tensor(realize(ctx, 2), realize(ctx, 3)));
  EXPECT_EQ(to_json(ctx, rep).dump(),
            R"({"p":5,"nu":1,"coeffs":{"2":1,"4":1},"rank_profile":[6,4,2,1,0,0]})");
}

TEST(Json, RejectsMalformed) {
  for (const char* bad : {"", "{", "[]", R"({"p":3,"nu":2})", R"({"p":4,"nu":1,"coeffs":{}})",
                          R"({"p":3,"nu":2,"coeffs":{"0":1}})", R"({"p":3,"nu":2,"coeffs":{"10":1}})",
                          R"({"p":3,"nu":2,"coeffs":{"x":1}})", R"({"p":3,"nu":2,"coeffs":{"1":"a"}})"}) {
    try {
      element_from_json(std::string(bad));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::parse || e.kind() == ErrorKind::invalid_context) << bad;
    }
  }
}
