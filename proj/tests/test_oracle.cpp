#include <gtest/gtest.h>

#include <map>

#include "greenring/greenring.hpp"

using namespace greenring;

namespace {

std::map<std::int64_t, std::int64_t> mults(const RingContext& ctx, const MatrixGFp& g) {
  return decompose(ctx, g).multiplicities;
}

GreenElement V(const RingContext& ctx, std::int64_t r) { return basis_element(ctx, r); }

}  // namespace

TEST(Realize, JordanBlocks) {
  RingContext c2(2, 1);
  EXPECT_EQ(realize(c2, 1), MatrixGFp::identity(2, 1));
  auto j2 = realize(c2, 2);
  EXPECT_EQ(j2.at(0, 0), 1u);
  EXPECT_EQ(j2.at(0, 1), 1u);
  EXPECT_EQ(j2.at(1, 0), 0u);
  EXPECT_EQ(j2 * j2, MatrixGFp::identity(2, 2));
  EXPECT_THROW(realize(c2, 3), Error);
}

TEST(Realize, RegularModuleIsOneFullBlock) {
  RingContext ctx(3, 2);
  auto rep = decompose(ctx, realize(ctx, 9));
  EXPECT_EQ(rep.multiplicities, (std::map<std::int64_t, std::int64_t>{{9, 1}}));
  ASSERT_EQ(rep.rank_profile.size(), 10u);
  EXPECT_EQ(rep.rank_profile[8], 1);
  EXPECT_EQ(rep.rank_profile[9], 0);
}

TEST(Decompose, SpecExamples) {
  RingContext c3(3, 1), c2(2, 1), c5(5, 1);
  EXPECT_EQ(mults(c3, realize(c3, 3)), (std::map<std::int64_t, std::int64_t>{{3, 1}}));
  EXPECT_EQ(mults(c2, tensor(realize(c2, 2), realize(c2, 2))), (std::map<std::int64_t, std::int64_t>{{2, 2}}));
  EXPECT_EQ(mults(c5, tensor(realize(c5, 2), realize(c5, 3))),
            (std::map<std::int64_t, std::int64_t>{{4, 1}, {2, 1}}));
}

TEST(Decompose, RejectsNonModules) {
  RingContext c3(3, 1);
  MatrixGFp bad(3, 2, 2);
  bad.set(0, 0, 2);
  bad.set(1, 1, 1);
  EXPECT_THROW(decompose(c3, bad), Error);
  // unipotent but of order 9, too long for C_3
  RingContext c9(3, 2);
  try {
    decompose(c3, realize(c9, 4));
    FAIL() << "expected invalid_module";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_module);
  }
  MatrixGFp wrong_field(5, 2, 2);
  EXPECT_THROW(decompose(c3, wrong_field), Error);
}

TEST(InducedPowers, WedgeAndSym) {
  RingContext c5(5, 1);
  auto w2 = wedge(2, realize(c5, 2));
  EXPECT_EQ(w2, MatrixGFp::identity(5, 1));
  EXPECT_EQ(mults(c5, sym(2, realize(c5, 3))), (std::map<std::int64_t, std::int64_t>{{5, 1}, {1, 1}}));
  EXPECT_EQ(mults(c5, wedge(2, realize(c5, 3))), (std::map<std::int64_t, std::int64_t>{{3, 1}}));
  EXPECT_EQ(mults(c5, sym(2, realize(c5, 2))), (std::map<std::int64_t, std::int64_t>{{3, 1}}));
  EXPECT_THROW(wedge(3, realize(c5, 2)), Error);
}

TEST(InducedPowers, CapIsEnforced) {
  RingContext c5(5, 2);
  const auto saved = oracle_cap();
  set_oracle_cap(10);
  try {
    tensor(realize(c5, 4), realize(c5, 4));
    FAIL() << "expected oracle_capacity";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::oracle_capacity);
  }
  set_oracle_cap(saved);
}

TEST(Multiply, SpecExamples) {
  RingContext c3(3, 1), c4(2, 2);
  EXPECT_EQ(V(c3, 2) * V(c3, 2), V(c3, 3) + V(c3, 1));
  EXPECT_EQ(V(c3, 3) * V(c3, 2), scale(2, V(c3, 3)));
  EXPECT_EQ(V(c4, 3) * V(c4, 2), V(c4, 4) + V(c4, 2));
}

TEST(Multiply, BilinearAndUnital) {
  RingContext ctx(3, 2);
  auto a = V(ctx, 4) - scale(2, V(ctx, 2));
  auto b = V(ctx, 5) + V(ctx, 1);
  EXPECT_EQ(a * b, V(ctx, 4) * V(ctx, 5) + V(ctx, 4) - scale(2, V(ctx, 2) * V(ctx, 5)) - scale(2, V(ctx, 2)));
  EXPECT_EQ(a * one(ctx), a);
  EXPECT_EQ(dim(a * b), dim(a) * dim(b));
  EXPECT_EQ(power(b, 3), b * b * b);
  EXPECT_EQ(power(b, 0), one(ctx));
}

TEST(ProductTable, SharedTableMatchesFreshTable) {
  RingContext ctx(5, 2);
  ProductTable fresh(ctx);
  auto& shared = ProductTable::shared(ctx);
  for (std::int64_t a = 1; a <= 25; a += 6) {
    for (std::int64_t b = a; b <= 25; b += 5) EXPECT_EQ(fresh.product(a, b), shared.product(b, a));
  }
}
