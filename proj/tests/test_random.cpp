#include <corners/random.hpp>
#include <corners/verify.hpp>

#include <gtest/gtest.h>

using namespace corners;

TEST(Random, SameSeedSameSequence) {
  Rng a(99), b(99), c(100);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    int x = a.uniform(-5, 5);
    EXPECT_EQ(x, b.uniform(-5, 5));
    differs = differs || x != c.uniform(-5, 5);
    EXPECT_GE(x, -5);
    EXPECT_LE(x, 5);
  }
  EXPECT_TRUE(differs);
}

TEST(Random, GeneratedGermsAreValid) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    ModelCorner x = random_model(rng, 0, 4), y = random_model(rng, 0, 4);
    CornerMapGerm f = random_germ(rng, x, y);
    EXPECT_EQ(f.source(), x);
    if (auto s = random_submersion(rng, x, y)) EXPECT_TRUE(is_submersion(*s));
    if (auto b = random_b_submersive(rng, x, y)) EXPECT_TRUE(is_b_submersive(*b));
  }
}

TEST(Random, SuitesAreDeterministic) {
  SuiteOptions o{5, 3, 50};
  SuiteResult a = functor_suite(o), b = functor_suite(o);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.counters, b.counters);
}
