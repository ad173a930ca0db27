#include <corners/errors.hpp>
#include <corners/orient.hpp>
#include <corners/random.hpp>

#include <gtest/gtest.h>

using namespace corners;

namespace {

int parity(int n) { return n % 2 ? -1 : 1; }

}  // namespace

TEST(Orient, BoundarySignIsAlternating) {
  EXPECT_EQ(boundary_orientation_sign({1, 1}, 1), -1);
  EXPECT_EQ(boundary_orientation_sign({2, 2}, 1), -1);
  EXPECT_EQ(boundary_orientation_sign({2, 2}, 2), 1);
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= k; ++i) EXPECT_EQ(boundary_orientation_sign({n, k}, i), parity(i));
  EXPECT_THROW(boundary_orientation_sign({2, 1}, 2), BadFace);
}

TEST(Orient, DoubleFlip) {
  OrientedModel o{{3, 1}, 1};
  EXPECT_EQ(o.opposite().sign, -1);
  EXPECT_EQ(o.opposite().opposite(), o);
}

TEST(Orient, DiagonalOfIdentity) {
  CornerMapGerm id = identity_germ({1, 1});
  FibreLedger l = fibre_product(id, id);
  EXPECT_EQ(fibre_product_orientation(id, id, 1, 1, 1, l), 1);
  // reversing one factor reverses the result
  EXPECT_EQ(fibre_product_orientation(id, id, 1, -1, 1, l), -1);
  EXPECT_EQ(fibre_product_orientation(id, id, -1, 1, 1, l), -1);
}

TEST(Orient, SwapSignOnProjections) {
  // M x_Z (Z x N) with all factors lines: the worked computation
  // (-1)^((m+n)z) (-1)^(mn+mz+nz) gives -1 for m = z = n = 1.
  for (int m = 0; m <= 2; ++m)
    for (int z = 0; z <= 2; ++z)
      for (int n = 0; n <= 2; ++n) {
        ModelCorner mm(m, 0), zz(z, 0), nn(n, 0);
        CornerMapGerm f = projection_germ(mm, zz, 1), g = projection_germ(zz, nn, 0);
        SignReport r = verify_swap(f, g, 1, 1, 1);
        EXPECT_TRUE(r.holds) << m << z << n;
        ASSERT_EQ(r.checks.size(), 1u);
        EXPECT_EQ(r.checks[0].predicted, parity((m + n) * z) * parity(m * n + m * z + n * z));
      }
}

TEST(Orient, ProductSwapAndPoint) {
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; x + y <= 4; ++y) {
      SignReport r = verify_product_swap({x, x / 2}, {y, y / 3}, 1, -1);
      EXPECT_TRUE(r.holds);
      EXPECT_EQ(r.checks[0].predicted, parity(x * y));
      EXPECT_TRUE(verify_axiom_point({x, x / 2}, {y, 0}, -1, 1).holds);
    }
}

TEST(Orient, MinusBoundaryOfAProjection) {
  CornerMapGerm proj = projection_germ({1, 1}, {1, 1}, 0);
  SignReport r = verify_minus_boundary(proj, 1, 1);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.checks[0].predicted, parity(2 + 1));
  CornerMapGerm diag({1, 1}, {2, 2}, {{1, 1}, {2, 1}}, Matrix{{1}, {1}});
  EXPECT_THROW(verify_minus_boundary(diag, 1, 1), HypothesisNotMet);
}

TEST(Orient, DirectProductSignInstance) {
  // dim Z = dim Y = dim W = 1: predicted (-1)^(1*(1+1)) = +1
  ModelCorner y(1, 0), z(1, 0), m1(0, 0), m2(0, 0), m3(0, 0);
  ModelCorner v = product(product(y, m1), z);
  CornerMapGerm d = compose(projection_germ(y, m1, 0), projection_germ(product(y, m1), z, 0));
  CornerMapGerm e = projection_germ(product(y, m1), z, 1);
  CornerMapGerm f = projection_germ(y, m2, 0), g = projection_germ(z, m3, 0);
  SignReport r = verify_direct_product(d, e, f, g, {1, 1, 1, 1, 1});
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.checks[0].predicted, 1);
  EXPECT_EQ(v.dim(), 2);
}

TEST(Orient, SplittingIndependenceOnRandomPairs) {
  Rng rng(41);
  int seen = 0;
  while (seen < 200) {
    auto pair = random_transverse_pair(rng, 6, 4);
    if (!pair) continue;
    ++seen;
    EXPECT_TRUE(splitting_independent(pair->first, pair->second, 1, -1, 1));
    FibreLedger l = fibre_product(pair->first, pair->second);
    int s = fibre_product_orientation(pair->first, pair->second, 1, 1, 1, l);
    EXPECT_EQ(fibre_product_orientation(pair->first, pair->second, 1, -1, 1, l), -s);
    EXPECT_EQ(fibre_product_orientation(pair->first, pair->second, 1, 1, -1, l), -s);
  }
}

TEST(Orient, PermutingIteratedBoundaryFaces) {
  ModelCorner m(3, 3);
  const int base = iterated_boundary_sign(m, {1, 2, 3});
  EXPECT_EQ(iterated_boundary_sign(m, {2, 1, 3}), -base);
  EXPECT_EQ(iterated_boundary_sign(m, {2, 3, 1}), base);
  EXPECT_EQ(iterated_boundary_sign(m, {3, 2, 1}), -base);
  // one step is the ordinary boundary sign
  EXPECT_EQ(iterated_boundary_sign(m, {2}), boundary_orientation_sign(m, 2));
}

TEST(Orient, IdentificationSign) {
  Matrix e{{1, 0}, {0, 1}, {1, 1}};
  Matrix swapped{{0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(identification_sign(e, e), 1);
  EXPECT_EQ(identification_sign(e, swapped), -1);
  EXPECT_EQ(identification_sign(e, Matrix{{1, 0}, {0, 1}, {0, 0}}), 0);
}
