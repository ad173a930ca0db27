#include <corners/errors.hpp>
#include <corners/model.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace corners;

namespace {

// Faces of [0,inf)^k met by a point, found by scanning every coordinate.
StratumLabel faces_of_point(const ModelCorner& m, const Point& p) {
  StratumLabel s;
  for (int i = 0; i < m.depth(); ++i)
    if (p[static_cast<std::size_t>(i)] == 0) s.insert(i + 1);
  return s;
}

}  // namespace

TEST(Model, RejectsBadShapes) {
  EXPECT_THROW(ModelCorner(2, 3), InvalidModel);
  EXPECT_THROW(ModelCorner(-1, 0), InvalidModel);
  EXPECT_NO_THROW(ModelCorner(0, 0));
}

TEST(Model, DepthOfPoint) {
  ModelCorner m(3, 2);
  EXPECT_EQ(depth_of_point(m, {0, 0, -5}), 2);
  EXPECT_EQ(depth_of_point(m, {1, 0, 0}), 1);
  EXPECT_THROW(depth_of_point(m, {-1, 0, 0}), PointOutsideModel);
  EXPECT_THROW(depth_of_point(m, {0, 0}), PointOutsideModel);
}

TEST(Model, StrataAgreeWithPointSampling) {
  // Every subset pattern of zero boundary coordinates is realised by exactly
  // one stratum, and that stratum's model has the expected shape.
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      ModelCorner m(n, k);
      for (int j = 0; j <= k; ++j) {
        auto s = strata(m, j);
        for (auto& [label, model] : s) {
          Point p(static_cast<std::size_t>(n), Rational(1));
          for (int i : label) p[static_cast<std::size_t>(i - 1)] = 0;
          EXPECT_EQ(faces_of_point(m, p), label);
          EXPECT_EQ(depth_of_point(m, p), j);
          EXPECT_EQ(model, ModelCorner(n - j, k - j));
        }
        EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
      }
    }
}

TEST(Model, CountsOnTheQuadrant) {
  // [0,inf)^2: one interior, two edges, one corner; the corner lifts to two
  // ordered points of the second boundary.
  ModelCorner q(2, 2);
  EXPECT_EQ(corners_count(q, 0), 1u);
  EXPECT_EQ(corners_count(q, 1), 2u);
  EXPECT_EQ(corners_count(q, 2), 1u);
  EXPECT_EQ(iterated_boundary_count(q, 2), 2u);
  EXPECT_EQ(corners_count(q, 3), 0u);
}

TEST(Model, ReindexFace) {
  EXPECT_EQ(reindex_face({2}, 3), 2);
  EXPECT_EQ(reindex_face({2}, 1), 1);
  EXPECT_EQ(reindex_face({1, 3}, 4), 2);
  EXPECT_EQ(stratum_model(ModelCorner(4, 3), {1, 3}), ModelCorner(2, 1));
}

TEST(Model, ProductLayoutIsAStandardModel) {
  const ModelCorner fs[] = {ModelCorner(2, 1), ModelCorner(3, 2)};
  ProductLayout l = product_layout(fs);
  EXPECT_EQ(l.model, ModelCorner(5, 3));
  // Boundary coordinates of both factors come first.
  EXPECT_EQ(l.coordinate_of[0], (std::vector<int>{0, 3}));
  EXPECT_EQ(l.coordinate_of[1], (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(l.face_offset, (std::vector<int>{0, 1}));
  // concatenated order (0,3,1,2,4) -> sign of that permutation
  EXPECT_EQ(l.reorder_sign, 1);
}

TEST(Model, ReorderSignMatchesInversionCount) {
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int k1 = 0; k1 <= n1; ++k1)
      for (int n2 = 0; n2 <= 3; ++n2)
        for (int k2 = 0; k2 <= n2; ++k2) {
          const ModelCorner fs[] = {ModelCorner(n1, k1), ModelCorner(n2, k2)};
          ProductLayout l = product_layout(fs);
          std::vector<int> concat = l.coordinate_of[0];
          concat.insert(concat.end(), l.coordinate_of[1].begin(), l.coordinate_of[1].end());
          int inversions = 0;
          for (std::size_t i = 0; i < concat.size(); ++i)
            for (std::size_t j = i + 1; j < concat.size(); ++j)
              if (concat[i] > concat[j]) ++inversions;
          EXPECT_EQ(l.reorder_sign, inversions % 2 ? -1 : 1);
          // interior coordinates of factor 1 jump over factor 2's faces
          EXPECT_EQ(inversions, (n1 - k1) * k2);
        }
}

TEST(Model, ProductIsAssociative) {
  ModelCorner a(2, 1), b(1, 1), c(3, 2);
  EXPECT_EQ(product(product(a, b), c), product(a, product(b, c)));
}

TEST(Model, SubsetEnumeration) {
  EXPECT_EQ(subsets_of_size(4, 2).size(), 6u);
  EXPECT_EQ(all_subsets(3).size(), 8u);
  EXPECT_EQ(all_subsets(3).front(), StratumLabel{});
  EXPECT_EQ(subsets_of_size(std::vector<int>{2, 5, 7}, 2).front(), (StratumLabel{2, 5}));
}

TEST(Model, BadLabels) {
  EXPECT_THROW(check_label(ModelCorner(2, 1), {2}), BadLabel);
  EXPECT_NO_THROW(check_label(ModelCorner(2, 1), {1}));
}
