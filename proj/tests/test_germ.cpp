#include <corners/errors.hpp>
#include <corners/germ.hpp>
#include <corners/random.hpp>

#include <gtest/gtest.h>

using namespace corners;

namespace {

CornerMapGerm diagonal() {
  return CornerMapGerm(ModelCorner(1, 1), ModelCorner(2, 2), {{1, 1}, {2, 1}}, Matrix{{1}, {1}});
}

// Image label of a generic point of stratum A under the linear model x -> Jx:
// the transferred target faces whose coordinate vanishes there.
StratumLabel image_by_evaluation(const CornerMapGerm& f, const StratumLabel& a, Rng& rng) {
  Point x(static_cast<std::size_t>(f.source().dim()));
  for (int i = 0; i < f.source().dim(); ++i) {
    if (a.count(i + 1)) x[static_cast<std::size_t>(i)] = 0;
    else if (i < f.source().depth()) x[static_cast<std::size_t>(i)] = rng.positive(7, 5);
    else x[static_cast<std::size_t>(i)] = rng.rational(7, 5);
  }
  std::vector<Rational> y = f.jacobian() * x;
  StratumLabel b;
  for (int j = 1; j <= f.target().depth(); ++j)
    if (f.transfers(j) && y[static_cast<std::size_t>(j - 1)] == 0) b.insert(j);
  return b;
}

}  // namespace

TEST(Germ, RowInvariantsAreEnforced) {
  EXPECT_THROW(CornerMapGerm(ModelCorner(1, 1), ModelCorner(1, 1), {{1, 1}}, Matrix{{-1}}), InvalidGerm);
  EXPECT_THROW(CornerMapGerm(ModelCorner(1, 1), ModelCorner(1, 1), {}, Matrix{{1}}), InvalidGerm);
  EXPECT_THROW(CornerMapGerm(ModelCorner(2, 1), ModelCorner(1, 1), {{1, 1}}, Matrix{{1, 1}}), InvalidGerm);
  EXPECT_THROW(CornerMapGerm(ModelCorner(2, 1), ModelCorner(1, 1), {{1, 2}}, Matrix{{0, 1}}), InvalidGerm);
  EXPECT_NO_THROW(CornerMapGerm(ModelCorner(2, 1), ModelCorner(2, 1), {}, Matrix{{0, 0}, {5, -1}}));
}

TEST(Germ, ExampleMaps) {
  // diagonal of [0,inf): not b-submersive
  EXPECT_FALSE(is_b_submersive(diagonal()));
  EXPECT_TRUE(is_immersion(diagonal()));
  // projection [0,inf)^2 -> [0,inf): a submersion
  CornerMapGerm proj = projection_germ(ModelCorner(1, 1), ModelCorner(1, 1), 0);
  EXPECT_TRUE(is_submersion(proj));
  EXPECT_TRUE(is_b_submersive(proj));
  // inclusion [0,inf) -> R: immersion, not a submersion
  CornerMapGerm inc(ModelCorner(1, 1), ModelCorner(1, 0), {}, Matrix{{1}});
  EXPECT_TRUE(is_immersion(inc));
  EXPECT_FALSE(is_submersion(inc));
  EXPECT_EQ(direct_product_germ(identity_germ(ModelCorner(1, 1)), identity_germ(ModelCorner(1, 1))), diagonal());
}

TEST(Germ, ComposeFollowsTheTransferRule) {
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    ModelCorner x = random_model(rng, 0, 4), y = random_model(rng, 0, 4), z = random_model(rng, 0, 4);
    CornerMapGerm f = random_germ(rng, x, y), g = random_germ(rng, y, z);
    CornerMapGerm h = compose(g, f);
    std::map<int, int> expected;
    for (auto [j, i] : g.transfer())
      if (f.transfers(i)) expected[j] = f.transfer_of(i);
    EXPECT_EQ(h.transfer(), expected);
    EXPECT_EQ(h.jacobian(), g.jacobian() * f.jacobian());
    EXPECT_EQ(compose(identity_germ(y), f), f);
    EXPECT_EQ(compose(f, identity_germ(x)), f);
  }
  EXPECT_EQ(compose(projection_germ(ModelCorner(1, 1), ModelCorner(1, 1), 0), diagonal()),
            identity_germ(ModelCorner(1, 1)));
  EXPECT_THROW(compose(diagonal(), diagonal()), ModelMismatch);
}

TEST(Germ, CornerMapMatchesPointEvaluation) {
  Rng rng(4);
  for (int t = 0; t < 300; ++t) {
    ModelCorner x = random_model(rng, 0, 4), y = random_model(rng, 0, 4);
    CornerMapGerm f = random_germ(rng, x, y);
    for (const auto& a : all_subsets(x.depth())) {
      CornerPointMap c = corner_map(f, a);
      EXPECT_EQ(c.target_label, image_by_evaluation(f, a, rng));
      StratumLabel hat = c.target_label;
      for (int j : f.flat_faces()) hat.insert(j);
      EXPECT_EQ(hat_corner_map(f, a).target_label, hat);
      EXPECT_EQ(c.restricted.source(), stratum_model(x, a));
      if (is_b_submersive(f)) EXPECT_LE(c.target_label.size(), a.size());
    }
  }
}

TEST(Germ, CornerMapExamples) {
  EXPECT_EQ(corner_map(diagonal(), {1}).target_label, (StratumLabel{1, 2}));
  EXPECT_EQ(hat_corner_map(diagonal(), {}).target_label, StratumLabel{});
  CornerMapGerm into_interior(ModelCorner(1, 1), ModelCorner(2, 2), {}, Matrix{{0}, {0}});
  EXPECT_EQ(hat_corner_map(into_interior, {}).target_label, (StratumLabel{1, 2}));
  EXPECT_EQ(corner_map(diagonal(), {}).restricted, diagonal());
  EXPECT_THROW(corner_map(diagonal(), {2}), BadLabel);
}

TEST(Germ, FaceInclusionCornerMap) {
  // C of the inclusion of face 2 of (3,2) sends the face's own corner {1} to {1,2}.
  CornerMapGerm inc = face_inclusion_germ(ModelCorner(3, 2), 2);
  EXPECT_EQ(inc.source(), ModelCorner(2, 1));
  EXPECT_EQ(corner_map(inc, {1}).target_label, (StratumLabel{1}));
  EXPECT_EQ(hat_corner_map(inc, {1}).target_label, (StratumLabel{1, 2}));
  EXPECT_EQ(hat_corner_map(inc, {}).target_label, (StratumLabel{2}));
}

TEST(Germ, ProductCornerMapSplits) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    ModelCorner x1 = random_model(rng, 0, 2), y1 = random_model(rng, 0, 2);
    ModelCorner x2 = random_model(rng, 0, 2), y2 = random_model(rng, 0, 2);
    CornerMapGerm f = random_germ(rng, x1, y1), g = random_germ(rng, x2, y2);
    CornerMapGerm fg = product_germ(f, g);
    EXPECT_EQ(fg.source(), product(x1, x2));
    for (const auto& a1 : all_subsets(x1.depth()))
      for (const auto& a2 : all_subsets(x2.depth())) {
        StratumLabel a = a1, b;
        for (int i : a2) a.insert(x1.depth() + i);
        b = corner_map(f, a1).target_label;
        for (int j : corner_map(g, a2).target_label) b.insert(y1.depth() + j);
        EXPECT_EQ(corner_map(fg, a).target_label, b);
      }
  }
}

TEST(Germ, XiAndBoundaryDecomposition) {
  XiData d = xi_data(diagonal());
  EXPECT_TRUE(d.plus.empty());
  EXPECT_EQ(d.minus, (std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}));
  BoundaryDecomposition b = boundary_decomposition(projection_germ(ModelCorner(1, 1), ModelCorner(1, 1), 0));
  EXPECT_EQ(b.minus_faces, (std::set<int>{1}));
  EXPECT_EQ(b.plus_faces, (std::set<int>{2}));
}

TEST(Germ, NormalFormRoundTrip) {
  CornerMapGerm f(ModelCorner(2, 2), ModelCorner(1, 1), {{1, 2}}, Matrix{{0, 3}});
  SubmersionNormalForm nf = submersion_normal_form(f);
  EXPECT_EQ(nf.z_model, ModelCorner(1, 1));
  EXPECT_EQ(nf.source_reorder, (std::vector<int>{2, 1}));
  EXPECT_EQ(compose(nf.projection, nf.witness), f);
  EXPECT_TRUE(inverse(nf.witness.jacobian()).has_value());

  Rng rng(6);
  int seen = 0;
  while (seen < 100) {
    ModelCorner x = random_model(rng, 0, 5), y = random_model(rng, 0, 3);
    auto s = random_submersion(rng, x, y);
    if (!s) continue;
    ++seen;
    SubmersionNormalForm n = submersion_normal_form(*s);
    EXPECT_EQ(n.y_model, y);
    EXPECT_EQ(n.z_model, ModelCorner(x.dim() - y.dim(), x.depth() - y.depth()));
    EXPECT_EQ(compose(n.projection, n.witness), *s);
  }
  EXPECT_THROW(submersion_normal_form(diagonal()), NotSubmersion);
}

TEST(Germ, BoundaryLiftsOfAProjection) {
  BoundaryLifts l = boundary_lifts(projection_germ(ModelCorner(1, 1), ModelCorner(1, 1), 0));
  ASSERT_EQ(l.plus.size(), 1u);
  EXPECT_EQ(l.plus[0].first, 2);
  EXPECT_EQ(l.plus[0].second, identity_germ(ModelCorner(1, 1)));
  ASSERT_EQ(l.minus.size(), 1u);
  EXPECT_EQ(l.minus[0].source_face, 1);
  EXPECT_EQ(l.minus[0].germ.source(), ModelCorner(1, 1));
  EXPECT_EQ(l.minus[0].germ.target(), ModelCorner(0, 0));
  EXPECT_TRUE(boundary_lifts(projection_germ(ModelCorner(1, 0), ModelCorner(1, 1), 0)).minus.empty());
}

TEST(Germ, BoundaryLiftsCommute) {
  Rng rng(7);
  int seen = 0;
  while (seen < 100) {
    ModelCorner x = random_model(rng, 0, 4), y = random_model(rng, 0, 3);
    auto f = random_submersion(rng, x, y);
    if (!f) continue;
    ++seen;
    BoundaryLifts l = boundary_lifts(*f);
    for (const auto& [i, fp] : l.plus) EXPECT_TRUE(is_submersion(fp));
    for (const auto& m : l.minus)
      EXPECT_EQ(compose(*f, face_inclusion_germ(x, m.source_face)),
                compose(face_inclusion_germ(y, m.target_face), m.germ));
  }
}

TEST(Germ, PointAndProjection) {
  CornerMapGerm p = point_germ(ModelCorner(2, 1));
  EXPECT_EQ(p.source(), ModelCorner(0, 0));
  EXPECT_TRUE(p.flat_faces() == (std::set<int>{1}));
  CornerMapGerm pr = projection_germ(ModelCorner(1, 0), ModelCorner(2, 2), 1);
  EXPECT_EQ(pr.target(), ModelCorner(2, 2));
  EXPECT_TRUE(is_submersion(pr));
}
