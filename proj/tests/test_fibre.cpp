#include <corners/errors.hpp>
#include <corners/fibre.hpp>
#include <corners/random.hpp>

#include <gtest/gtest.h>

using namespace corners;

namespace {

using Germ = CornerMapGerm;

Germ germ(ModelCorner s, ModelCorner t, std::map<int, int> pi, Matrix j) {
  return Germ(s, t, std::move(pi), std::move(j));
}

// Linear model of the fibre product: the cone cut out of K = ker[J_f | -J_g]
// by the boundary coordinates of X and Y. Returns (dim K, number of facets),
// where facets are the distinct rays among the nonzero restricted
// functionals; also reports whether those are linearly independent.
struct Cone {
  std::size_t dim = 0;
  std::size_t facets = 0;
  bool simplicial = false;
};

Cone cone_of(const Germ& f, const Germ& g) {
  const int m = f.source().dim(), n = g.source().dim();
  Matrix k = kernel_basis(Matrix::hstack(f.jacobian(), -g.jacobian()));
  Cone c;
  c.dim = k.cols();
  std::vector<std::vector<Rational>> rays;
  auto consider = [&](std::size_t coord) {
    std::vector<Rational> r = k.row(coord);
    bool zero = true;
    for (const auto& v : r) zero = zero && v == 0;
    if (zero) return;
    for (const auto& s : rays) {
      // positive proportionality
      std::size_t piv = 0;
      while (s[piv] == 0) ++piv;
      if (r[piv] == 0) continue;
      Rational ratio = r[piv] / s[piv];
      if (ratio <= 0) continue;
      bool same = true;
      for (std::size_t t = 0; t < r.size(); ++t) same = same && r[t] == ratio * s[t];
      if (same) return;
    }
    rays.push_back(r);
  };
  for (int i = 0; i < f.source().depth(); ++i) consider(static_cast<std::size_t>(i));
  for (int i = 0; i < g.source().depth(); ++i) consider(static_cast<std::size_t>(m + i));
  (void)n;
  c.facets = rays.size();
  c.simplicial = rays.empty() || rank(Matrix::from_rows(rays, c.dim)) == rays.size();
  return c;
}

}  // namespace

TEST(Fibre, TransversalityExamples) {
  // the point into R against itself
  Germ pt = germ({0, 0}, {1, 0}, {}, Matrix(1, 0));
  EXPECT_FALSE(is_transverse(pt, pt));
  EXPECT_THROW(fibre_product(pt, pt), NotTransverse);
  // (x,2x) against (2y,y): transverse, not strongly transverse
  Germ f = germ({1, 1}, {2, 2}, {{1, 1}, {2, 1}}, Matrix{{1}, {2}});
  Germ g = germ({1, 1}, {2, 2}, {{1, 1}, {2, 1}}, Matrix{{2}, {1}});
  EXPECT_TRUE(is_transverse(f, g));
  EXPECT_FALSE(is_strongly_transverse(f, g));
  Germ id = identity_germ({1, 1});
  EXPECT_TRUE(is_strongly_transverse(id, id));
}

TEST(Fibre, PaperExampleIsAPoint) {
  Germ f = germ({1, 1}, {2, 2}, {{1, 1}, {2, 1}}, Matrix{{1}, {2}});
  Germ g = germ({1, 1}, {2, 2}, {{1, 1}, {2, 1}}, Matrix{{2}, {1}});
  FibreLedger l = fibre_product(f, g);
  EXPECT_EQ(l.w_model, ModelCorner(0, 0));
  EXPECT_TRUE(l.registry.empty());
  EXPECT_TRUE(l.interface.has_type_b());

  CornerIdentityReport rep = corner_identity_check(f, g);
  EXPECT_FALSE(rep.holds);
  ASSERT_FALSE(rep.levels.empty());
  EXPECT_EQ(rep.levels[0].lhs, 1u);
  EXPECT_EQ(rep.levels[0].rhs, 2u);
  for (std::size_t i = 1; i < rep.levels.size(); ++i) {
    EXPECT_EQ(rep.levels[i].lhs, 0u);
    EXPECT_EQ(rep.levels[i].rhs, 0u);
  }
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(rep.witness->a, StratumLabel{1});
  EXPECT_EQ(rep.witness->b, StratumLabel{1});
  EXPECT_EQ(rep.witness->l, (StratumLabel{1, 2}));
}

TEST(Fibre, DiagonalOfTheHalfLine) {
  Germ id = identity_germ({1, 1});
  FibreLedger l = fibre_product(id, id);
  EXPECT_EQ(l.w_model, ModelCorner(1, 1));
  ASSERT_EQ(l.registry.size(), 1u);
  EXPECT_EQ(l.registry[0].type, FaceType::FromClass);
  EXPECT_EQ(l.pi_x, id);
  EXPECT_EQ(l.pi_y, id);
  CornerIdentityReport rep = corner_identity_check(id, id);
  EXPECT_TRUE(rep.holds);
  ASSERT_GE(rep.levels.size(), 2u);
  EXPECT_EQ(rep.levels[0].lhs, 1u);
  EXPECT_EQ(rep.levels[1].lhs, 1u);
  for (std::size_t i = 2; i < rep.levels.size(); ++i) EXPECT_EQ(rep.levels[i].rhs, 0u);
}

TEST(Fibre, PullbackAlongIdentity) {
  Germ inc = face_inclusion_germ({3, 2}, 1);
  FibreLedger l = fibre_product(inc, identity_germ({3, 2}));
  EXPECT_EQ(l.w_model, inc.source());
  EXPECT_EQ(l.pi_y, inc);
}

TEST(Fibre, ConditionAFailsForSomeTransversePairs) {
  // f(x) = (x, x) and g(y) = (y, 0): transverse, yet the second face of
  // [0,inf)^2 transfers for f alone to the same face of X as the shared first one.
  Germ f = germ({1, 1}, {2, 2}, {{1, 1}, {2, 1}}, Matrix{{1}, {1}});
  Germ g = germ({1, 1}, {2, 2}, {{1, 1}}, Matrix{{1}, {0}});
  ASSERT_TRUE(is_transverse(f, g));
  TransversalityInterface it = compute_interface(f, g);
  EXPECT_FALSE(it.cond_a);
  EXPECT_TRUE(it.cond_b && it.cond_c && it.cond_d);
  FibreLedger l = fibre_product(f, g);
  EXPECT_EQ(l.w_model, ModelCorner(0, 0));
  Cone c = cone_of(f, g);
  EXPECT_EQ(c.dim, 0u);
  EXPECT_EQ(c.facets, 0u);
}

TEST(Fibre, ModelMatchesPolyhedralCone) {
  Rng rng(31);
  int seen = 0;
  while (seen < 400) {
    auto pair = random_transverse_pair(rng, 6, 4);
    if (!pair) continue;
    ++seen;
    const auto& [f, g] = *pair;
    FibreLedger l = fibre_product(f, g);
    Cone c = cone_of(f, g);
    EXPECT_EQ(static_cast<std::size_t>(l.w_model.dim()), c.dim) << f.to_string() << " | " << g.to_string();
    EXPECT_EQ(static_cast<std::size_t>(l.w_model.depth()), c.facets) << f.to_string() << " | " << g.to_string();
    EXPECT_TRUE(c.simplicial);
    EXPECT_EQ(compose(f, l.pi_x), compose(g, l.pi_y));
  }
}

TEST(Fibre, InterfaceConditionsAgainstDefinitions) {
  Rng rng(32);
  int seen = 0;
  while (seen < 300) {
    auto pair = random_transverse_pair(rng, 6, 4);
    if (!pair) continue;
    ++seen;
    const auto& [f, g] = *pair;
    TransversalityInterface it = compute_interface(f, g);
    std::set<int> both, only_f, only_g;
    for (int j = 1; j <= f.target().depth(); ++j) {
      if (f.transfers(j) && g.transfers(j)) both.insert(j);
      else if (f.transfers(j)) only_f.insert(j);
      else if (g.transfers(j)) only_g.insert(j);
    }
    // (D) read straight off the transfer sets
    EXPECT_EQ(it.cond_d, both.size() + only_f.size() + only_g.size() == static_cast<std::size_t>(f.target().depth()));
    // (B): injectivity on the one-sided parts
    std::set<int> img;
    for (int j : only_f) img.insert(f.transfer_of(j));
    bool b = img.size() == only_f.size();
    img.clear();
    for (int j : only_g) img.insert(g.transfer_of(j));
    b = b && img.size() == only_g.size();
    EXPECT_EQ(it.cond_b, b);
    // the number of type (a) classes
    std::set<int> fb, gb;
    for (int j : both) {
      fb.insert(f.transfer_of(j));
      gb.insert(g.transfer_of(j));
    }
    std::size_t type_a = 0;
    for (const auto& e : it.classes) type_a += e.type_a;
    if (it.cond_c)
      EXPECT_EQ(type_a + both.size(), fb.size() + gb.size());
    EXPECT_EQ(it.has_type_b(), !is_strongly_transverse(f, g));
  }
}

TEST(Fibre, UniversalProperty) {
  Germ id = identity_germ({1, 1});
  FibreLedger l = fibre_product(id, id);
  EXPECT_EQ(check_universal_property(id, id, l, l.pi_x, l.pi_y), identity_germ(l.w_model));
  EXPECT_EQ(check_universal_property(id, id, l, point_germ({1, 1}), point_germ({1, 1})), point_germ(l.w_model));
  // a cone that does not commute
  Germ scaled = germ({1, 1}, {1, 1}, {{1, 1}}, Matrix{{2}});
  EXPECT_THROW(check_universal_property(id, id, l, id, scaled), NoMediator);

  Rng rng(33);
  int seen = 0;
  while (seen < 200) {
    auto pair = random_transverse_pair(rng, 6, 4);
    if (!pair) continue;
    ++seen;
    const auto& [f, g] = *pair;
    FibreLedger lp = fibre_product(f, g);
    ModelCorner w2 = random_model(rng, 0, 3);
    Germ k = random_germ(rng, w2, lp.w_model);
    EXPECT_EQ(check_universal_property(f, g, lp, compose(lp.pi_x, k), compose(lp.pi_y, k)), k);
  }
}

TEST(Fibre, MatchedTriplesAndDepthInequality) {
  Germ f = germ({1, 1}, {2, 2}, {{1, 1}, {2, 1}}, Matrix{{1}, {2}});
  Germ g = germ({1, 1}, {2, 2}, {{1, 1}, {2, 1}}, Matrix{{2}, {1}});
  auto t = matched_triples(f, g);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].level(), 0);
  EXPECT_EQ(t[1].level(), 0);
  auto [rf, rg] = restricted_pair(f, g, t[1]);
  EXPECT_EQ(rf.source(), ModelCorner(0, 0));
  EXPECT_EQ(rf.target(), ModelCorner(0, 0));
}

TEST(Fibre, CornerIdentityOnProducts) {
  // X = M x Z, Y = Z x N over Z by projections
  ModelCorner m(1, 1), z(2, 1), n(1, 1);
  Germ f = projection_germ(m, z, 1), g = projection_germ(z, n, 0);
  CornerIdentityReport rep = corner_identity_check(f, g);
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.w_model, ModelCorner(4, 3));
  // C_1 of M x Z x N has three faces
  EXPECT_EQ(rep.levels[1].lhs, 3u);
}

TEST(Fibre, BoundaryFormulas) {
  Germ proj = projection_germ({1, 1}, {1, 1}, 0);
  Germ id = identity_germ({1, 1});
  FormulaReport minus = boundary_formula_check(proj, id, BoundaryFormula::MinusBoundary);
  EXPECT_TRUE(minus.holds);
  FormulaReport one = boundary_formula_check(proj, id, BoundaryFormula::OneSubmersion);
  EXPECT_TRUE(one.holds);
  EXPECT_FALSE(one.extension);
  // one plus face of X plus the face of Y
  EXPECT_EQ(one.terms.size(), 2u);
  FormulaReport both = boundary_formula_check(proj, id, BoundaryFormula::BothSubmersions);
  EXPECT_TRUE(both.holds);
  EXPECT_THROW(boundary_formula_check(proj, id, BoundaryFormula::FlatTarget), HypothesisNotMet);
  Germ diag = germ({1, 1}, {2, 2}, {{1, 1}, {2, 1}}, Matrix{{1}, {1}});
  EXPECT_THROW(boundary_formula_check(diag, identity_germ({2, 2}), BoundaryFormula::OneSubmersion),
               HypothesisNotMet);
}
