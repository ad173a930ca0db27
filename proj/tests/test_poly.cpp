#include <corners/errors.hpp>
#include <corners/poly.hpp>
#include <corners/random.hpp>

#include <gtest/gtest.h>

using namespace corners;

namespace {

PolyMap map_of(ModelCorner s, ModelCorner t, std::vector<std::string> comps) {
  return parse_poly_map(s, t, comps);
}

}  // namespace

TEST(Poly, ParseAndPrint) {
  Polynomial p = parse_polynomial("3/2*x1^2*x2 - x2 + 4", 2);
  EXPECT_EQ(p.coefficient({2, 1}), Rational(3, 2));
  EXPECT_EQ(p.coefficient({0, 1}), Rational(-1));
  EXPECT_EQ(p.coefficient({0, 0}), Rational(4));
  EXPECT_EQ(parse_polynomial(p.to_string(), 2), p);
  EXPECT_EQ(parse_polynomial("(x1+x2)^2", 2), parse_polynomial("x1^2 + 2*x1*x2 + x2^2", 2));
  EXPECT_EQ(parse_polynomial("-(x1 - 1)", 1), parse_polynomial("1 - x1", 1));
  EXPECT_THROW(parse_polynomial("x3", 2), ParseError);
  EXPECT_THROW(parse_polynomial("x1 +", 1), ParseError);
  EXPECT_THROW(parse_polynomial("x1^-1", 1), ParseError);
}

TEST(Poly, ArithmeticAgreesWithEvaluation) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform(1, 3);
    auto random_poly = [&] {
      Polynomial p(n);
      for (int k = rng.uniform(0, 4); k > 0; --k) {
        Exponent e(static_cast<std::size_t>(n));
        for (auto& v : e) v = rng.uniform(0, 2);
        p.add_term(e, rng.rational());
      }
      return p;
    };
    Polynomial a = random_poly(), b = random_poly();
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = rng.rational(5, 3);
    EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
    EXPECT_EQ((a - b).evaluate(x), a.evaluate(x) - b.evaluate(x));
    EXPECT_EQ(a.pow(3).evaluate(x), a.evaluate(x) * a.evaluate(x) * a.evaluate(x));
    std::vector<Polynomial> subs;
    std::vector<Rational> inner;
    for (int i = 0; i < n; ++i) {
      subs.push_back(random_poly());
      inner.push_back(subs.back().evaluate(x));
    }
    EXPECT_EQ(a.substitute(subs).evaluate(x), a.evaluate(inner));
  }
}

TEST(Poly, ContentAndDivision) {
  Polynomial p = parse_polynomial("x1^2*x2 + 3*x1^3*x2^2", 2);
  EXPECT_EQ(p.content(), (Exponent{2, 1}));
  EXPECT_EQ(p.divide_monomial({2, 1}), parse_polynomial("1 + 3*x1*x2", 2));
  EXPECT_THROW(p.divide_monomial({3, 0}), std::exception);
}

TEST(Poly, ClassifyExamples) {
  // inclusion [0,inf) -> R: smooth, not a submersion
  Classification inc = classify_at_origin(map_of({1, 1}, {1, 0}, {"x1"}));
  ASSERT_EQ(inc.kind, MapClass::JoyceSmooth);
  EXPECT_TRUE(inc.germ->transfer().empty());
  EXPECT_EQ(inc.germ->jacobian(), (Matrix{{1}}));
  EXPECT_FALSE(is_submersion(*inc.germ));

  // x^2 on [0,inf): b-map with exponent 2, not smooth
  Classification sq = classify_at_origin(map_of({1, 1}, {1, 1}, {"x1^2"}));
  EXPECT_EQ(sq.kind, MapClass::BMap);
  EXPECT_EQ(sq.bmap->exponents, (std::vector<std::vector<int>>{{2}}));

  // x^2 on R: weakly smooth, not smooth, not a b-map
  EXPECT_EQ(classify_at_origin(map_of({1, 0}, {1, 1}, {"x1^2"})).kind, MapClass::WeaklySmoothOnly);

  // x + y
  Classification sum = classify_at_origin(map_of({2, 2}, {1, 1}, {"x1 + x2"}));
  EXPECT_EQ(sum.kind, MapClass::WeaklySmoothOnly);
  EXPECT_EQ(sum.rows[0].unit_at_origin, 0);

  // x y: b-map, exponents (1,1)
  Classification prod = classify_at_origin(map_of({2, 2}, {1, 1}, {"x1*x2"}));
  EXPECT_EQ(prod.kind, MapClass::BMap);
  EXPECT_EQ(prod.bmap->exponents, (std::vector<std::vector<int>>{{1, 1}}));
}

TEST(Poly, NotIntoModel) {
  Classification c = classify_at_origin(map_of({2, 2}, {1, 1}, {"x1 - x2"}));
  ASSERT_EQ(c.kind, MapClass::NotIntoModel);
  ASSERT_TRUE(c.negative_witness);
  EXPECT_LT(parse_polynomial("x1 - x2", 2).evaluate(*c.negative_witness), 0);
  EXPECT_EQ(classify_at_origin(map_of({1, 0}, {1, 1}, {"x1"})).kind, MapClass::NotIntoModel);
  EXPECT_EQ(classify_at_origin(map_of({1, 0}, {1, 1}, {"x1^3"})).kind, MapClass::NotIntoModel);
}

TEST(Poly, SmoothMapsLowerToGerms) {
  PolyMap q = map_of({2, 2}, {3, 2}, {"2*x2 + x2*x1", "0", "x1 - 3*x2 + x1^2"});
  CornerMapGerm g = germ_of(q);
  EXPECT_EQ(g.transfer(), (std::map<int, int>{{1, 2}}));
  EXPECT_EQ(g.flat_faces(), (std::set<int>{2}));
  EXPECT_EQ(g.jacobian(), (Matrix{{0, 2}, {0, 0}, {1, -3}}));
  EXPECT_THROW(germ_of(map_of({2, 2}, {1, 1}, {"x1*x2"})), NotJoyceSmooth);
  EXPECT_THROW(map_of({1, 1}, {1, 1}, {"x1 + 1"}), std::exception);
}

TEST(Poly, LinearRealisationRoundTrips) {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    ModelCorner x = random_model(rng, 0, 4), y = random_model(rng, 0, 4);
    CornerMapGerm f = random_germ(rng, x, y);
    EXPECT_EQ(germ_of(linear_poly_map(f)), f);
  }
}

TEST(Poly, LoweringCommutesWithComposition) {
  // the diagonal followed by the product map is x -> x^2: a b-map, not smooth
  PolyMap diag = map_of({1, 1}, {2, 2}, {"x1", "x1"});
  PolyMap mult = map_of({2, 2}, {1, 1}, {"x1*x2"});
  EXPECT_EQ(classify_at_origin(compose_poly(mult, diag)).kind, MapClass::BMap);
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    ModelCorner x = random_model(rng, 0, 3), y = random_model(rng, 0, 3), z = random_model(rng, 0, 3);
    PolyMap f = random_joyce_map(rng, x, y), g = random_joyce_map(rng, y, z);
    EXPECT_EQ(germ_of(compose_poly(g, f)), compose(germ_of(g), germ_of(f)));
  }
}
