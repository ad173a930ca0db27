#include <corners/complex.hpp>
#include <corners/errors.hpp>
#include <corners/fibre.hpp>
#include <corners/orient.hpp>
#include <corners/random.hpp>
#include <corners/verify.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace corners {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

constexpr std::size_t kMaxReported = 20;

std::string pair_text(const CornerMapGerm& f, const CornerMapGerm& g) {
  return "f=" + f.to_string() + ", g=" + g.to_string();
}

// All models of dimension at most n.
std::vector<ModelCorner> models_up_to(int n) {
  std::vector<ModelCorner> out;
  for (int d = 0; d <= n; ++d)
    for (int k = 0; k <= d; ++k) out.emplace_back(d, k);
  return out;
}

std::uint64_t brute_unordered(int k, int j) {
  std::uint64_t count = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask)
    if (__builtin_popcount(mask) == j) ++count;
  return count;
}

std::uint64_t brute_ordered(int k, int j, unsigned used = 0) {
  if (j == 0) return 1;
  std::uint64_t count = 0;
  for (int i = 0; i < k; ++i)
    if (!(used & (1u << i))) count += brute_ordered(k, j - 1, used | (1u << i));
  return count;
}

int sign_of_det(const Matrix& m) { return sgn(determinant(m)); }

// Rows: X coordinates then Y coordinates, for X = M x Z and Y = Z x N.
// Columns: standard coordinates of M x Z x N.
Matrix triple_embedding(const ModelCorner& m, const ModelCorner& z, const ModelCorner& n,
                        int& reorder_sign) {
  const ModelCorner xs[] = {m, z}, ys[] = {z, n}, all[] = {m, z, n};
  ProductLayout lx = product_layout(xs), ly = product_layout(ys), l3 = product_layout(all);
  reorder_sign = l3.reorder_sign;
  const int mx = lx.model.dim();
  Matrix e(uz(mx + ly.model.dim()), uz(l3.model.dim()));
  for (int i = 0; i < m.dim(); ++i) e(uz(lx.coordinate_of[0][uz(i)]), uz(l3.coordinate_of[0][uz(i)])) = 1;
  for (int i = 0; i < z.dim(); ++i) {
    int col = l3.coordinate_of[1][uz(i)];
    e(uz(lx.coordinate_of[1][uz(i)]), uz(col)) = 1;
    e(uz(mx + ly.coordinate_of[0][uz(i)]), uz(col)) = 1;
  }
  for (int i = 0; i < n.dim(); ++i)
    e(uz(mx + ly.coordinate_of[1][uz(i)]), uz(l3.coordinate_of[2][uz(i)])) = 1;
  return e;
}

void record(SuiteResult& r, const SignReport& rep, const std::string& context) {
  r.check(rep.holds, rep.identity + " [" + context + "]" +
                         (rep.failures.empty() ? std::string() : ": " + rep.failures.front()));
}

void record(SuiteResult& r, const FormulaReport& rep, const std::string& context) {
  std::string what = to_string(rep.formula) + (rep.extension ? " (b-submersive extension)" : "") +
                     " [" + context + "]" +
                     (rep.failures.empty() ? std::string() : ": " + rep.failures.front());
  if (rep.extension && !rep.holds) what = "finding: " + what;
  r.check(rep.holds, what);
}

int random_sign(Rng& rng) { return rng.coin() ? 1 : -1; }

// Projection of product(product(a, b), c) onto a, b or c.
CornerMapGerm triple_projection(const ModelCorner& a, const ModelCorner& b, const ModelCorner& c,
                                int which) {
  ModelCorner ab = product(a, b);
  if (which == 2) return projection_germ(ab, c, 1);
  return compose(projection_germ(a, b, which), projection_germ(ab, c, 0));
}

}  // namespace

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++counters["failed checks"];
  if (failures.size() < kMaxReported) failures.push_back(what);
}

void SuiteResult::merge(const SuiteResult& other) {
  cases += other.cases;
  checks += other.checks;
  for (auto& [k, v] : other.counters) counters[k] += v;
  for (auto& f : other.failures)
    if (failures.size() < kMaxReported) failures.push_back(f);
}

SuiteResult functor_suite(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "functor";
  Rng rng(opt.seed);
  const int cases = opt.cases ? opt.cases : 1000;
  for (int n = 0; n < cases; ++n) {
    ModelCorner x = random_model(rng, 0, opt.max_dim), y = random_model(rng, 0, opt.max_dim);
    ModelCorner z = random_model(rng, 0, opt.max_dim);
    CornerMapGerm f = random_germ(rng, x, y), g = random_germ(rng, y, z);
    CornerMapGerm gf = compose(g, f);
    ++r.cases;
    const std::string ctx = pair_text(f, g);
    for (const auto& a : all_subsets(x.depth())) {
      ++r.counters["strata"];
      CornerPointMap cf = corner_map(f, a);
      r.check(corner_map(gf, a) == compose(corner_map(g, cf.target_label), cf),
              "C(g o f) = C(g) o C(f) at " + to_string(a) + " [" + ctx + "]");
      CornerPointMap hf = hat_corner_map(f, a);
      r.check(hat_corner_map(gf, a) == compose(hat_corner_map(g, hf.target_label), hf),
              "hat C(g o f) = hat C(g) o hat C(f) at " + to_string(a) + " [" + ctx + "]");
      CornerPointMap id{a, a, identity_germ(stratum_model(x, a))};
      r.check(corner_map(identity_germ(x), a) == id, "C(id) = id at " + to_string(a));
      r.check(hat_corner_map(identity_germ(x), a) == id, "hat C(id) = id at " + to_string(a));
    }
    r.check(!is_submersion(f) || is_b_submersive(f), "submersion is b-submersive [" + f.to_string() + "]");
    std::vector<Rational> v(uz(x.dim()));
    for (int i = 0; i < x.dim(); ++i) v[uz(i)] = i < x.depth() ? abs(rng.rational()) : rng.rational();
    r.check(maps_into_sector(f, v), "J maps the inward sector into the target sector [" + f.to_string() + "]");
  }
  return r;
}

SuiteResult product_suite(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "products";
  const int n_max = std::max(6, opt.max_dim);
  for (const auto& m1 : models_up_to(n_max))
    for (const auto& m2 : models_up_to(n_max - m1.dim())) {
      ModelCorner p = product(m1, m2);
      ++r.cases;
      const std::string ctx = m1.to_string() + " x " + m2.to_string();
      for (int j = 0; j <= p.depth(); ++j) {
        std::uint64_t conv = 0, binom_conv = 0;
        for (int i = 0; i <= j; ++i) {
          conv += corners_count(m1, i) * corners_count(m2, j - i);
          binom_conv += binomial(j, i) * iterated_boundary_count(m1, i) *
                        iterated_boundary_count(m2, j - i);
        }
        r.check(corners_count(p, j) == conv, "corner count convolution at j=" + std::to_string(j) + " [" + ctx + "]");
        r.check(corners_count(p, j) == brute_unordered(p.depth(), j),
                "corner count vs enumeration at j=" + std::to_string(j) + " [" + ctx + "]");
        r.check(strata(p, j).size() == corners_count(p, j), "strata listing at j=" + std::to_string(j));
        r.check(iterated_boundary_count(p, j) == binom_conv,
                "iterated boundary convolution at j=" + std::to_string(j) + " [" + ctx + "]");
        r.check(iterated_boundary_count(p, j) == brute_ordered(p.depth(), j),
                "iterated boundary vs enumeration at j=" + std::to_string(j) + " [" + ctx + "]");
      }
    }
  return r;
}

SuiteResult poly_suite(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "poly";
  Rng rng(opt.seed);
  const int cases = opt.cases ? opt.cases : 300;
  const int dim = std::min(opt.max_dim, 3);
  for (int n = 0; n < cases; ++n) {
    ModelCorner x = random_model(rng, 0, dim), y = random_model(rng, 0, dim);
    ModelCorner z = random_model(rng, 0, dim);
    PolyMap f = random_joyce_map(rng, x, y), g = random_joyce_map(rng, y, z);
    ++r.cases;
    PolyMap gf = compose_poly(g, f);
    r.check(classify_at_origin(f).kind == MapClass::JoyceSmooth, "generated map is smooth");
    r.check(classify_at_origin(gf).kind == MapClass::JoyceSmooth, "composite is smooth");
    r.check(germ_of(gf) == compose(germ_of(g), germ_of(f)),
            "lowering commutes with composition [" + germ_of(f).to_string() + ", " +
                germ_of(g).to_string() + "]");
  }
  return r;
}

SuiteResult fibre_suite(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "fibre";
  Rng rng(opt.seed);
  const int cases = opt.cases ? opt.cases : 500;
  while (static_cast<int>(r.cases) < cases) {
    auto pair = random_transverse_pair(rng, 6, opt.max_dim);
    if (!pair) continue;
    const auto& [f, g] = *pair;
    ++r.cases;
    const std::string ctx = pair_text(f, g);
    const int m = f.source().dim(), n = g.source().dim(), p = f.target().dim();
    const int a = f.source().depth(), b = g.source().depth(), c = f.target().depth();
    TransversalityInterface iface = compute_interface(f, g);
    r.check(iface.cond_a, "condition (A) holds for a transverse pair [" + ctx + "]");
    r.check(iface.cond_b, "condition (B) holds for a transverse pair [" + ctx + "]");
    r.check(iface.cond_c, "condition (C) holds for a transverse pair [" + ctx + "]");
    r.check(iface.cond_d, "condition (D) holds for a transverse pair [" + ctx + "]");
    if (!iface.cond_a) ++r.counters["transverse pairs violating (A)"];
    const bool strong = is_strongly_transverse(f, g);
    if (strong) ++r.counters["strongly transverse"];
    r.check(strong == !iface.has_type_b(), "strong transversality criteria agree [" + ctx + "]");
    for (const auto& t : matched_triples(f, g)) {
      ++r.counters["matched triples"];
      r.check(t.level() >= 0, "|A|+|B| >= |L| at " + to_string(t) + " [" + ctx + "]");
      auto [rf, rg] = restricted_pair(f, g, t);
      r.check(is_transverse(rf, rg), "restricted pair transverse at " + to_string(t) + " [" + ctx + "]");
    }
    FibreLedger l;
    try {
      l = fibre_product(f, g);
    } catch (const InternalInvariantViolation& e) {
      r.check(false, std::string("fibre product: ") + e.what() + " [" + ctx + "]");
      continue;
    }
    r.check(l.w_model.dim() == m + n - p, "dim W = dim X + dim Y - dim Z [" + ctx + "]");
    r.check(static_cast<int>(l.registry.size()) == a + b - c, "registry size = a+b-c [" + ctx + "]");
    r.check(l.w_model.depth() == static_cast<int>(l.registry.size()), "depth W = registry size");
    if (strong) {
      int by_type[3] = {0, 0, 0};
      for (const auto& e : l.registry) ++by_type[static_cast<int>(e.type)];
      r.check(by_type[0] + by_type[1] + by_type[2] == a + b - c, "face types add up to a+b-c [" + ctx + "]");
    }
    Matrix a_mat = Matrix::hstack(f.jacobian(), -g.jacobian());
    r.check(rank(l.kernel_map) == uz(l.w_model.dim()) &&
                (a_mat * l.kernel_map) == Matrix(uz(p), uz(l.w_model.dim())) &&
                l.kernel_map.cols() == uz(m + n) - rank(a_mat),
            "projections identify TW with the kernel [" + ctx + "]");
    r.check(compose(f, l.pi_x) == compose(g, l.pi_y), "fibre square commutes [" + ctx + "]");
  }
  return r;
}

SuiteResult corner_identity_suite(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "corners";
  {
    CornerMapGerm f(ModelCorner(1, 1), ModelCorner(2, 2), {{1, 1}, {2, 1}}, Matrix{{1}, {2}});
    CornerMapGerm g(ModelCorner(1, 1), ModelCorner(2, 2), {{1, 1}, {2, 1}}, Matrix{{2}, {1}});
    CornerIdentityReport rep = corner_identity_check(f, g);
    bool ok = !rep.holds && rep.w_model == ModelCorner(0, 0) && rep.witness && !rep.levels.empty() &&
              rep.levels[0].lhs == 1 && rep.levels[0].rhs == 2;
    for (std::size_t i = 1; i < rep.levels.size(); ++i)
      ok = ok && rep.levels[i].lhs == 0 && rep.levels[i].rhs == 0;
    r.check(ok, "(x,2x) against (2y,y): one point against two at i=0, empty above");
  }
  Rng rng(opt.seed);
  const int cases = opt.cases ? opt.cases : 500;
  int attempts = 0;
  while (static_cast<int>(r.cases) < cases && attempts < 100 * cases) {
    ++attempts;
    auto pair = random_transverse_pair(rng, 6, opt.max_dim);
    if (!pair) continue;
    const auto& [f, g] = *pair;
    CornerIdentityReport rep = corner_identity_check(f, g);
    const std::string ctx = pair_text(f, g);
    if (!rep.strongly_transverse) {
      ++r.counters["not strongly transverse"];
      r.check(rep.witness.has_value() && !rep.holds, "failure witness for a non-strongly transverse pair [" + ctx + "]");
      continue;
    }
    ++r.cases;
    r.counters["levels"] += rep.levels.size();
    r.check(rep.rhs_transverse, "every restricted pair is transverse [" + ctx + "]");
    r.check(rep.models_match, "restricted fibre products have the expected models [" + ctx + "]");
    r.check(rep.lemma_inequality, "|A|+|B| >= |L| [" + ctx + "]");
    for (const auto& lv : rep.levels)
      r.check(lv.bijective && lv.lhs == lv.rhs,
              "bijection at i=" + std::to_string(lv.i) + " [" + ctx + "]");
    r.check(rep.holds, "corner identity holds [" + ctx + "]" +
                           (rep.failures.empty() ? std::string() : ": " + rep.failures.front()));
  }
  r.check(static_cast<int>(r.cases) >= cases, "enough strongly transverse pairs were generated");
  return r;
}

SuiteResult universal_suite(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "universal";
  Rng rng(opt.seed);
  const int cases = opt.cases ? opt.cases : 500;
  while (static_cast<int>(r.cases) < cases) {
    auto pair = random_transverse_pair(rng, 6, opt.max_dim);
    if (!pair) continue;
    const auto& [f, g] = *pair;
    FibreLedger l = fibre_product(f, g);
    ++r.cases;
    const std::string ctx = pair_text(f, g);
    try {
      r.check(check_universal_property(f, g, l, l.pi_x, l.pi_y) == identity_germ(l.w_model),
              "mediator of the fibre square itself is the identity [" + ctx + "]");
      ModelCorner w2 = random_model(rng, 0, 3);
      CornerMapGerm k = random_germ(rng, w2, l.w_model);
      CornerMapGerm h = check_universal_property(f, g, l, compose(l.pi_x, k), compose(l.pi_y, k));
      r.check(h == k, "mediator recovers the cone's map [" + ctx + ", k=" + k.to_string() + "]");
      r.check(compose(l.pi_x, h) == compose(l.pi_x, k) && compose(l.pi_y, h) == compose(l.pi_y, k),
              "mediator round-trips [" + ctx + "]");
      r.check(check_universal_property(f, g, l, point_germ(f.source()), point_germ(g.source())) ==
                  point_germ(l.w_model),
              "mediator of the point cone is the point germ [" + ctx + "]");
    } catch (const NoMediator& e) {
      r.check(false, std::string("no mediator: ") + e.what() + " [" + ctx + "]");
    }
  }
  return r;
}

SuiteResult sign_suite(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "signs";
  Rng rng(opt.seed);

  for (const auto& m : models_up_to(6))
    for (int i = 1; i <= m.depth(); ++i) {
      Matrix e(uz(m.dim()), uz(m.dim()));
      e(uz(i - 1), 0) = -1;
      for (int c = 1, col = 1; c <= m.dim(); ++c)
        if (c != i) e(uz(c - 1), uz(col++)) = 1;
      r.check(boundary_orientation_sign(m, i) == sign_of_det(e),
              "boundary sign of face " + std::to_string(i) + " of " + m.to_string());
    }

  for (const auto& m : models_up_to(4)) {
    std::vector<int> faces(uz(m.depth()));
    for (int i = 0; i < m.depth(); ++i) faces[uz(i)] = i + 1;
    const int base = iterated_boundary_sign(m, faces);
    std::vector<int> perm = faces;
    do {
      std::vector<int> idx(perm.size());
      for (std::size_t t = 0; t < perm.size(); ++t) idx[t] = perm[t] - 1;
      r.check(iterated_boundary_sign(m, perm) == permutation_sign(idx) * base,
              "permuting the faces of the deepest boundary of " + m.to_string());
    } while (std::next_permutation(perm.begin(), perm.end()));
    OrientedModel o{m, -1};
    r.check(o.opposite().opposite() == o, "double flip");
  }

  // Projection instances: every factor model of dimension at most 2.
  const std::vector<ModelCorner> small = models_up_to(2);
  for (const auto& a : small)
    for (const auto& b : small)
      for (int s = 0; s < 4; ++s) {
        const int oa = s & 1 ? -1 : 1, ob = s & 2 ? -1 : 1;
        const std::string ctx = a.to_string() + ", " + b.to_string();
        ++r.cases;
        record(r, verify_product_swap(a, b, oa, ob), ctx);
        record(r, verify_axiom_point(a, b, oa, ob), ctx);
        CornerMapGerm proj = projection_germ(a, b, 0);
        record(r, verify_minus_boundary(proj, product_orientation(a, oa, b, ob), oa), ctx);
        record(r, verify_axiom_identity(proj, product_orientation(a, oa, b, ob), oa), ctx);
      }
  for (const auto& m : small)
    for (const auto& z : small)
      for (const auto& n : small) {
        const int om = random_sign(rng), oz = random_sign(rng), on = random_sign(rng);
        const int ox = product_orientation(m, om, z, oz), oy = product_orientation(z, oz, n, on);
        CornerMapGerm f = projection_germ(m, z, 1), g = projection_germ(z, n, 0);
        const std::string ctx = m.to_string() + ", " + z.to_string() + ", " + n.to_string();
        ++r.cases;
        FibreLedger l = fibre_product(f, g);
        int reorder = 1;
        Matrix e = triple_embedding(m, z, n, reorder);
        const int ow = fibre_product_orientation(f, g, ox, oy, oz, l);
        r.check(ow * identification_sign(l.kernel_map, e) == reorder * om * oz * on,
                "M x_Z (Z x N) = M x Z x N as oriented models [" + ctx + "]");
        record(r, verify_swap(f, g, ox, oy, oz), ctx);
        r.check(splitting_independent(f, g, ox, oy, oz), "splitting independence [" + ctx + "]");
        if (z.depth() == 0) record(r, verify_boundary_formula(f, g, BoundaryFormula::FlatTarget, ox, oy, oz), ctx);
        record(r, verify_boundary_formula(f, g, BoundaryFormula::OneSubmersion, ox, oy, oz), ctx);
        record(r, verify_boundary_formula(f, g, BoundaryFormula::BothSubmersions, ox, oy, oz), ctx);
      }
  for (const auto& m1 : small)
    for (const auto& y : small)
      for (const auto& m2 : small)
        for (const auto& z : small)
          for (const auto& m3 : small) {
            std::vector<int> signs(5);
            for (auto& s : signs) s = random_sign(rng);
            const std::string ctx = m1.to_string() + ", " + y.to_string() + ", " + m2.to_string() +
                                    ", " + z.to_string() + ", " + m3.to_string();
            ++r.cases;
            {
              // V = M1 x Y, W = Y x M2 x Z, X = Z x M3
              CornerMapGerm d = projection_germ(m1, y, 1);
              CornerMapGerm e = triple_projection(y, m2, z, 0), f = triple_projection(y, m2, z, 2);
              CornerMapGerm g = projection_germ(z, m3, 0);
              record(r, verify_associativity(d, e, f, g, signs), ctx);
            }
            {
              // V = Y x M1 x Z, W = Y x M2, X = Z x M3
              CornerMapGerm d = triple_projection(y, m1, z, 0), e = triple_projection(y, m1, z, 2);
              CornerMapGerm f = projection_germ(y, m2, 0), g = projection_germ(z, m3, 0);
              record(r, verify_direct_product(d, e, f, g, signs), ctx);
            }
          }

  // Random germ instances.
  const int cases = opt.cases ? opt.cases : 200;
  const int dim = std::min(opt.max_dim, 4);
  int done = 0;
  while (done < cases) {
    auto pair = random_transverse_pair(rng, 6, dim);
    if (!pair) continue;
    const auto& [f, g] = *pair;
    const int ox = random_sign(rng), oy = random_sign(rng), oz = random_sign(rng);
    const std::string ctx = pair_text(f, g);
    ++done;
    ++r.cases;
    ++r.counters["random transverse pairs"];
    record(r, verify_swap(f, g, ox, oy, oz), ctx);
    r.check(splitting_independent(f, g, ox, oy, oz), "splitting independence [" + ctx + "]");
    record(r, verify_axiom_identity(f, ox, oz), ctx);
    if (f.target().depth() == 0) {
      ++r.counters["random flat-target instances"];
      record(r, verify_boundary_formula(f, g, BoundaryFormula::FlatTarget, ox, oy, oz), ctx);
    }
  }
  for (done = 0; done < cases;) {
    ModelCorner x = random_model(rng, 0, 4), z = random_model(rng, 0, std::min(dim, x.dim()));
    ModelCorner y = random_model(rng, 0, 6 - x.dim());
    auto f = random_submersion(rng, x, z);
    if (!f) continue;
    const int ox = random_sign(rng), oy = random_sign(rng), oz = random_sign(rng);
    CornerMapGerm g = random_germ(rng, y, z);
    ++done;
    ++r.cases;
    ++r.counters["random submersion instances"];
    record(r, verify_minus_boundary(*f, ox, oz), f->to_string());
    if (!is_transverse(*f, g)) continue;
    record(r, verify_boundary_formula(*f, g, BoundaryFormula::OneSubmersion, ox, oy, oz), pair_text(*f, g));
    if (auto g2 = random_submersion(rng, y, z))
      record(r, verify_boundary_formula(*f, *g2, BoundaryFormula::BothSubmersions, ox, oy, oz),
             pair_text(*f, *g2));
  }
  for (done = 0; done < cases;) {
    ModelCorner v = random_model(rng, 0, 2), w = random_model(rng, 0, 2), x = random_model(rng, 0, 2);
    ModelCorner y = random_model(rng, 0, 2), z = random_model(rng, 0, 2);
    CornerMapGerm d = random_germ(rng, v, y), e = random_germ(rng, w, y);
    CornerMapGerm f = random_germ(rng, w, z), g = random_germ(rng, x, z);
    std::vector<int> signs(5);
    for (auto& s : signs) s = random_sign(rng);
    try {
      SignReport rep = verify_associativity(d, e, f, g, signs);
      ++done;
      ++r.cases;
      ++r.counters["random associativity instances"];
      record(r, rep, "d=" + d.to_string() + ", e=" + e.to_string() + ", " + pair_text(f, g));
    } catch (const HypothesisNotMet&) {
    }
  }
  return r;
}

SuiteResult formula_suite(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "formulas";
  Rng rng(opt.seed);
  const int cases = opt.cases ? opt.cases : 200;
  const int dim = std::min(opt.max_dim, 4);
  auto run = [&](const CornerMapGerm& f, const CornerMapGerm& g, BoundaryFormula k, const char* counter) {
    const int ox = random_sign(rng), oy = random_sign(rng), oz = random_sign(rng);
    FormulaReport rep = boundary_formula_check(f, g, k);
    ++r.counters[counter];
    ++r.cases;
    record(r, rep, pair_text(f, g));
    if (k == BoundaryFormula::MinusBoundary) return;
    SignReport sr = verify_boundary_formula(f, g, k, ox, oy, oz);
    if (rep.extension && !sr.holds)
      r.check(false, "finding: oriented " + to_string(k) + " (b-submersive extension) [" + pair_text(f, g) + "]");
    else
      record(r, sr, pair_text(f, g));
  };
  auto models = [&](ModelCorner& x, ModelCorner& y, ModelCorner& z) {
    x = random_model(rng, 0, 4);
    z = random_model(rng, 0, std::min(dim, x.dim()));
    y = random_model(rng, 0, 6 - x.dim());
  };

  // Projection instances.
  for (const auto& m : models_up_to(2))
    for (const auto& z : models_up_to(2))
      for (const auto& n : models_up_to(2)) {
        CornerMapGerm f = projection_germ(m, z, 1), g = projection_germ(z, n, 0);
        run(f, identity_germ(z), BoundaryFormula::MinusBoundary, "projection minus-boundary");
        if (z.depth() == 0) run(f, g, BoundaryFormula::FlatTarget, "projection flat-target");
        run(f, g, BoundaryFormula::OneSubmersion, "projection one-submersion");
        run(f, g, BoundaryFormula::BothSubmersions, "projection both-submersions");
      }

  int k = 0;
  for (int tries = 0; k < cases && tries < 200 * cases; ++tries) {
    ModelCorner x, y, z;
    models(x, y, z);
    if (auto f = random_submersion(rng, x, z)) {
      run(*f, identity_germ(z), BoundaryFormula::MinusBoundary, "minus-boundary");
      ++k;
    }
  }
  for (k = 0; k < cases;) {
    const int m = rng.uniform(0, 4), n = rng.uniform(0, 6 - m), p = rng.uniform(0, std::min(dim, m + n));
    ModelCorner x = random_model_of_dim(rng, m), y = random_model_of_dim(rng, n), z(p, 0);
    CornerMapGerm f = random_germ(rng, x, z), g = random_germ(rng, y, z);
    if (!is_transverse(f, g)) continue;
    run(f, g, BoundaryFormula::FlatTarget, "flat-target");
    ++k;
  }
  for (k = 0; k < cases;) {
    ModelCorner x, y, z;
    models(x, y, z);
    auto f = random_submersion(rng, x, z);
    if (!f) continue;
    CornerMapGerm g = random_germ(rng, y, z);
    if (!is_transverse(*f, g)) continue;
    run(*f, g, BoundaryFormula::OneSubmersion, "one-submersion");
    ++k;
  }
  for (k = 0; k < cases;) {
    ModelCorner x, y, z;
    models(x, y, z);
    auto f = random_submersion(rng, x, z), g = random_submersion(rng, y, z);
    if (!f || !g) continue;
    run(*f, *g, BoundaryFormula::BothSubmersions, "both-submersions");
    ++k;
  }
  // b-submersive but not submersions.
  int tries = 0;
  for (k = 0; k < cases && tries < 1000 * cases; ++tries) {
    ModelCorner x, y, z;
    models(x, y, z);
    auto f = random_b_submersive(rng, x, z);
    if (!f || is_submersion(*f)) continue;
    CornerMapGerm g = random_germ(rng, y, z);
    if (!is_transverse(*f, g)) continue;
    run(*f, g, BoundaryFormula::OneSubmersion, "one-submersion, b-submersive extension");
    ++k;
  }
  r.check(k >= cases, "enough b-submersive one-submersion instances");
  for (k = 0, tries = 0; k < cases && tries < 1000 * cases; ++tries) {
    ModelCorner x, y, z;
    models(x, y, z);
    auto f = random_b_submersive(rng, x, z), g = random_b_submersive(rng, y, z);
    if (!f || !g || (is_submersion(*f) && is_submersion(*g)) || !is_transverse(*f, *g)) continue;
    run(*f, *g, BoundaryFormula::BothSubmersions, "both-submersions, b-submersive extension");
    ++k;
  }
  r.check(k >= cases, "enough b-submersive both-submersions instances");
  return r;
}

SuiteResult complex_suite(const SuiteOptions&) {
  SuiteResult r;
  r.name = "complex";
  std::vector<std::pair<std::string, CornerComplex>> corpus = {
      {"square", square_complex()},
      {"teardrop", teardrop_complex()},
      {"half-line", half_space_complex(1)},
      {"half-plane", half_space_complex(2)},
      {"line", open_complex(1)},
      {"quadrant", model_complex(ModelCorner(2, 2))},
      {"octant", model_complex(ModelCorner(3, 3))},
  };
  const std::size_t base = corpus.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = 0; j < base; ++j) {
      if (corpus[i].second.dim() + corpus[j].second.dim() > 4) continue;
      corpus.emplace_back(corpus[i].first + " x " + corpus[j].first,
                          product_complex(corpus[i].second, corpus[j].second));
      const CornerComplex& a = corpus[i].second;
      const CornerComplex& b = corpus[j].second;
      const CornerComplex& p = corpus.back().second;
      for (int k = 0; k <= p.max_depth(); ++k) {
        int conv = 0;
        for (int t = 0; t <= k; ++t)
          conv += corners_complex(a, t).count * corners_complex(b, k - t).count;
        r.check(corners_complex(p, k).count == conv,
                "C_" + std::to_string(k) + " components of " + corpus.back().first);
      }
    }

  for (const auto& [name, c] : corpus) {
    ++r.cases;
    ComplexClassification cl = classify(c);
    r.check(!cl.embedded_n || cl.with_faces, "embedded corners imply faces [" + name + "]");
    BoundaryGraph bg = boundary_graph(c);
    for (const auto& mult : bg.multiplicity) {
      int total = 0;
      for (auto [node, count] : mult) total += count;
      r.check(total == 2, "depth-2 multiplicities sum to 2 [" + name + "]");
    }
    CornerComplex dd = boundary_complex(boundary_complex(c));
    r.check(corners_complex(dd, 0).pieces.size() == 2 * corners_complex(c, 2).pieces.size(),
            "each depth-2 piece gives two ordered pieces of the second boundary [" + name + "]");
  }
  ComplexClassification tear = classify(teardrop_complex());
  r.check(!tear.with_faces && !tear.embedded_n, "teardrop is plain only");
  ComplexClassification sq = classify(square_complex());
  r.check(sq.with_faces && sq.embedded_n == 2, "square has embedded corners with N=2");
  r.check(classify(half_space_complex(2)).embedded_n == 1, "half-space is a <1>-manifold");
  r.check(corners_complex(teardrop_complex(), 2).count == 1, "teardrop has one corner");
  r.check(corners_complex(square_complex(), 2).count == 4, "square has four corners");
  r.check(corners_complex(boundary_complex(teardrop_complex()), 0).count == 1,
          "teardrop boundary is connected");
  return r;
}

std::vector<std::string> suite_names() {
  return {"functor", "products", "poly", "fibre", "corners", "universal", "signs", "formulas", "complex"};
}

std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& opt) {
  static const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>> suites = {
      {"functor", functor_suite},     {"products", product_suite},
      {"poly", poly_suite},           {"fibre", fibre_suite},
      {"corners", corner_identity_suite}, {"universal", universal_suite},
      {"signs", sign_suite},          {"formulas", formula_suite},
      {"complex", complex_suite},
  };
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(suites.at(n)(opt));
    return out;
  }
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite: " + name);
  out.push_back(it->second(opt));
  return out;
}

}  // namespace corners
