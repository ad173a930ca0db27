#include <corners/orient.hpp>
#include <corners/errors.hpp>

namespace corners {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

// (-1)^n
int pm(int n) { return n % 2 ? -1 : 1; }

void check_sign(int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("orientation sign must be +1 or -1");
}

// Columns are the product's standard coordinates, rows the concatenated ones.
Matrix product_embedding(const ModelCorner& x, const ModelCorner& y) {
  const ModelCorner factors[] = {x, y};
  ProductLayout l = product_layout(factors);
  Matrix e(uz(l.model.dim()), uz(l.model.dim()));
  int row = 0;
  for (int t = 0; t < 2; ++t)
    for (int c : l.coordinate_of[uz(t)]) e(uz(row++), uz(c)) = 1;
  return e;
}

struct Side {
  int sign;
  Matrix embedding;
};

SignCheck compare(const std::string& what, int predicted, const Side& lhs, const Side& rhs) {
  SignCheck c;
  c.description = what;
  c.predicted = predicted;
  c.lhs = lhs.sign;
  c.rhs = rhs.sign;
  c.identification = identification_sign(lhs.embedding, rhs.embedding);
  c.ok = c.identification != 0 && lhs.sign == predicted * rhs.sign * c.identification;
  return c;
}

void finish(SignReport& rep) {
  for (const auto& c : rep.checks)
    if (!c.ok)
      rep.failures.push_back(c.description + ": lhs " + std::to_string(c.lhs) + ", rhs " +
                             std::to_string(c.rhs) + ", predicted " + std::to_string(c.predicted) +
                             (c.identification == 0 ? ", no identification" : ""));
  rep.holds = rep.failures.empty();
}

// Oriented fibre product embedded in the ambient space of its factors.
Side oriented_fibre(const CornerMapGerm& f, const CornerMapGerm& g, int ox, int oy, int oz,
                    const Matrix& ex, const Matrix& ey) {
  FibreLedger l = fibre_product(f, g);
  int s = fibre_product_orientation(f, g, ox, oy, oz, l);
  return {s, Matrix::block_diagonal(ex, ey) * l.kernel_map};
}

}  // namespace

int boundary_orientation_sign(const ModelCorner& m, int face) {
  if (face < 1 || face > m.depth())
    throw BadFace("face " + std::to_string(face) + " of " + m.to_string());
  const int n = m.dim();
  Matrix b(uz(n), uz(n));
  b(uz(face - 1), 0) = -1;
  int col = 1;
  for (int i = 1; i <= n; ++i)
    if (i != face) b(uz(i - 1), uz(col++)) = 1;
  return sgn(determinant(b));
}

int product_orientation(const ModelCorner& x, int ox, const ModelCorner& y, int oy) {
  check_sign(ox);
  check_sign(oy);
  const ModelCorner factors[] = {x, y};
  return ox * oy * product_layout(factors).reorder_sign;
}

int fibre_product_orientation(const CornerMapGerm& f, const CornerMapGerm& g, int ox, int oy,
                              int oz, const FibreLedger& ledger, Splitting splitting) {
  check_sign(ox);
  check_sign(oy);
  check_sign(oz);
  if (!is_transverse(f, g)) throw NotTransverse("maps are not transverse");
  const int p = f.target().dim();
  Matrix a = Matrix::hstack(f.jacobian(), -g.jacobian());
  auto cols = independent_columns(a, splitting == Splitting::Rightmost);
  if (cols.size() != uz(p)) throw InternalInvariantViolation("splitting: rank deficit");
  auto inv = inverse(a.select_cols(cols));
  if (!inv) throw InternalInvariantViolation("splitting: singular block");
  Matrix s(a.cols(), uz(p));
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (int c = 0; c < p; ++c) s(cols[k], uz(c)) = (*inv)(k, uz(c));
  Matrix m = Matrix::hstack(ledger.kernel_map, s);
  int det_sign = sgn(determinant(m));
  if (det_sign == 0) throw InternalInvariantViolation("splitting does not complement the kernel");
  int dim_y = g.source().dim();
  return det_sign * ox * oy * oz * pm(dim_y * p);
}

int identification_sign(const Matrix& e_left, const Matrix& e_right) {
  if (e_left.rows() != e_right.rows() || e_left.cols() != e_right.cols()) return 0;
  auto phi = solve(e_left, e_right);
  if (!phi) return 0;
  return sgn(determinant(*phi));
}

SignReport verify_minus_boundary(const CornerMapGerm& f, int ox, int oy) {
  if (!is_submersion(f)) throw HypothesisNotMet("minus-boundary identity needs a submersion");
  SignReport rep;
  rep.identity = "minus-boundary";
  const ModelCorner& x = f.source();
  const ModelCorner& y = f.target();
  int predicted = pm(x.dim() + y.dim());
  for (auto [j, i] : f.transfer()) {
    Side lhs{ox * boundary_orientation_sign(x, i), face_inclusion_germ(x, i).jacobian()};
    CornerMapGerm inc = face_inclusion_germ(y, j);
    int o_face = oy * boundary_orientation_sign(y, j);
    Side rhs = oriented_fibre(f, inc, ox, o_face, oy, Matrix::identity(uz(x.dim())),
                              Matrix(0, uz(y.dim() - 1)));
    rep.checks.push_back(compare("face " + std::to_string(i) + " over face " + std::to_string(j),
                                 predicted, lhs, rhs));
  }
  finish(rep);
  return rep;
}

SignReport verify_boundary_formula(const CornerMapGerm& f, const CornerMapGerm& g,
                                   BoundaryFormula formula, int ox, int oy, int oz) {
  if (formula == BoundaryFormula::MinusBoundary) return verify_minus_boundary(f, ox, oy);
  FormulaReport terms = boundary_formula_check(f, g, formula);
  SignReport rep;
  rep.identity = "boundary-" + to_string(formula);
  if (!terms.holds) {
    rep.failures = terms.failures;
    return rep;
  }
  const ModelCorner& x = f.source();
  const ModelCorner& y = g.source();
  const ModelCorner& z = f.target();
  FibreLedger l = fibre_product(f, g);
  int ow = fibre_product_orientation(f, g, ox, oy, oz, l);
  int y_sign = pm(x.dim() + z.dim());
  for (const auto& term : terms.terms) {
    int k = static_cast<int>(*term.w_face);
    Side lhs{ow * boundary_orientation_sign(l.w_model, k),
             l.kernel_map * face_inclusion_germ(l.w_model, k).jacobian()};
    Side rhs{0, Matrix()};
    int predicted = 1;
    switch (term.kind) {
      case TermKind::XFace:
        rhs = oriented_fibre(term.left, term.right, ox * boundary_orientation_sign(x, term.x_face), oy,
                             oz, face_inclusion_germ(x, term.x_face).jacobian(),
                             Matrix::identity(uz(y.dim())));
        break;
      case TermKind::YFace:
        rhs = oriented_fibre(term.left, term.right, ox, oy * boundary_orientation_sign(y, term.y_face),
                             oz, Matrix::identity(uz(x.dim())),
                             face_inclusion_germ(y, term.y_face).jacobian());
        predicted = y_sign;
        break;
      case TermKind::Corner:
        rhs = oriented_fibre(term.left, term.right, ox * boundary_orientation_sign(x, term.x_face),
                             oy * boundary_orientation_sign(y, term.y_face),
                             oz * boundary_orientation_sign(z, term.z_face),
                             face_inclusion_germ(x, term.x_face).jacobian(),
                             face_inclusion_germ(y, term.y_face).jacobian());
        break;
      case TermKind::MinusFace:
        break;
    }
    rep.checks.push_back(compare(term.description, predicted, lhs, rhs));
  }
  finish(rep);
  return rep;
}

SignReport verify_swap(const CornerMapGerm& f, const CornerMapGerm& g, int ox, int oy, int oz) {
  SignReport rep;
  rep.identity = "swap";
  const int dx = f.source().dim(), dy = g.source().dim(), dz = f.target().dim();
  Side lhs = oriented_fibre(f, g, ox, oy, oz, Matrix::identity(uz(dx)), Matrix::identity(uz(dy)));
  Side swapped = oriented_fibre(g, f, oy, ox, oz, Matrix::identity(uz(dy)), Matrix::identity(uz(dx)));
  // Reorder Y + X coordinates into X + Y.
  Matrix perm(uz(dx + dy), uz(dx + dy));
  for (int i = 0; i < dx; ++i) perm(uz(i), uz(dy + i)) = 1;
  for (int i = 0; i < dy; ++i) perm(uz(dx + i), uz(i)) = 1;
  Side rhs{swapped.sign, perm * swapped.embedding};
  rep.checks.push_back(compare("X x_Z Y vs Y x_Z X", pm((dx - dz) * (dy - dz)), lhs, rhs));
  finish(rep);
  return rep;
}

SignReport verify_associativity(const CornerMapGerm& d, const CornerMapGerm& e,
                                const CornerMapGerm& f, const CornerMapGerm& g,
                                const std::vector<int>& s) {
  if (s.size() != 5) throw std::invalid_argument("need signs for V, W, X, Y, Z");
  if (e.source() != f.source() || d.target() != e.target() || f.target() != g.target())
    throw ModelMismatch("associativity needs d: V->Y, e: W->Y, f: W->Z, g: X->Z");
  SignReport rep;
  rep.identity = "associativity";
  const int dv = d.source().dim(), dw = e.source().dim(), dx = g.source().dim();
  const int ov = s[0], ow = s[1], ox = s[2], oy = s[3], oz = s[4];
  auto id = [](int n) { return Matrix::identity(uz(n)); };

  if (!is_transverse(f, g) || !is_transverse(d, e))
    throw HypothesisNotMet("inner fibre products are not transverse");
  // Left: V x_Y (W x_Z X).
  FibreLedger inner_l = fibre_product(f, g);
  int o_inner_l = fibre_product_orientation(f, g, ow, ox, oz, inner_l);
  CornerMapGerm e_pw = compose(e, inner_l.pi_x);
  // Right: (V x_Y W) x_Z X.
  FibreLedger inner_r = fibre_product(d, e);
  int o_inner_r = fibre_product_orientation(d, e, ov, ow, oy, inner_r);
  CornerMapGerm f_pw = compose(f, inner_r.pi_y);
  if (!is_transverse(d, e_pw) || !is_transverse(f_pw, g))
    throw HypothesisNotMet("outer fibre products are not transverse");
  Side lhs = oriented_fibre(d, e_pw, ov, o_inner_l, oy, id(dv), inner_l.kernel_map);
  Side rhs = oriented_fibre(f_pw, g, o_inner_r, ox, oz, inner_r.kernel_map, id(dx));
  (void)dw;
  rep.checks.push_back(compare("V x_Y (W x_Z X) vs (V x_Y W) x_Z X", 1, lhs, rhs));
  finish(rep);
  return rep;
}

SignReport verify_direct_product(const CornerMapGerm& d, const CornerMapGerm& e,
                                 const CornerMapGerm& f, const CornerMapGerm& g,
                                 const std::vector<int>& s) {
  if (s.size() != 5) throw std::invalid_argument("need signs for V, W, X, Y, Z");
  if (d.source() != e.source() || d.target() != f.target() || e.target() != g.target())
    throw ModelMismatch("direct product identity needs d: V->Y, e: V->Z, f: W->Y, g: X->Z");
  SignReport rep;
  rep.identity = "direct-product";
  const ModelCorner& v = d.source();
  const ModelCorner& w = f.source();
  const ModelCorner& x = g.source();
  const ModelCorner& y = d.target();
  const ModelCorner& z = e.target();
  const int ov = s[0], ow = s[1], ox = s[2], oy = s[3], oz = s[4];
  auto id = [](int n) { return Matrix::identity(uz(n)); };

  CornerMapGerm de = direct_product_germ(d, e), fg = product_germ(f, g);
  if (!is_transverse(de, fg) || !is_transverse(d, f))
    throw HypothesisNotMet("fibre products are not transverse");
  Side lhs = oriented_fibre(de, fg, ov, product_orientation(w, ow, x, ox), product_orientation(y, oy, z, oz),
                            id(v.dim()), product_embedding(w, x));
  FibreLedger inner = fibre_product(d, f);
  int o_inner = fibre_product_orientation(d, f, ov, ow, oy, inner);
  CornerMapGerm e_pv = compose(e, inner.pi_x);
  if (!is_transverse(e_pv, g)) throw HypothesisNotMet("outer fibre product is not transverse");
  Side rhs = oriented_fibre(e_pv, g, o_inner, ox, oz, inner.kernel_map, id(x.dim()));
  int predicted = pm(z.dim() * (y.dim() + w.dim()));
  rep.checks.push_back(compare("V x_(YxZ) (WxX) vs (V x_Y W) x_Z X", predicted, lhs, rhs));
  finish(rep);
  return rep;
}

CornerMapGerm terminal_germ(const ModelCorner& m) {
  return {m, ModelCorner(0, 0), {}, Matrix(0, uz(m.dim()))};
}

SignReport verify_axiom_point(const ModelCorner& x, const ModelCorner& y, int ox, int oy) {
  SignReport rep;
  rep.identity = "axiom-point";
  Side lhs = oriented_fibre(terminal_germ(x), terminal_germ(y), ox, oy, 1,
                            Matrix::identity(uz(x.dim())), Matrix::identity(uz(y.dim())));
  Side rhs{product_orientation(x, ox, y, oy), product_embedding(x, y)};
  rep.checks.push_back(compare("X x_point Y vs X x Y", 1, lhs, rhs));
  finish(rep);
  return rep;
}

SignReport verify_axiom_identity(const CornerMapGerm& f, int ox, int oy) {
  SignReport rep;
  rep.identity = "axiom-identity";
  const ModelCorner& x = f.source();
  const ModelCorner& y = f.target();
  Side lhs{ox, Matrix::vstack(f.jacobian(), Matrix::identity(uz(x.dim())))};
  Side rhs = oriented_fibre(identity_germ(y), f, oy, ox, oy, Matrix::identity(uz(y.dim())),
                            Matrix::identity(uz(x.dim())));
  rep.checks.push_back(compare("X vs Y x_Y X", 1, lhs, rhs));
  finish(rep);
  return rep;
}

SignReport verify_product_swap(const ModelCorner& x, const ModelCorner& y, int ox, int oy) {
  SignReport rep;
  rep.identity = "product-swap";
  Side lhs{product_orientation(x, ox, y, oy), product_embedding(x, y)};
  const int dx = x.dim(), dy = y.dim();
  Matrix perm(uz(dx + dy), uz(dx + dy));
  for (int i = 0; i < dx; ++i) perm(uz(i), uz(dy + i)) = 1;
  for (int i = 0; i < dy; ++i) perm(uz(dx + i), uz(i)) = 1;
  Side rhs{product_orientation(y, oy, x, ox), perm * product_embedding(y, x)};
  rep.checks.push_back(compare("X x Y vs Y x X", pm(dx * dy), lhs, rhs));
  finish(rep);
  return rep;
}

bool splitting_independent(const CornerMapGerm& f, const CornerMapGerm& g, int ox, int oy, int oz) {
  FibreLedger l = fibre_product(f, g);
  return fibre_product_orientation(f, g, ox, oy, oz, l, Splitting::Leftmost) ==
         fibre_product_orientation(f, g, ox, oy, oz, l, Splitting::Rightmost);
}

int iterated_boundary_sign(const ModelCorner& m, const std::vector<int>& ordered_faces) {
  ModelCorner current = m;
  StratumLabel removed;
  int sign = 1;
  for (int face : ordered_faces) {
    if (face < 1 || face > m.depth() || removed.count(face))
      throw BadFace("face " + std::to_string(face) + " of " + m.to_string());
    sign *= boundary_orientation_sign(current, reindex_face(removed, face));
    removed.insert(face);
    current = ModelCorner(current.dim() - 1, current.depth() - 1);
  }
  return sign;
}

}  // namespace corners
