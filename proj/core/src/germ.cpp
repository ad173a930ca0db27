#include <corners/germ.hpp>
#include <corners/errors.hpp>

#include <sstream>

namespace corners {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

}  // namespace

CornerMapGerm::CornerMapGerm(ModelCorner source, ModelCorner target, std::map<int, int> transfer,
                             Matrix jacobian)
    : source_(source), target_(target), transfer_(std::move(transfer)), jacobian_(std::move(jacobian)) {
  if (jacobian_.rows() != uz(target_.dim()) || jacobian_.cols() != uz(source_.dim()))
    throw InvalidGerm("jacobian is " + std::to_string(jacobian_.rows()) + "x" +
                      std::to_string(jacobian_.cols()) + ", expected " +
                      std::to_string(target_.dim()) + "x" + std::to_string(source_.dim()));
  for (auto [j, i] : transfer_) {
    if (j < 1 || j > target_.depth())
      throw InvalidGerm("transfer set contains " + std::to_string(j) + ", not a target face");
    if (i < 1 || i > source_.depth())
      throw InvalidGerm("face " + std::to_string(j) + " transfers to " + std::to_string(i) +
                        ", not a source face");
  }
  for (int j = 1; j <= target_.depth(); ++j) {
    auto it = transfer_.find(j);
    for (int c = 1; c <= source_.dim(); ++c) {
      const Rational& v = jacobian_(uz(j - 1), uz(c - 1));
      if (it != transfer_.end() && c == it->second) {
        if (sgn(v) <= 0)
          throw InvalidGerm("row " + std::to_string(j) + " must have a positive entry in column " +
                            std::to_string(c));
      } else if (sgn(v) != 0) {
        throw InvalidGerm("row " + std::to_string(j) + " has a stray entry in column " +
                          std::to_string(c));
      }
    }
  }
}

std::set<int> CornerMapGerm::transfer_set() const {
  std::set<int> s;
  for (auto [j, i] : transfer_) s.insert(j);
  return s;
}

Rational CornerMapGerm::lambda(int j) const {
  return jacobian_(uz(j - 1), uz(transfer_.at(j) - 1));
}

std::set<int> CornerMapGerm::flat_faces() const {
  std::set<int> s;
  for (int j = 1; j <= target_.depth(); ++j)
    if (!transfers(j)) s.insert(j);
  return s;
}

std::string CornerMapGerm::to_string() const {
  std::ostringstream os;
  os << source_.to_string() << " -> " << target_.to_string() << " P=" << corners::to_string(transfer_set())
     << " Pi={";
  bool first = true;
  for (auto [j, i] : transfer_) {
    if (!first) os << ',';
    os << j << "->" << i;
    first = false;
  }
  os << "} J=" << jacobian_.to_string();
  return os.str();
}

CornerMapGerm identity_germ(const ModelCorner& m) {
  std::map<int, int> t;
  for (int i = 1; i <= m.depth(); ++i) t[i] = i;
  return {m, m, t, Matrix::identity(uz(m.dim()))};
}

CornerMapGerm compose(const CornerMapGerm& g, const CornerMapGerm& f) {
  if (f.target() != g.source())
    throw ModelMismatch("cannot compose: " + f.target().to_string() + " vs " + g.source().to_string());
  std::map<int, int> t;
  for (auto [j, k] : g.transfer())
    if (f.transfers(k)) t[j] = f.transfer_of(k);
  return {f.source(), g.target(), t, g.jacobian() * f.jacobian()};
}

CornerMapGerm product_germ(const CornerMapGerm& f, const CornerMapGerm& g) {
  const ModelCorner sf[] = {f.source(), g.source()};
  const ModelCorner tf[] = {f.target(), g.target()};
  ProductLayout ls = product_layout(sf), lt = product_layout(tf);
  Matrix j(uz(lt.model.dim()), uz(ls.model.dim()));
  std::map<int, int> t;
  const CornerMapGerm* parts[] = {&f, &g};
  for (int k = 0; k < 2; ++k) {
    const Matrix& jk = parts[k]->jacobian();
    for (std::size_t r = 0; r < jk.rows(); ++r)
      for (std::size_t c = 0; c < jk.cols(); ++c)
        j(uz(lt.coordinate_of[k][r]), uz(ls.coordinate_of[k][c])) = jk(r, c);
    for (auto [tj, si] : parts[k]->transfer()) t[lt.face_offset[k] + tj] = ls.face_offset[k] + si;
  }
  return {ls.model, lt.model, t, j};
}

CornerMapGerm direct_product_germ(const CornerMapGerm& f, const CornerMapGerm& g) {
  if (f.source() != g.source())
    throw ModelMismatch("direct product needs a common source: " + f.source().to_string() + " vs " +
                        g.source().to_string());
  const ModelCorner tf[] = {f.target(), g.target()};
  ProductLayout lt = product_layout(tf);
  Matrix j(uz(lt.model.dim()), uz(f.source().dim()));
  std::map<int, int> t;
  const CornerMapGerm* parts[] = {&f, &g};
  for (int k = 0; k < 2; ++k) {
    const Matrix& jk = parts[k]->jacobian();
    for (std::size_t r = 0; r < jk.rows(); ++r)
      for (std::size_t c = 0; c < jk.cols(); ++c) j(uz(lt.coordinate_of[k][r]), c) = jk(r, c);
    for (auto [tj, si] : parts[k]->transfer()) t[lt.face_offset[k] + tj] = si;
  }
  return {f.source(), lt.model, t, j};
}

CornerMapGerm stratum_inclusion_germ(const ModelCorner& m, const StratumLabel& a) {
  ModelCorner s = stratum_model(m, a);
  Matrix j(uz(m.dim()), uz(s.dim()));
  std::map<int, int> t;
  for (int c = 1; c <= m.dim(); ++c) {
    if (a.count(c)) continue;
    int local = reindex_face(a, c);
    j(uz(c - 1), uz(local - 1)) = 1;
    if (c <= m.depth()) t[c] = local;
  }
  return {s, m, t, j};
}

CornerMapGerm face_inclusion_germ(const ModelCorner& m, int face) {
  if (face < 1 || face > m.depth())
    throw BadFace("face " + std::to_string(face) + " of " + m.to_string());
  return stratum_inclusion_germ(m, {face});
}

CornerMapGerm projection_germ(const ModelCorner& x, const ModelCorner& y, int which) {
  const ModelCorner factors[] = {x, y};
  ProductLayout l = product_layout(factors);
  const ModelCorner& target = factors[which];
  Matrix j(uz(target.dim()), uz(l.model.dim()));
  std::map<int, int> t;
  for (int r = 0; r < target.dim(); ++r) j(uz(r), uz(l.coordinate_of[which][r])) = 1;
  for (int f = 1; f <= target.depth(); ++f) t[f] = l.face_offset[which] + f;
  return {l.model, target, t, j};
}

CornerMapGerm point_germ(const ModelCorner& m) {
  return {ModelCorner(0, 0), m, {}, Matrix(uz(m.dim()), 0)};
}

bool is_immersion(const CornerMapGerm& f) {
  return rank(f.jacobian()) == uz(f.source().dim());
}

bool is_submersion(const CornerMapGerm& f) {
  const int m = f.source().dim(), a = f.source().depth();
  const int p = f.target().dim(), c = f.target().depth();
  if (rank(f.jacobian()) != uz(p)) return false;
  std::vector<std::size_t> rows, cols;
  for (int r = c; r < p; ++r) rows.push_back(uz(r));
  for (int k = a; k < m; ++k) cols.push_back(uz(k));
  return rank(f.jacobian().select_rows(rows).select_cols(cols)) == uz(p - c);
}

bool is_b_submersive(const CornerMapGerm& f) {
  if (static_cast<int>(f.transfer().size()) != f.target().depth()) return false;
  std::set<int> image;
  for (auto [j, i] : f.transfer())
    if (!image.insert(i).second) return false;
  return true;
}

XiData xi_data(const CornerMapGerm& f) {
  XiData d;
  d.plus = f.flat_faces();
  for (auto [j, i] : f.transfer()) d.minus.emplace_back(j, i);
  return d;
}

BoundaryDecomposition boundary_decomposition(const CornerMapGerm& f) {
  BoundaryDecomposition d;
  for (auto [j, i] : f.transfer()) d.minus_faces.insert(i);
  for (int i = 1; i <= f.source().depth(); ++i)
    if (!d.minus_faces.count(i)) d.plus_faces.insert(i);
  return d;
}

namespace {

CornerPointMap restrict_to(const CornerMapGerm& f, const StratumLabel& a, const StratumLabel& b) {
  ModelCorner s = stratum_model(f.source(), a);
  ModelCorner t = stratum_model(f.target(), b);
  std::vector<std::size_t> rows, cols;
  for (int r = 1; r <= f.target().dim(); ++r)
    if (!b.count(r)) rows.push_back(uz(r - 1));
  for (int c = 1; c <= f.source().dim(); ++c)
    if (!a.count(c)) cols.push_back(uz(c - 1));
  std::map<int, int> transfer;
  for (auto [j, i] : f.transfer())
    if (!b.count(j)) transfer[reindex_face(b, j)] = reindex_face(a, i);
  return {a, b, CornerMapGerm(s, t, transfer, f.jacobian().select_rows(rows).select_cols(cols))};
}

}  // namespace

CornerPointMap corner_map(const CornerMapGerm& f, const StratumLabel& a) {
  check_label(f.source(), a);
  StratumLabel b;
  for (auto [j, i] : f.transfer())
    if (a.count(i)) b.insert(j);
  return restrict_to(f, a, b);
}

CornerPointMap hat_corner_map(const CornerMapGerm& f, const StratumLabel& a) {
  check_label(f.source(), a);
  StratumLabel b = f.flat_faces();
  for (auto [j, i] : f.transfer())
    if (a.count(i)) b.insert(j);
  return restrict_to(f, a, b);
}

CornerPointMap compose(const CornerPointMap& outer, const CornerPointMap& inner) {
  if (outer.source_label != inner.target_label)
    throw ModelMismatch("corner maps do not compose: " + to_string(inner.target_label) + " vs " +
                        to_string(outer.source_label));
  return {inner.source_label, outer.target_label, compose(outer.restricted, inner.restricted)};
}

SubmersionNormalForm submersion_normal_form(const CornerMapGerm& f) {
  if (!is_submersion(f)) throw NotSubmersion("germ is not a submersion: " + f.to_string());
  if (!is_b_submersive(f))
    throw InternalInvariantViolation("submersion that is not b-submersive: " + f.to_string());
  const int m = f.source().dim(), a = f.source().depth();
  const int p = f.target().dim(), c = f.target().depth();
  SubmersionNormalForm out;
  out.y_model = f.target();
  out.z_model = ModelCorner(m - p, a - c);

  std::set<int> used;
  for (int j = 1; j <= c; ++j) {
    out.source_reorder.push_back(f.transfer_of(j));
    used.insert(f.transfer_of(j));
  }
  std::vector<int> untransferred;
  for (int i = 1; i <= a; ++i)
    if (!used.count(i)) untransferred.push_back(i);
  out.source_reorder.insert(out.source_reorder.end(), untransferred.begin(), untransferred.end());

  const ModelCorner factors[] = {out.y_model, out.z_model};
  ProductLayout l = product_layout(factors);
  Matrix t(uz(m), uz(m));
  std::map<int, int> transfer;
  for (int r = 0; r < p; ++r)
    for (int k = 0; k < m; ++k) t(uz(l.coordinate_of[0][r]), uz(k)) = f.jacobian()(uz(r), uz(k));
  for (int j = 1; j <= c; ++j) transfer[j] = f.transfer_of(j);
  for (std::size_t k = 0; k < untransferred.size(); ++k) {
    int row = l.coordinate_of[1][k];
    t(uz(row), uz(untransferred[k] - 1)) = 1;
    transfer[l.face_offset[1] + static_cast<int>(k) + 1] = untransferred[k];
  }
  // Complete the interior rows of Z with interior unit vectors, leftmost first.
  std::vector<std::size_t> filled;
  for (int r = 0; r < p; ++r) filled.push_back(uz(l.coordinate_of[0][r]));
  for (std::size_t k = 0; k < untransferred.size(); ++k) filled.push_back(uz(l.coordinate_of[1][k]));
  Matrix current = t.select_rows(filled);
  std::size_t have = rank(current);
  int next_row = out.z_model.depth();
  for (int e = a; e < m && next_row < out.z_model.dim(); ++e) {
    Matrix unit(1, uz(m));
    unit(0, uz(e)) = 1;
    Matrix trial = Matrix::vstack(current, unit);
    std::size_t r = rank(trial);
    if (r == have) continue;
    current = std::move(trial);
    have = r;
    t(uz(l.coordinate_of[1][next_row]), uz(e)) = 1;
    ++next_row;
  }
  if (have != uz(m) || next_row != out.z_model.dim())
    throw InternalInvariantViolation("normal form witness is not invertible for " + f.to_string());
  out.witness = CornerMapGerm(f.source(), l.model, transfer, t);
  out.projection = projection_germ(out.y_model, out.z_model, 0);
  if (compose(out.projection, out.witness) != f)
    throw InternalInvariantViolation("normal form does not reproduce " + f.to_string());
  return out;
}

BoundaryLifts boundary_lifts(const CornerMapGerm& f) {
  if (!is_submersion(f)) throw NotSubmersion("germ is not a submersion: " + f.to_string());
  BoundaryLifts out;
  BoundaryDecomposition d = boundary_decomposition(f);
  for (int i : d.plus_faces) out.plus.emplace_back(i, compose(f, face_inclusion_germ(f.source(), i)));
  std::map<int, int> by_source;
  for (auto [j, i] : f.transfer()) by_source[i] = j;
  for (auto [i, j] : by_source) {
    CornerPointMap cm = corner_map(f, {i});
    if (cm.target_label != StratumLabel{j})
      throw InternalInvariantViolation("minus face " + std::to_string(i) + " is hit twice");
    CornerMapGerm lhs = compose(f, face_inclusion_germ(f.source(), i));
    CornerMapGerm rhs = compose(face_inclusion_germ(f.target(), j), cm.restricted);
    if (lhs != rhs) throw InternalInvariantViolation("minus lift does not commute for face " + std::to_string(i));
    out.minus.push_back({i, j, cm.restricted});
  }
  return out;
}

bool maps_into_sector(const CornerMapGerm& f, const std::vector<Rational>& v) {
  std::vector<Rational> w = f.jacobian() * std::span<const Rational>(v);
  for (int j = 0; j < f.target().depth(); ++j)
    if (sgn(w[uz(j)]) < 0) return false;
  return true;
}

}  // namespace corners
