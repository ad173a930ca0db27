#include <corners/complex.hpp>
#include <corners/errors.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace corners {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

// Inverse of reindex_face for a single deleted face.
int unreindex(int deleted, int i) { return i < deleted ? i : i + 1; }

struct ChartMap {
  int a = 0, b = 0;
  Matrix linear;                // chart a coordinates -> chart b coordinates
  std::vector<Rational> offset;
  std::map<int, int> sigma;     // faces of a carried onto faces of b
};

// Extends a face gluing to the charts by matching the two normal coordinates.
ChartMap chart_map(const CornerComplex& c, const Gluing& g) {
  const int n = c.dim();
  ChartMap out;
  out.a = g.chart_a;
  out.b = g.chart_b;
  if (g.face_a == 0) {
    out.linear = g.linear;
    out.offset = g.offset;
  } else {
    out.linear = Matrix(uz(n), uz(n));
    out.offset.assign(uz(n), Rational(0));
    out.linear(uz(g.face_b - 1), uz(g.face_a - 1)) = 1;
    for (int r = 1; r < n; ++r) {
      int row = unreindex(g.face_b, r) - 1;
      for (int s = 1; s < n; ++s)
        out.linear(uz(row), uz(unreindex(g.face_a, s) - 1)) = g.linear(uz(r - 1), uz(s - 1));
      out.offset[uz(row)] = g.offset[uz(r - 1)];
    }
  }
  const ModelCorner& ma = c.charts()[uz(g.chart_a)];
  const ModelCorner& mb = c.charts()[uz(g.chart_b)];
  for (int target = 1; target <= mb.depth(); ++target) {
    if (sgn(out.offset[uz(target - 1)]) != 0) continue;
    int hit = 0, count = 0;
    for (int s = 1; s <= n; ++s) {
      const Rational& v = out.linear(uz(target - 1), uz(s - 1));
      if (sgn(v) == 0) continue;
      ++count;
      hit = sgn(v) > 0 ? s : -s;
    }
    if (count == 1 && hit > 0 && hit <= ma.depth()) out.sigma[hit] = target;
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

}  // namespace

CornerComplex::CornerComplex(std::vector<ModelCorner> charts, std::vector<Gluing> gluings)
    : charts_(std::move(charts)), gluings_(std::move(gluings)) {
  const int n = dim();
  for (const auto& m : charts_)
    if (m.dim() != n) throw InvalidComplex("charts have different dimensions");
  const int nc = static_cast<int>(charts_.size());
  for (auto& g : gluings_) {
    if (g.chart_a < 0 || g.chart_a >= nc || g.chart_b < 0 || g.chart_b >= nc)
      throw InvalidComplex("gluing refers to a missing chart");
    if ((g.face_a == 0) != (g.face_b == 0))
      throw InvalidComplex("a face can only be glued to a face");
    if (g.face_a < 0 || g.face_a > charts_[uz(g.chart_a)].depth() || g.face_b < 0 ||
        g.face_b > charts_[uz(g.chart_b)].depth())
      throw InvalidComplex("gluing refers to a missing face");
    const int k = g.face_a == 0 ? n : n - 1;
    if (g.linear.rows() == 0 && g.linear.cols() == 0) g.linear = Matrix::identity(uz(k));
    if (g.offset.empty()) g.offset.assign(uz(k), Rational(0));
    if (g.linear.rows() != uz(k) || g.linear.cols() != uz(k) || g.offset.size() != uz(k))
      throw InvalidComplex("gluing map has the wrong size");
    if (!inverse(g.linear)) throw InvalidComplex("gluing map is not invertible");
  }
}

int CornerComplex::max_depth() const {
  int d = 0;
  for (const auto& m : charts_) d = std::max(d, m.depth());
  return d;
}

int CornerComponents::component_of(const Piece& p) const {
  auto it = std::lower_bound(pieces.begin(), pieces.end(), p);
  if (it == pieces.end() || *it != p) throw BadLabel("no such piece");
  return component[uz(static_cast<int>(it - pieces.begin()))];
}

CornerComponents corners_complex(const CornerComplex& c, int k) {
  CornerComponents out;
  out.k = k;
  for (int i = 0; i < static_cast<int>(c.charts().size()); ++i)
    for (auto& [label, model] : strata(c.charts()[uz(i)], k)) out.pieces.push_back({i, label});
  std::sort(out.pieces.begin(), out.pieces.end());
  auto index = [&](const Piece& p) {
    return uz(static_cast<int>(std::lower_bound(out.pieces.begin(), out.pieces.end(), p) - out.pieces.begin()));
  };
  UnionFind uf(out.pieces.size());
  for (const auto& g : c.gluings()) {
    ChartMap cm = chart_map(c, g);
    std::vector<int> dom;
    for (auto [s, t] : cm.sigma) dom.push_back(s);
    for (auto& t : subsets_of_size(dom, k)) {
      StratumLabel image;
      for (int s : t) image.insert(cm.sigma.at(s));
      uf.unite(index({cm.a, t}), index({cm.b, image}));
    }
  }
  std::map<std::size_t, int> number;
  for (std::size_t i = 0; i < out.pieces.size(); ++i) {
    auto [it, inserted] = number.emplace(uf.find(i), out.count);
    if (inserted) ++out.count;
    out.component.push_back(it->second);
  }
  return out;
}

CornerComplex boundary_complex(const CornerComplex& c) {
  std::vector<ModelCorner> charts;
  std::map<std::pair<int, int>, int> chart_of;
  for (int i = 0; i < static_cast<int>(c.charts().size()); ++i) {
    const ModelCorner& m = c.charts()[uz(i)];
    for (int f = 1; f <= m.depth(); ++f) {
      chart_of[{i, f}] = static_cast<int>(charts.size());
      charts.emplace_back(m.dim() - 1, m.depth() - 1);
    }
  }
  std::vector<Gluing> gluings;
  for (const auto& g : c.gluings()) {
    ChartMap cm = chart_map(c, g);
    for (auto [s, t] : cm.sigma) {
      std::vector<Rational> offset = cm.offset;
      offset.erase(offset.begin() + (t - 1));
      gluings.push_back({chart_of.at({cm.a, s}), 0, chart_of.at({cm.b, t}), 0,
                         cm.linear.drop_row(uz(t - 1)).drop_col(uz(s - 1)), offset});
    }
  }
  return CornerComplex(std::move(charts), std::move(gluings));
}

CornerComplex product_complex(const CornerComplex& a, const CornerComplex& b) {
  const int na = static_cast<int>(a.charts().size()), nb = static_cast<int>(b.charts().size());
  std::vector<ModelCorner> charts;
  std::vector<ProductLayout> layouts;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      const ModelCorner factors[] = {a.charts()[uz(i)], b.charts()[uz(j)]};
      layouts.push_back(product_layout(factors));
      charts.push_back(layouts.back().model);
    }
  std::vector<Gluing> gluings;
  // Glue factor `which` by cm, keeping the other factor's chart `other` fixed.
  auto lift = [&](const ChartMap& cm, int which, int other, const CornerComplex& src,
                  const CornerComplex& fixed) {
    int ia = which == 0 ? cm.a * nb + other : other * nb + cm.a;
    int ib = which == 0 ? cm.b * nb + other : other * nb + cm.b;
    const ProductLayout& la = layouts[uz(ia)];
    const ProductLayout& lb = layouts[uz(ib)];
    const int n = la.model.dim();
    Matrix linear(uz(n), uz(n));
    std::vector<Rational> offset(uz(n));
    const int dim_src = src.dim(), dim_fixed = fixed.dim();
    for (int r = 0; r < dim_src; ++r) {
      int row = lb.coordinate_of[uz(which)][uz(r)];
      offset[uz(row)] = cm.offset[uz(r)];
      for (int s = 0; s < dim_src; ++s)
        linear(uz(row), uz(la.coordinate_of[uz(which)][uz(s)])) = cm.linear(uz(r), uz(s));
    }
    for (int r = 0; r < dim_fixed; ++r)
      linear(uz(lb.coordinate_of[uz(1 - which)][uz(r)]), uz(la.coordinate_of[uz(1 - which)][uz(r)])) = 1;
    gluings.push_back({ia, 0, ib, 0, linear, offset});
  };
  for (const auto& g : a.gluings())
    for (int j = 0; j < nb; ++j) lift(chart_map(a, g), 0, j, a, b);
  for (const auto& g : b.gluings())
    for (int i = 0; i < na; ++i) lift(chart_map(b, g), 1, i, b, a);
  return CornerComplex(std::move(charts), std::move(gluings));
}

BoundaryGraph boundary_graph(const CornerComplex& c) {
  BoundaryGraph out;
  CornerComponents c1 = corners_complex(c, 1), c2 = corners_complex(c, 2);
  out.nodes = c1.count;
  out.multiplicity.resize(uz(c2.count));
  std::vector<bool> seen(uz(c2.count), false);
  for (std::size_t i = 0; i < c2.pieces.size(); ++i) {
    int comp = c2.component[i];
    if (seen[uz(comp)]) continue;
    seen[uz(comp)] = true;
    const Piece& p = c2.pieces[i];
    int u = c1.component_of({p.chart, {*p.label.begin()}});
    int v = c1.component_of({p.chart, {*p.label.rbegin()}});
    out.edges.emplace_back(std::min(u, v), std::max(u, v));
    if (u == v) out.multiplicity[uz(comp)] = {{u, 2}};
    else out.multiplicity[uz(comp)] = {{std::min(u, v), 1}, {std::max(u, v), 1}};
  }
  return out;
}

std::string ComplexClassification::summary() const {
  if (embedded_n)
    return "embedded corners, N=" + std::to_string(*embedded_n) + " (also with faces)";
  if (with_faces) return "with faces, no embedded corners";
  return "plain only";
}

ComplexClassification classify(const CornerComplex& c) {
  ComplexClassification out;
  CornerComponents c1 = corners_complex(c, 1);
  const int nodes = c1.count;
  std::vector<std::set<int>> conflict(uz(nodes));
  bool self_conflict = false;
  out.with_faces = true;
  for (int i = 0; i < static_cast<int>(c.charts().size()); ++i) {
    const int depth = c.charts()[uz(i)].depth();
    for (int g = 1; g <= depth; ++g)
      for (int h = g + 1; h <= depth; ++h) {
        int u = c1.component_of({i, {g}}), v = c1.component_of({i, {h}});
        if (u == v) {
          self_conflict = true;
          out.with_faces = false;
        } else {
          conflict[uz(u)].insert(v);
          conflict[uz(v)].insert(u);
        }
      }
  }
  if (self_conflict) return out;
  if (nodes > 16) throw InvalidComplex("too many boundary components for exhaustive search");
  // Smallest N admitting a proper colouring; first colouring found is the witness.
  std::vector<int> colour(uz(nodes), -1);
  std::function<bool(int, int)> place = [&](int node, int parts) {
    if (node == nodes) return true;
    for (int col = 0; col < parts; ++col) {
      bool ok = true;
      for (int other : conflict[uz(node)])
        if (colour[uz(other)] == col) ok = false;
      if (!ok) continue;
      colour[uz(node)] = col;
      if (place(node + 1, parts)) return true;
      colour[uz(node)] = -1;
    }
    return false;
  };
  for (int parts = nodes == 0 ? 0 : 1; parts <= nodes; ++parts) {
    std::fill(colour.begin(), colour.end(), -1);
    if (!place(0, parts)) continue;
    out.embedded_n = parts;
    out.partition.assign(uz(parts), {});
    for (int v = 0; v < nodes; ++v) out.partition[uz(colour[uz(v)])].push_back(v);
    break;
  }
  return out;
}

CornerComplex square_complex() {
  std::vector<ModelCorner> charts(4, ModelCorner(2, 2));
  std::vector<Gluing> gluings;
  for (int k = 0; k < 4; ++k)
    gluings.push_back({k, 2, (k + 1) % 4, 1, Matrix{{Rational(-1)}}, {Rational(1)}});
  return CornerComplex(std::move(charts), std::move(gluings));
}

CornerComplex teardrop_complex() {
  std::vector<ModelCorner> charts = {ModelCorner(2, 2), ModelCorner(2, 1)};
  std::vector<Gluing> gluings = {{0, 1, 1, 1, Matrix(), {}}, {0, 2, 1, 1, Matrix(), {}}};
  return CornerComplex(std::move(charts), std::move(gluings));
}

CornerComplex half_space_complex(int n) { return model_complex(ModelCorner(n, 1)); }
CornerComplex open_complex(int n) { return model_complex(ModelCorner(n, 0)); }
CornerComplex model_complex(const ModelCorner& m) { return CornerComplex({m}, {}); }

}  // namespace corners
