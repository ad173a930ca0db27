#include <corners/model.hpp>
#include <corners/errors.hpp>

#include <sstream>

namespace corners {

ModelCorner::ModelCorner(int dim, int depth) : dim_(dim), depth_(depth) {
  if (dim < 0 || depth < 0 || depth > dim)
    throw InvalidModel("model requires 0 <= depth <= dim, got (" + std::to_string(dim) +
                       "," + std::to_string(depth) + ")");
}

std::string ModelCorner::to_string() const {
  return "(" + std::to_string(dim_) + "," + std::to_string(depth_) + ")";
}

std::string to_string(const StratumLabel& label) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : label) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

void check_label(const ModelCorner& m, const StratumLabel& label) {
  for (int i : label)
    if (i < 1 || i > m.depth())
      throw BadLabel("label " + to_string(label) + " is not a stratum of " + m.to_string());
}

int depth_of_point(const ModelCorner& m, const Point& p) {
  if (static_cast<int>(p.size()) != m.dim())
    throw PointOutsideModel("point has " + std::to_string(p.size()) + " coordinates, model " +
                            m.to_string());
  int zeros = 0;
  for (int i = 0; i < m.depth(); ++i) {
    if (sgn(p[i]) < 0) throw PointOutsideModel("coordinate " + std::to_string(i + 1) + " is negative");
    if (sgn(p[i]) == 0) ++zeros;
  }
  return zeros;
}

ModelCorner stratum_model(const ModelCorner& m, const StratumLabel& a) {
  check_label(m, a);
  int j = static_cast<int>(a.size());
  return {m.dim() - j, m.depth() - j};
}

int reindex_face(const StratumLabel& deleted, int i) {
  int below = 0;
  for (int d : deleted) {
    if (d < i) ++below;
    else break;
  }
  return i - below;
}

std::vector<StratumLabel> subsets_of_size(const std::vector<int>& ground, int j) {
  std::vector<StratumLabel> out;
  const int n = static_cast<int>(ground.size());
  if (j < 0 || j > n) return out;
  std::vector<int> idx(j);
  for (int i = 0; i < j; ++i) idx[i] = i;
  while (true) {
    StratumLabel s;
    for (int i : idx) s.insert(ground[i]);
    out.push_back(std::move(s));
    int t = j - 1;
    while (t >= 0 && idx[t] == n - j + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int u = t + 1; u < j; ++u) idx[u] = idx[u - 1] + 1;
  }
  return out;
}

std::vector<StratumLabel> subsets_of_size(int k, int j) {
  std::vector<int> ground(k);
  for (int i = 0; i < k; ++i) ground[i] = i + 1;
  return subsets_of_size(ground, j);
}

std::vector<StratumLabel> all_subsets(const std::vector<int>& ground) {
  std::vector<StratumLabel> out;
  for (int j = 0; j <= static_cast<int>(ground.size()); ++j)
    for (auto& s : subsets_of_size(ground, j)) out.push_back(std::move(s));
  return out;
}

std::vector<StratumLabel> all_subsets(int k) {
  std::vector<int> ground(k);
  for (int i = 0; i < k; ++i) ground[i] = i + 1;
  return all_subsets(ground);
}

std::vector<std::pair<StratumLabel, ModelCorner>> strata(const ModelCorner& m, int j) {
  std::vector<std::pair<StratumLabel, ModelCorner>> out;
  if (j < 0 || j > m.depth()) return out;
  for (auto& a : subsets_of_size(m.depth(), j))
    out.emplace_back(a, ModelCorner(m.dim() - j, m.depth() - j));
  return out;
}

std::vector<std::pair<int, ModelCorner>> boundary(const ModelCorner& m) {
  std::vector<std::pair<int, ModelCorner>> out;
  for (int i = 1; i <= m.depth(); ++i) out.emplace_back(i, ModelCorner(m.dim() - 1, m.depth() - 1));
  return out;
}

std::uint64_t falling_factorial(int n, int j) {
  if (j < 0 || j > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < j; ++i) r *= static_cast<std::uint64_t>(n - i);
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

std::uint64_t iterated_boundary_count(const ModelCorner& m, int j) {
  return falling_factorial(m.depth(), j);
}

std::uint64_t corners_count(const ModelCorner& m, int j) { return binomial(m.depth(), j); }

int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

ProductLayout product_layout(std::span<const ModelCorner> factors) {
  ProductLayout out;
  int dim = 0, depth = 0;
  for (const auto& f : factors) {
    dim += f.dim();
    depth += f.depth();
  }
  out.model = ModelCorner(dim, depth);
  int next_face = 0, next_interior = depth;
  std::vector<int> concatenated;
  for (const auto& f : factors) {
    out.face_offset.push_back(next_face);
    std::vector<int> coords(f.dim());
    for (int i = 0; i < f.depth(); ++i) coords[i] = next_face++;
    for (int i = f.depth(); i < f.dim(); ++i) coords[i] = next_interior++;
    concatenated.insert(concatenated.end(), coords.begin(), coords.end());
    out.coordinate_of.push_back(std::move(coords));
  }
  out.reorder_sign = permutation_sign(concatenated);
  return out;
}

ModelCorner product(const ModelCorner& m1, const ModelCorner& m2) {
  return {m1.dim() + m2.dim(), m1.depth() + m2.depth()};
}

}  // namespace corners
