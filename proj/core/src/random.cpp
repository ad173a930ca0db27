#include <corners/errors.hpp>
#include <corners/fibre.hpp>
#include <corners/random.hpp>

#include <algorithm>
#include <limits>

namespace corners {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

// Fills the interior rows of a Jacobian whose boundary rows are already set.
void fill_interior(Rng& rng, Matrix& j, int c) {
  for (std::size_t r = uz(c); r < j.rows(); ++r)
    for (std::size_t s = 0; s < j.cols(); ++s)
      if (rng.coin(2, 3)) j(r, s) = rng.rational();
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do x = engine_(); while (x >= limit);
  return x % n;
}

int Rng::uniform(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Rng::coin(int num, int den) { return uniform(1, den) <= num; }

Rational Rng::rational(int max_abs, int max_den) {
  Rational q(uniform(-max_abs, max_abs), uniform(1, max_den));
  q.canonicalize();
  return q;
}

Rational Rng::positive(int max_num, int max_den) {
  Rational q(uniform(1, max_num), uniform(1, max_den));
  q.canonicalize();
  return q;
}

ModelCorner random_model(Rng& rng, int min_dim, int max_dim) {
  return random_model_of_dim(rng, rng.uniform(min_dim, max_dim));
}

ModelCorner random_model_of_dim(Rng& rng, int dim) { return ModelCorner(dim, rng.uniform(0, dim)); }

CornerMapGerm random_germ(Rng& rng, const ModelCorner& source, const ModelCorner& target) {
  const int a = source.depth(), c = target.depth();
  Matrix j(uz(target.dim()), uz(source.dim()));
  std::map<int, int> transfer;
  for (int t = 1; t <= c; ++t) {
    if (a == 0 || rng.coin(1, 4)) continue;
    int s = rng.uniform(1, a);
    transfer[t] = s;
    j(uz(t - 1), uz(s - 1)) = rng.positive();
  }
  fill_interior(rng, j, c);
  return CornerMapGerm(source, target, std::move(transfer), std::move(j));
}

std::optional<CornerMapGerm> random_b_submersive(Rng& rng, const ModelCorner& source,
                                                 const ModelCorner& target) {
  const int a = source.depth(), c = target.depth();
  if (c > a) return std::nullopt;
  std::vector<int> faces(uz(a));
  for (int i = 0; i < a; ++i) faces[uz(i)] = i + 1;
  for (int i = a - 1; i > 0; --i) std::swap(faces[uz(i)], faces[uz(rng.uniform(0, i))]);
  Matrix j(uz(target.dim()), uz(source.dim()));
  std::map<int, int> transfer;
  for (int t = 1; t <= c; ++t) {
    transfer[t] = faces[uz(t - 1)];
    j(uz(t - 1), uz(faces[uz(t - 1)] - 1)) = rng.positive();
  }
  fill_interior(rng, j, c);
  return CornerMapGerm(source, target, std::move(transfer), std::move(j));
}

std::optional<CornerMapGerm> random_submersion(Rng& rng, const ModelCorner& source,
                                               const ModelCorner& target) {
  if (target.depth() > source.depth() || target.interior_dim() > source.interior_dim())
    return std::nullopt;
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto f = random_b_submersive(rng, source, target);
    if (f && is_submersion(*f)) return f;
  }
  return std::nullopt;
}

std::optional<std::pair<CornerMapGerm, CornerMapGerm>> random_transverse_pair(
    Rng& rng, int max_total, int max_target) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    const int m = rng.uniform(0, max_total);
    const int n = rng.uniform(0, max_total - m);
    const int p = rng.uniform(0, std::min(max_target, m + n));
    ModelCorner x = random_model_of_dim(rng, m), y = random_model_of_dim(rng, n);
    ModelCorner z = random_model_of_dim(rng, p);
    CornerMapGerm f = random_germ(rng, x, z), g = random_germ(rng, y, z);
    if (is_transverse(f, g)) return std::make_pair(std::move(f), std::move(g));
  }
  return std::nullopt;
}

PolyMap random_joyce_map(Rng& rng, const ModelCorner& source, const ModelCorner& target) {
  const int m = source.dim();
  CornerMapGerm germ = random_germ(rng, source, target);
  auto higher = [&](int max_terms) {
    Polynomial q(m);
    if (m == 0) return q;
    for (int t = rng.uniform(0, max_terms); t > 0; --t) {
      Exponent e(uz(m), 0);
      for (int d = rng.uniform(1, 2); d > 0; --d) ++e[uz(rng.uniform(0, m - 1))];
      q.add_term(e, rng.rational());
    }
    return q;
  };
  std::vector<Polynomial> comps;
  for (int r = 1; r <= target.dim(); ++r) {
    if (r <= target.depth()) {
      if (!germ.transfers(r)) {
        comps.emplace_back(m);
        continue;
      }
      Polynomial unit = Polynomial::constant(m, germ.lambda(r)) + higher(2);
      comps.push_back(Polynomial::variable(m, germ.transfer_of(r)) * unit);
      continue;
    }
    Polynomial q(m);
    for (int s = 0; s < m; ++s) {
      const Rational& v = germ.jacobian()(uz(r - 1), uz(s));
      if (sgn(v) != 0) q = q + Polynomial::variable(m, s + 1) * Polynomial::constant(m, v);
    }
    Polynomial h = higher(3);
    // Only terms of degree >= 2, so the Jacobian stays the germ's.
    for (auto& [e, coeff] : h.terms()) {
      int deg = 0;
      for (int v : e) deg += v;
      if (deg >= 2) q.add_term(e, coeff);
    }
    comps.push_back(q);
  }
  return PolyMap(source, target, std::move(comps));
}

}  // namespace corners
