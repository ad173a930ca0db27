#pragma once

#include <corners/germ.hpp>
#include <corners/poly.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

namespace corners {

// Seeded source of every randomized suite. The engine is std::mt19937_64 and
// integers are drawn by rejection from its raw output, so sequences do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  bool coin(int num = 1, int den = 2);
  Rational rational(int max_abs = 3, int max_den = 2);
  Rational positive(int max_num = 3, int max_den = 2);

 private:
  std::uint64_t below(std::uint64_t n);
  std::mt19937_64 engine_;
};

ModelCorner random_model(Rng& rng, int min_dim, int max_dim);
ModelCorner random_model_of_dim(Rng& rng, int dim);

// Valid germ with the given models: each target face is flat or transfers to
// a random source face; interior rows are random and sparse.
CornerMapGerm random_germ(Rng& rng, const ModelCorner& source, const ModelCorner& target);
// A submersion, or nothing if none exists between these models.
std::optional<CornerMapGerm> random_submersion(Rng& rng, const ModelCorner& source,
                                               const ModelCorner& target);
// Every target face transfers and the transfer is injective.
std::optional<CornerMapGerm> random_b_submersive(Rng& rng, const ModelCorner& source,
                                                 const ModelCorner& target);

// Two germs into a common target with dim X + dim Y <= max_total and
// dim Z <= max_target, drawn until transverse (nullopt after many misses).
std::optional<std::pair<CornerMapGerm, CornerMapGerm>> random_transverse_pair(
    Rng& rng, int max_total, int max_target);

// A Joyce-smooth polynomial map realising a random germ, with random higher
// order terms (transferred rows keep the form x_i * unit).
PolyMap random_joyce_map(Rng& rng, const ModelCorner& source, const ModelCorner& target);

}  // namespace corners
