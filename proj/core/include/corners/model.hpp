#pragma once

#include <corners/rational.hpp>

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace corners {

// The local model [0,inf)^depth x R^(dim-depth). Faces are 1-based and
// correspond to the first `depth` coordinates.
class ModelCorner {
 public:
  ModelCorner() = default;
  ModelCorner(int dim, int depth);

  int dim() const { return dim_; }
  int depth() const { return depth_; }
  int interior_dim() const { return dim_ - depth_; }

  friend bool operator==(const ModelCorner&, const ModelCorner&) = default;
  friend auto operator<=>(const ModelCorner&, const ModelCorner&) = default;

  std::string to_string() const;

 private:
  int dim_ = 0;
  int depth_ = 0;
};

using StratumLabel = std::set<int>;
using Point = std::vector<Rational>;

std::string to_string(const StratumLabel& label);

void check_label(const ModelCorner& m, const StratumLabel& label);

int depth_of_point(const ModelCorner& m, const Point& p);

// Model of the closed stratum labeled A: coordinates in A are deleted.
ModelCorner stratum_model(const ModelCorner& m, const StratumLabel& a);

// Position (1-based) of face i inside the stratum model after deleting A.
int reindex_face(const StratumLabel& deleted, int i);

std::vector<std::pair<StratumLabel, ModelCorner>> strata(const ModelCorner& m, int j);
std::vector<std::pair<int, ModelCorner>> boundary(const ModelCorner& m);

std::uint64_t iterated_boundary_count(const ModelCorner& m, int j);
std::uint64_t corners_count(const ModelCorner& m, int j);

std::uint64_t binomial(int n, int k);
std::uint64_t falling_factorial(int n, int j);

// All j-element subsets of the given (sorted) ground set, lexicographic.
std::vector<StratumLabel> subsets_of_size(const std::vector<int>& ground, int j);
std::vector<StratumLabel> subsets_of_size(int k, int j);  // ground {1..k}
// All subsets, ordered by size then lexicographically.
std::vector<StratumLabel> all_subsets(const std::vector<int>& ground);
std::vector<StratumLabel> all_subsets(int k);

// Coordinate bookkeeping for a product of models. Product coordinates list the
// boundary coordinates of every factor first (factor order), then the interior
// coordinates of every factor; this keeps the result a standard model and makes
// the product associative on the nose.
struct ProductLayout {
  ModelCorner model;
  std::vector<int> face_offset;                 // face i of factor t -> face_offset[t]+i
  std::vector<std::vector<int>> coordinate_of;  // [t][local coord, 0-based] -> product coord
  // Sign of the permutation taking the concatenated coordinates (factor by
  // factor) to the product's coordinate order.
  int reorder_sign = 1;
};

ProductLayout product_layout(std::span<const ModelCorner> factors);
ModelCorner product(const ModelCorner& m1, const ModelCorner& m2);

int permutation_sign(std::span<const int> perm);

}  // namespace corners
