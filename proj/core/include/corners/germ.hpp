#pragma once

#include <corners/matrix.hpp>
#include <corners/model.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace corners {

// A smooth map germ between model corners, anchored at both origins.
//
// Target face j is transferred when t_j o f = lambda_j * r_{Pi(j)} near 0 with
// lambda_j > 0; otherwise t_j o f vanishes identically near 0 (a flat face).
// Only the first-order data is kept: row j of the Jacobian is lambda_j e_{Pi(j)}
// for transferred faces and zero for flat ones. Interior rows are free.
class CornerMapGerm {
 public:
  CornerMapGerm() = default;
  // Throws InvalidGerm if the data violates the row constraints.
  CornerMapGerm(ModelCorner source, ModelCorner target, std::map<int, int> transfer,
                Matrix jacobian);

  const ModelCorner& source() const { return source_; }
  const ModelCorner& target() const { return target_; }
  const std::map<int, int>& transfer() const { return transfer_; }
  const Matrix& jacobian() const { return jacobian_; }

  std::set<int> transfer_set() const;
  bool transfers(int j) const { return transfer_.count(j) != 0; }
  int transfer_of(int j) const { return transfer_.at(j); }
  Rational lambda(int j) const;
  std::set<int> flat_faces() const;

  friend bool operator==(const CornerMapGerm&, const CornerMapGerm&) = default;

  std::string to_string() const;

 private:
  ModelCorner source_;
  ModelCorner target_;
  std::map<int, int> transfer_;
  Matrix jacobian_;
};

struct CornerPointMap {
  StratumLabel source_label;
  StratumLabel target_label;
  CornerMapGerm restricted;

  friend bool operator==(const CornerPointMap&, const CornerPointMap&) = default;
};

struct BoundaryDecomposition {
  std::set<int> minus_faces;
  std::set<int> plus_faces;
};

struct XiData {
  std::set<int> plus;                        // flat target faces
  std::vector<std::pair<int, int>> minus;    // (target face j, source face Pi(j))
};

CornerMapGerm identity_germ(const ModelCorner& m);
CornerMapGerm compose(const CornerMapGerm& g, const CornerMapGerm& f);
CornerMapGerm product_germ(const CornerMapGerm& f, const CornerMapGerm& g);
CornerMapGerm direct_product_germ(const CornerMapGerm& f, const CornerMapGerm& g);

// Inclusion of the closed face i of m, as a germ from the face model into m.
CornerMapGerm face_inclusion_germ(const ModelCorner& m, int face);
// Inclusion of the closed stratum labeled A.
CornerMapGerm stratum_inclusion_germ(const ModelCorner& m, const StratumLabel& a);
// Projection of product(x, y) onto its first (which == 0) or second factor.
CornerMapGerm projection_germ(const ModelCorner& x, const ModelCorner& y, int which);
// The germ of the unique map from the point (0,0) to the origin of m.
CornerMapGerm point_germ(const ModelCorner& m);

bool is_immersion(const CornerMapGerm& f);
bool is_submersion(const CornerMapGerm& f);
bool is_b_submersive(const CornerMapGerm& f);

XiData xi_data(const CornerMapGerm& f);
BoundaryDecomposition boundary_decomposition(const CornerMapGerm& f);

CornerPointMap corner_map(const CornerMapGerm& f, const StratumLabel& a);
CornerPointMap hat_corner_map(const CornerMapGerm& f, const StratumLabel& a);

// Composite of two corner point maps (outer after inner).
CornerPointMap compose(const CornerPointMap& outer, const CornerPointMap& inner);

struct SubmersionNormalForm {
  std::vector<int> source_reorder;  // source faces in their new order
  ModelCorner y_model;
  ModelCorner z_model;
  CornerMapGerm witness;            // invertible, source -> product(y, z)
  CornerMapGerm projection;         // product(y, z) -> y
};

SubmersionNormalForm submersion_normal_form(const CornerMapGerm& f);

struct MinusLift {
  int source_face;
  int target_face;
  CornerMapGerm germ;  // face model of source_face -> face model of target_face
};

struct BoundaryLifts {
  std::vector<std::pair<int, CornerMapGerm>> plus;  // f o (inclusion of face i)
  std::vector<MinusLift> minus;
};

BoundaryLifts boundary_lifts(const CornerMapGerm& f);

// Whether J maps every vector of the inward sector of the source into the
// inward sector of the target (checked on the given vector).
bool maps_into_sector(const CornerMapGerm& f, const std::vector<Rational>& v);

}  // namespace corners
