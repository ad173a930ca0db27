#pragma once

#include <corners/fibre.hpp>

#include <string>
#include <vector>

namespace corners {

struct OrientedModel {
  ModelCorner model;
  int sign = 1;  // relative to the standard coordinate orientation

  OrientedModel opposite() const { return {model, -sign}; }
  friend bool operator==(const OrientedModel&, const OrientedModel&) = default;
};

// Sign s such that s * (remaining coordinates in order) is the orientation
// induced on face i by an outward normal first: s = sign det[-e_i, e_1..^e_i..e_n].
int boundary_orientation_sign(const ModelCorner& m, int face);

// Orientation of the product model, whose standard coordinates interleave the
// factors (boundary coordinates first).
int product_orientation(const ModelCorner& x, int ox, const ModelCorner& y, int oy);

enum class Splitting { Leftmost, Rightmost };

// Orientation of W = X x_Z Y from a splitting of
// 0 -> TW -> TX + TY -> TZ -> 0, with (u, v) -> J_f u - J_g v.
int fibre_product_orientation(const CornerMapGerm& f, const CornerMapGerm& g, int ox, int oy,
                              int oz, const FibreLedger& ledger,
                              Splitting splitting = Splitting::Leftmost);

// Sign of det Phi where e_left * Phi = e_right, or 0 when the two embeddings do
// not parametrise the same subspace.
int identification_sign(const Matrix& e_left, const Matrix& e_right);

struct SignCheck {
  std::string description;
  int predicted = 1;
  int lhs = 0;
  int rhs = 0;
  int identification = 0;
  bool ok = false;
};

struct SignReport {
  std::string identity;
  std::vector<SignCheck> checks;
  bool holds = false;
  std::vector<std::string> failures;
};

// d_-X = (-1)^(dim X + dim Y) X x_Y dY for a submersion f: X -> Y.
SignReport verify_minus_boundary(const CornerMapGerm& f, int ox, int oy);
// The oriented versions of the flat-target, one-submersion and
// both-submersions boundary formulas.
SignReport verify_boundary_formula(const CornerMapGerm& f, const CornerMapGerm& g,
                                   BoundaryFormula formula, int ox, int oy, int oz);
// X x_Z Y = (-1)^((dim X - dim Z)(dim Y - dim Z)) Y x_Z X.
SignReport verify_swap(const CornerMapGerm& f, const CornerMapGerm& g, int ox, int oy, int oz);
// d: V -> Y, e: W -> Y, f: W -> Z, g: X -> Z.
// V x_Y (W x_Z X) = (V x_Y W) x_Z X.
SignReport verify_associativity(const CornerMapGerm& d, const CornerMapGerm& e,
                                const CornerMapGerm& f, const CornerMapGerm& g,
                                const std::vector<int>& signs /* V W X Y Z */);
// d: V -> Y, e: V -> Z, f: W -> Y, g: X -> Z.
// V x_(Y x Z) (W x X) = (-1)^(dim Z (dim Y + dim W)) (V x_Y W) x_Z X.
SignReport verify_direct_product(const CornerMapGerm& d, const CornerMapGerm& e,
                                 const CornerMapGerm& f, const CornerMapGerm& g,
                                 const std::vector<int>& signs /* V W X Y Z */);
// X x_point Y = X x Y.
SignReport verify_axiom_point(const ModelCorner& x, const ModelCorner& y, int ox, int oy);
// X = Y x_(id, Y, f) X.
SignReport verify_axiom_identity(const CornerMapGerm& f, int ox, int oy);
// X x Y = (-1)^(dim X dim Y) Y x X.
SignReport verify_product_swap(const ModelCorner& x, const ModelCorner& y, int ox, int oy);

// Leftmost and rightmost splittings give the same orientation.
bool splitting_independent(const CornerMapGerm& f, const CornerMapGerm& g, int ox, int oy, int oz);

// Orientation sign of the stratum of m reached by taking boundaries along the
// given distinct faces of m, in order. The result is relative to the
// remaining coordinates of m in their original order.
int iterated_boundary_sign(const ModelCorner& m, const std::vector<int>& ordered_faces);

// Constant germ from m to the point.
CornerMapGerm terminal_germ(const ModelCorner& m);

}  // namespace corners
