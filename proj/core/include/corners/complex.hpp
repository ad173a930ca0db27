#pragma once

#include <corners/matrix.hpp>
#include <corners/model.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace corners {

// Identification of two chart pieces by an affine map x -> linear*x + offset.
// With face_a, face_b > 0 the closed face face_a of chart_a is glued onto face
// face_b of chart_b and the map acts on face-model coordinates (the chart's
// coordinates with that face's coordinate deleted). With both faces 0 the
// charts overlap in their interiors and the map acts on chart coordinates.
struct Gluing {
  int chart_a = 0, face_a = 0;
  int chart_b = 0, face_b = 0;
  Matrix linear;
  std::vector<Rational> offset;
};

class CornerComplex {
 public:
  CornerComplex() = default;
  // Gluings with an empty linear part get the identity; an empty offset is 0.
  CornerComplex(std::vector<ModelCorner> charts, std::vector<Gluing> gluings);

  const std::vector<ModelCorner>& charts() const { return charts_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }
  int dim() const { return charts_.empty() ? 0 : charts_[0].dim(); }
  int max_depth() const;

 private:
  std::vector<ModelCorner> charts_;
  std::vector<Gluing> gluings_;
};

// A depth-k stratum piece of one chart.
struct Piece {
  int chart = 0;
  StratumLabel label;
  friend auto operator<=>(const Piece&, const Piece&) = default;
};

// Connected components of C_k: every piece with |label| = k, grouped.
struct CornerComponents {
  int k = 0;
  std::vector<Piece> pieces;
  std::vector<int> component;  // component index of each piece, numbered by first appearance
  int count = 0;
  int component_of(const Piece& p) const;
};

CornerComponents corners_complex(const CornerComplex& c, int k);

// One chart per (chart, face); face gluings become interior overlaps.
CornerComplex boundary_complex(const CornerComplex& c);
CornerComplex product_complex(const CornerComplex& a, const CornerComplex& b);

struct BoundaryGraph {
  int nodes = 0;                          // boundary components
  std::vector<std::pair<int, int>> edges; // one per depth-2 piece class, may be loops
  // For each component of C_2: how many of its two local boundary components
  // lie in each boundary component (pairs (node, count)).
  std::vector<std::vector<std::pair<int, int>>> multiplicity;
};

BoundaryGraph boundary_graph(const CornerComplex& c);

struct ComplexClassification {
  bool with_faces = false;
  std::optional<int> embedded_n;              // minimal N, if any decomposition exists
  std::vector<std::vector<int>> partition;    // witness: boundary components per part
  std::string summary() const;
};

ComplexClassification classify(const CornerComplex& c);

CornerComplex square_complex();
CornerComplex teardrop_complex();
CornerComplex half_space_complex(int n);
CornerComplex open_complex(int n);
// A single chart with no gluings: the model itself.
CornerComplex model_complex(const ModelCorner& m);

}  // namespace corners
