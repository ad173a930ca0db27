#pragma once

#include <corners/germ.hpp>

#include <optional>
#include <string>
#include <vector>

namespace corners {

bool is_transverse(const CornerMapGerm& f, const CornerMapGerm& g);

// A pair of stratum labels of X and Y with a common image label L in Z.
struct MatchedTriple {
  StratumLabel a;
  StratumLabel b;
  StratumLabel l;
  int level() const {
    return static_cast<int>(a.size() + b.size()) - static_cast<int>(l.size());
  }
  friend bool operator==(const MatchedTriple&, const MatchedTriple&) = default;
  friend auto operator<=>(const MatchedTriple&, const MatchedTriple&) = default;
};

std::string to_string(const MatchedTriple& t);

// Every (A, B) with C(f)(A) = C(g)(B), ordered by (A, B).
std::vector<MatchedTriple> matched_triples(const CornerMapGerm& f, const CornerMapGerm& g);

bool is_strongly_transverse(const CornerMapGerm& f, const CornerMapGerm& g);

struct EquivalenceClass {
  std::set<int> members;     // target faces, all in P^f and P^g
  std::set<int> x_faces;     // Pi^f(E)
  std::set<int> y_faces;     // Pi^g(E)
  bool type_a = false;       // |Pi^f(E)| + |Pi^g(E)| == |E| + 1
  // A type-(a) class sharing an X face with Pi^f(P^f \ P^g) (or a Y face with
  // Pi^g(P^g \ P^f)). Its defining functional vanishes on the fibre product,
  // so it contributes no boundary face. Only possible when (A) fails.
  bool degenerate = false;
};

struct TransversalityInterface {
  std::set<int> p_f, p_g;
  std::map<int, int> pi_f, pi_g;
  bool cond_a = false, cond_b = false, cond_c = false, cond_d = false;
  std::vector<EquivalenceClass> classes;  // ordered by smallest member
  std::set<int> q;                        // smallest member of each type-(a) class

  bool has_type_b() const;
};

// Does not require transversality; every verdict is recorded.
TransversalityInterface compute_interface(const CornerMapGerm& f, const CornerMapGerm& g);
// Requires transversality. Throws InternalInvariantViolation if (B), (C) or (D)
// fail. A failure of (A) is recorded, not thrown: it does occur for transverse
// pairs and the construction handles it through degenerate classes.
TransversalityInterface interface_data(const CornerMapGerm& f, const CornerMapGerm& g);

enum class FaceType { FromX, FromY, FromClass };

struct RegistryEntry {
  FaceType type;
  int face = 0;           // X face (FromX), Y face (FromY), or Pi^f(q_E) (FromClass)
  std::set<int> members;  // the class E for FromClass
  std::size_t functional; // coordinate of R^m + R^n that defines this face
};

std::string to_string(const RegistryEntry& e);

struct FibreLedger {
  ModelCorner w_model;
  TransversalityInterface interface;
  std::vector<RegistryEntry> registry;
  CornerMapGerm pi_x;
  CornerMapGerm pi_y;
  // Linear functionals on R^m + R^n whose restrictions to ker[J_f | -J_g] are
  // the coordinates of W (the first d define the faces).
  Matrix coordinates;
  // [J_pi_X ; J_pi_Y]: an isomorphism from R^dim W onto that kernel.
  Matrix kernel_map;
};

FibreLedger fibre_product(const CornerMapGerm& f, const CornerMapGerm& g);

// Returns the unique h with pi_X o h = h1 and pi_Y o h = h2. Throws NoMediator
// if f o h1 != g o h2 or no valid germ satisfies both equations.
CornerMapGerm check_universal_property(const CornerMapGerm& f, const CornerMapGerm& g,
                                       const FibreLedger& ledger, const CornerMapGerm& h1,
                                       const CornerMapGerm& h2);

// Restriction of (f, g) to the strata A, B over the common label L.
std::pair<CornerMapGerm, CornerMapGerm> restricted_pair(const CornerMapGerm& f,
                                                        const CornerMapGerm& g,
                                                        const MatchedTriple& t);

struct CornerLevel {
  int i = 0;
  std::size_t lhs = 0;  // strata of W of codimension i
  std::size_t rhs = 0;  // matched triples of level i
  bool bijective = false;
  std::vector<std::pair<StratumLabel, MatchedTriple>> correspondence;
};

struct CornerIdentityReport {
  bool strongly_transverse = false;
  ModelCorner w_model;
  std::vector<CornerLevel> levels;
  bool rhs_transverse = true;   // every restricted pair is transverse
  bool models_match = true;     // every restricted fibre product is (n-i, d-i)
  bool lemma_inequality = true; // |A|+|B| >= |L| on every matched triple
  std::optional<MatchedTriple> witness;  // level-0 triple not hit by C_0(W)
  bool holds = false;
  std::vector<std::string> failures;
};

CornerIdentityReport corner_identity_check(const CornerMapGerm& f, const CornerMapGerm& g);

enum class BoundaryFormula {
  MinusBoundary,    // d_-X = X x_Y dY for a submersion f
  FlatTarget,       // dZ empty
  OneSubmersion,    // f a submersion (extension: f b-submersive)
  BothSubmersions,  // f, g submersions (extension: both b-submersive)
};

std::string to_string(BoundaryFormula k);

enum class TermKind { XFace, YFace, Corner, MinusFace };

struct FormulaTerm {
  TermKind kind;
  int x_face = 0, y_face = 0, z_face = 0;  // faces the term is taken over (0: none)
  std::string description;
  CornerMapGerm left, right;  // the pair whose fibre product the term is
  std::optional<std::size_t> w_face;  // 1-based face of W it corresponds to
};

struct FormulaReport {
  BoundaryFormula formula;
  bool extension = false;  // hypotheses only met in the b-submersive form
  std::vector<FormulaTerm> terms;
  bool holds = false;
  std::vector<std::string> failures;
};

// Throws HypothesisNotMet when neither the stated hypotheses nor the
// b-submersive extension apply. MinusBoundary only looks at f.
FormulaReport boundary_formula_check(const CornerMapGerm& f, const CornerMapGerm& g,
                                     BoundaryFormula formula);

}  // namespace corners
