#pragma once

#include <corners/germ.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace corners {

using Exponent = std::vector<int>;

// Higher total degree first, ties broken by reverse lexicographic order of the
// exponent vector (so x1 sorts before x2).
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse multivariate polynomial with rational coefficients in x1..xn.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);  // 1-based
  static Polynomial monomial(const Exponent& e, const Rational& c);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial pow(int k) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Rational evaluate(const std::vector<Rational>& x) const;
  // Substitutes xs[i] for variable i+1; all xs share their variable count.
  Polynomial substitute(const std::vector<Polynomial>& xs) const;
  // Same, for a result in n variables (needed when xs is empty).
  Polynomial substitute(const std::vector<Polynomial>& xs, int n) const;

  // Coordinatewise minimum exponent over the support (zero polynomial: all 0).
  Exponent content() const;
  // Exact quotient by x^e; throws if some term is not divisible.
  Polynomial divide_monomial(const Exponent& e) const;

  std::string to_string() const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

Polynomial parse_polynomial(std::string_view text, int nvars);

class PolyMap {
 public:
  PolyMap(ModelCorner source, ModelCorner target, std::vector<Polynomial> components);

  const ModelCorner& source() const { return source_; }
  const ModelCorner& target() const { return target_; }
  const std::vector<Polynomial>& components() const { return components_; }
  Matrix jacobian_at_origin() const;

 private:
  ModelCorner source_;
  ModelCorner target_;
  std::vector<Polynomial> components_;
};

PolyMap parse_poly_map(const ModelCorner& source, const ModelCorner& target,
                       const std::vector<std::string>& components);

struct BMapGerm {
  ModelCorner source;
  ModelCorner target;
  std::vector<std::vector<int>> exponents;  // c rows, a columns
  std::set<int> flat_rows;
  Matrix jacobian;
};

enum class MapClass { NotIntoModel, WeaklySmoothOnly, BMap, JoyceSmooth };

std::string to_string(MapClass k);

struct BoundaryRow {
  int face = 0;
  bool flat = false;
  Exponent content;
  Rational unit_at_origin;  // u(0) where q = x^content * u
  bool b_row = false;
};

struct Classification {
  MapClass kind = MapClass::WeaklySmoothOnly;
  std::vector<BoundaryRow> rows;
  std::optional<BMapGerm> bmap;         // for BMap and JoyceSmooth
  std::optional<CornerMapGerm> germ;    // for JoyceSmooth
  std::optional<Point> negative_witness;
};

Classification classify_at_origin(const PolyMap& q);
CornerMapGerm germ_of(const PolyMap& q);
PolyMap compose_poly(const PolyMap& g, const PolyMap& f);

// The polynomial map x -> J x realising a germ's first-order data. Flat rows
// and transferred rows are reproduced exactly, so germ_of returns the germ.
PolyMap linear_poly_map(const CornerMapGerm& f);

}  // namespace corners
