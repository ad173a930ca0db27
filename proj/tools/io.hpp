#pragma once

#include <corners/complex.hpp>
#include <corners/germ.hpp>
#include <corners/poly.hpp>

#include <json.hpp>

#include <optional>

namespace corners::io {

using Json = nlohmann::json;

// A map read from input: a polynomial map (lowered on demand) or germ data.
struct MapInput {
  std::optional<PolyMap> poly;
  std::optional<CornerMapGerm> germ;

  // Throws NotJoyceSmooth for polynomial maps that are not smooth.
  CornerMapGerm as_germ() const;
};

Json parse_document(const std::string& text);

ModelCorner read_model(const Json& j);
Rational read_rational(const Json& j);
Matrix read_matrix(const Json& j, std::size_t rows, std::size_t cols);
MapInput read_map(const Json& j);
CornerComplex read_complex(const Json& j);

Json write(const ModelCorner& m);
Json write(const Matrix& m);
Json write(const StratumLabel& s);
Json write(const CornerMapGerm& g);
Json write_transfer(const std::map<int, int>& pi);

}  // namespace corners::io
