#include "io.hpp"

#include <corners/errors.hpp>

namespace corners::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int read_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

CornerMapGerm MapInput::as_germ() const { return germ ? *germ : germ_of(*poly); }

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

ModelCorner read_model(const Json& j) {
  try {
    return ModelCorner(read_int(field(j, "dim"), "dim"), read_int(field(j, "depth"), "depth"));
  } catch (const InvalidModel& e) {
    throw ParseError(e.what());
  }
}

Rational read_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("rationals are integers or \"p/q\" strings");
}

Matrix read_matrix(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ParseError("matrix needs " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError("matrix row " + std::to_string(r + 1) + " needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = read_rational(j[r][c]);
  }
  return m;
}

MapInput read_map(const Json& j) {
  ModelCorner source = read_model(field(j, "source")), target = read_model(field(j, "target"));
  MapInput out;
  if (j.contains("components")) {
    std::vector<std::string> comps;
    for (const auto& c : field(j, "components")) {
      if (!c.is_string()) throw ParseError("components are polynomial strings");
      comps.push_back(c.get<std::string>());
    }
    out.poly = parse_poly_map(source, target, comps);
    return out;
  }
  std::map<int, int> transfer;
  if (j.contains("Pi")) {
    for (auto& [key, value] : j.at("Pi").items()) {
      try {
        transfer[std::stoi(key)] = read_int(value, "Pi entry");
      } catch (const std::logic_error&) {
        throw ParseError("Pi keys are target faces");
      }
    }
  }
  if (j.contains("P")) {
    std::set<int> listed;
    for (const auto& v : j.at("P")) listed.insert(read_int(v, "P entry"));
    std::set<int> keys;
    for (auto [k, v] : transfer) keys.insert(k);
    if (listed != keys) throw ParseError("P must list exactly the faces in Pi");
  }
  Matrix jac = read_matrix(field(j, "jacobian"), static_cast<std::size_t>(target.dim()),
                           static_cast<std::size_t>(source.dim()));
  out.germ = CornerMapGerm(source, target, std::move(transfer), std::move(jac));
  return out;
}

CornerComplex read_complex(const Json& j) {
  if (j.contains("builtin")) {
    std::string name = j.at("builtin").get<std::string>();
    if (name == "square") return square_complex();
    if (name == "teardrop") return teardrop_complex();
    if (name == "half-space") return half_space_complex(j.value("dim", 1));
    if (name == "open") return open_complex(j.value("dim", 1));
    throw ParseError("unknown builtin complex \"" + name + "\"");
  }
  std::vector<ModelCorner> charts;
  for (const auto& c : field(j, "charts")) charts.push_back(read_model(c));
  std::vector<Gluing> gluings;
  if (j.contains("gluings")) {
    for (const auto& g : j.at("gluings")) {
      const Json& a = field(g, "a");
      const Json& b = field(g, "b");
      if (!a.is_array() || a.size() != 2 || !b.is_array() || b.size() != 2)
        throw ParseError("gluing ends are [chart, face]");
      Gluing out{read_int(a[0], "chart"), read_int(a[1], "face"), read_int(b[0], "chart"),
                 read_int(b[1], "face"), Matrix(), {}};
      if (out.chart_a < 0 || out.chart_a >= static_cast<int>(charts.size()))
        throw ParseError("gluing refers to a missing chart");
      std::size_t n = static_cast<std::size_t>(charts[static_cast<std::size_t>(out.chart_a)].dim() -
                                               (out.face_a == 0 ? 0 : 1));
      if (g.contains("linear")) out.linear = read_matrix(g.at("linear"), n, n);
      if (g.contains("offset"))
        for (const auto& v : g.at("offset")) out.offset.push_back(read_rational(v));
      gluings.push_back(std::move(out));
    }
  }
  return CornerComplex(std::move(charts), std::move(gluings));
}

Json write(const ModelCorner& m) { return {{"dim", m.dim()}, {"depth", m.depth()}}; }

Json write(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json write(const StratumLabel& s) { return Json(std::vector<int>(s.begin(), s.end())); }

Json write_transfer(const std::map<int, int>& pi) {
  Json j = Json::object();
  for (auto [k, v] : pi) j[std::to_string(k)] = v;
  return j;
}

Json write(const CornerMapGerm& g) {
  return {{"source", write(g.source())},
          {"target", write(g.target())},
          {"P", write(g.transfer_set())},
          {"Pi", write_transfer(g.transfer())},
          {"jacobian", write(g.jacobian())}};
}

}  // namespace corners::io
