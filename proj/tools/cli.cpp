#include "cli.hpp"
#include "io.hpp"

#include <corners/errors.hpp>
#include <corners/fibre.hpp>
#include <corners/orient.hpp>
#include <corners/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace corners::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  std::string format = "text";
  std::string suite = "all";
  std::uint64_t seed = 0;
  int max_dim = 4;
  int cases = 0;
};

// Verdicts that the caller asked about and got a "no" for.
struct Negative : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string text;
  Json json;
  int code = 0;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string transfer_text(const std::map<int, int>& pi) {
  std::vector<std::string> parts;
  for (auto [j, i] : pi) parts.push_back(std::to_string(j) + "->" + std::to_string(i));
  return "{" + join(parts, ",") + "}";
}

std::string exponents_text(const BMapGerm& b) {
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < b.exponents.size(); ++r) {
    if (b.flat_rows.count(static_cast<int>(r) + 1)) continue;
    std::vector<std::string> e;
    for (int v : b.exponents[r]) e.push_back(std::to_string(v));
    rows.push_back(e.size() == 1 ? e[0] : "(" + join(e, ",") + ")");
  }
  if (rows.size() == 1 && rows[0].front() != '(') return "exponent " + rows[0];
  return "exponents " + join(rows, ", ");
}

std::string germ_properties(const CornerMapGerm& g) {
  std::vector<std::string> p;
  p.push_back(is_submersion(g) ? "submersion" : "not a submersion");
  if (is_immersion(g)) p.push_back("immersion");
  p.push_back(is_b_submersive(g) ? "b-submersive" : "not b-submersive");
  return join(p, ", ");
}

std::string exponent_text(const Exponent& e) {
  std::vector<std::string> parts;
  for (int v : e) parts.push_back(std::to_string(v));
  return "(" + join(parts, ",") + ")";
}

std::string label_map_text(const CornerPointMap& c) {
  return to_string(c.source_label) + " -> " + to_string(c.target_label);
}

Output classify_cmd(const Json& doc) {
  io::MapInput m = io::read_map(doc);
  if (!m.poly) throw ParseError("classify needs a polynomial map (\"components\")");
  Classification c = classify_at_origin(*m.poly);
  Output o;
  std::ostringstream os;
  switch (c.kind) {
    case MapClass::JoyceSmooth:
      os << "smooth, " << germ_properties(*c.germ) << "\n";
      break;
    case MapClass::BMap:
      os << "b-map, " << exponents_text(*c.bmap) << ", not smooth\n";
      break;
    case MapClass::WeaklySmoothOnly:
      os << "weakly smooth only\n";
      break;
    case MapClass::NotIntoModel:
      os << "not into model\n";
      o.code = 1;
      break;
  }
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    os << "  face " << r.face << ": ";
    if (r.flat)
      os << "flat\n";
    else
      os << "content " << exponent_text(r.content) << ", u(0)=" << to_string(r.unit_at_origin)
         << (r.b_row ? "" : ", not a b-map row") << "\n";
    rows.push_back({{"face", r.face}, {"flat", r.flat}, {"content", r.content},
                    {"unit_at_origin", to_string(r.unit_at_origin)}, {"b_row", r.b_row}});
  }
  if (c.germ) os << "  transfer P=" << to_string(c.germ->transfer_set()) << " Pi=" << transfer_text(c.germ->transfer()) << "\n";
  os << "  jacobian " << m.poly->jacobian_at_origin().to_string() << "\n";
  if (c.negative_witness) {
    std::vector<std::string> w;
    for (const auto& v : *c.negative_witness) w.push_back(to_string(v));
    os << "  leaves the model at (" << join(w, ", ") << ")\n";
    o.json["negative_witness"] = w;
  }
  o.text = os.str();
  o.json["class"] = to_string(c.kind);
  o.json["summary"] = o.text.substr(0, o.text.find('\n'));
  o.json["rows"] = rows;
  o.json["jacobian"] = io::write(m.poly->jacobian_at_origin());
  if (c.bmap) {
    Json e = Json::array();
    for (const auto& row : c.bmap->exponents) e.push_back(row);
    o.json["exponents"] = e;
  }
  if (c.germ) {
    o.json["germ"] = io::write(*c.germ);
    o.json["submersion"] = is_submersion(*c.germ);
  }
  return o;
}

Output germ_cmd(const Json& doc) {
  CornerMapGerm f = io::read_map(doc).as_germ();
  Output o;
  std::ostringstream os;
  os << germ_properties(f) << "\n";
  os << "  germ " << f.to_string() << "\n";
  os << "  flat target faces " << to_string(f.flat_faces()) << "\n";
  BoundaryDecomposition bd = boundary_decomposition(f);
  os << "  source faces: minus " << to_string(bd.minus_faces) << ", plus " << to_string(bd.plus_faces) << "\n";
  Json cmaps = Json::array();
  for (const auto& a : all_subsets(f.source().depth())) {
    CornerPointMap c = corner_map(f, a), h = hat_corner_map(f, a);
    os << "  C(f) " << label_map_text(c) << ", hat " << label_map_text(h) << "\n";
    cmaps.push_back({{"stratum", io::write(a)}, {"target", io::write(c.target_label)},
                     {"hat_target", io::write(h.target_label)}, {"restricted", io::write(c.restricted)}});
  }
  o.json = {{"germ", io::write(f)}, {"submersion", is_submersion(f)}, {"immersion", is_immersion(f)},
            {"b_submersive", is_b_submersive(f)}, {"corner_maps", cmaps}};
  if (is_submersion(f)) {
    SubmersionNormalForm nf = submersion_normal_form(f);
    os << "  normal form: " << f.source().to_string() << " = " << nf.y_model.to_string() << " x "
       << nf.z_model.to_string() << ", witness " << nf.witness.jacobian().to_string() << "\n";
    o.json["normal_form"] = {{"y", io::write(nf.y_model)}, {"z", io::write(nf.z_model)},
                             {"witness", io::write(nf.witness)}};
  }
  o.text = os.str();
  return o;
}

Output compose_cmd(const Json& doc) {
  if (!doc.contains("f") || !doc.contains("g")) throw ParseError("compose needs maps \"f\" and \"g\"");
  io::MapInput mf = io::read_map(doc.at("f")), mg = io::read_map(doc.at("g"));
  Output o;
  std::ostringstream os;
  if (mf.poly && mg.poly) {
    PolyMap q = compose_poly(*mg.poly, *mf.poly);
    std::vector<std::string> comps;
    for (const auto& c : q.components()) comps.push_back(c.to_string());
    os << "g o f = (" << join(comps, ", ") << ")\n";
    o.json["components"] = comps;
    Classification c = classify_at_origin(q);
    os << "  class " << to_string(c.kind) << "\n";
    o.json["class"] = to_string(c.kind);
    if (c.germ) {
      os << "  germ " << c.germ->to_string() << "\n";
      o.json["germ"] = io::write(*c.germ);
    }
  } else {
    CornerMapGerm h = compose(mg.as_germ(), mf.as_germ());
    os << "g o f = " << h.to_string() << "\n";
    o.json["germ"] = io::write(h);
  }
  o.text = os.str();
  return o;
}

Output corners_cmd(const Json& doc) {
  Output o;
  std::ostringstream os;
  if (doc.contains("source")) {
    CornerMapGerm f = io::read_map(doc).as_germ();
    Json rows = Json::array();
    for (const auto& a : all_subsets(f.source().depth())) {
      CornerPointMap c = corner_map(f, a);
      os << label_map_text(c) << ": " << c.restricted.to_string() << "\n";
      rows.push_back({{"stratum", io::write(a)}, {"target", io::write(c.target_label)},
                      {"restricted", io::write(c.restricted)}});
    }
    o.json["corner_maps"] = rows;
    o.text = os.str();
    return o;
  }
  if (!doc.contains("model")) throw ParseError("corners needs a \"model\" or a map");
  ModelCorner m = io::read_model(doc.at("model"));
  Json rows = Json::array();
  for (int j = 0; j <= m.depth(); ++j) {
    std::vector<std::string> labels;
    for (auto& [label, model] : strata(m, j)) labels.push_back(to_string(label));
    os << "k=" << j << ": " << corners_count(m, j) << " corner strata " << join(labels, " ")
       << ", iterated boundary " << iterated_boundary_count(m, j) << ", model "
       << ModelCorner(m.dim() - j, m.depth() - j).to_string() << "\n";
    rows.push_back({{"k", j}, {"corners", corners_count(m, j)}, {"iterated_boundary", iterated_boundary_count(m, j)}});
  }
  o.json = {{"model", io::write(m)}, {"levels", rows}};
  o.text = os.str();
  return o;
}

Output fibre_cmd(const Json& doc) {
  if (!doc.contains("f") || !doc.contains("g")) throw ParseError("fibre needs maps \"f\" and \"g\"");
  CornerMapGerm f = io::read_map(doc.at("f")).as_germ(), g = io::read_map(doc.at("g")).as_germ();
  if (f.target() != g.target()) throw ParseError("f and g have different targets");
  Output o;
  if (!is_transverse(f, g)) {
    o.text = "not transverse\n";
    o.json = {{"transverse", false}, {"summary", "not transverse"}};
    o.code = 1;
    return o;
  }
  FibreLedger l = fibre_product(f, g);
  CornerIdentityReport rep = corner_identity_check(f, g);
  std::string summary = rep.strongly_transverse ? "strongly transverse" : "transverse; NOT strongly transverse";
  summary += "; W=" + l.w_model.to_string();
  if (!rep.holds) {
    for (const auto& lv : rep.levels)
      if (!lv.bijective) {
        summary += "; corner identity FAILS at i=" + std::to_string(lv.i) + " (LHS " + std::to_string(lv.lhs) +
                   ", RHS " + std::to_string(lv.rhs) + ")";
        break;
      }
  }
  const auto& it = l.interface;
  std::ostringstream os;
  os << summary << "\n";
  os << "  P^f=" << to_string(it.p_f) << " Pi^f=" << transfer_text(it.pi_f) << "  P^g=" << to_string(it.p_g)
     << " Pi^g=" << transfer_text(it.pi_g) << "\n";
  os << "  conditions A=" << it.cond_a << " B=" << it.cond_b << " C=" << it.cond_c << " D=" << it.cond_d << "\n";
  Json classes = Json::array();
  for (const auto& e : it.classes) {
    os << "  class " << to_string(e.members) << ": type " << (e.type_a ? "a" : "b")
       << (e.degenerate ? ", degenerate" : "") << "\n";
    classes.push_back({{"members", io::write(e.members)}, {"type", e.type_a ? "a" : "b"},
                       {"degenerate", e.degenerate}});
  }
  os << "  Q=" << to_string(it.q) << "\n";
  Json registry = Json::array();
  for (std::size_t i = 0; i < l.registry.size(); ++i) {
    os << "  W face " << i + 1 << ": " << to_string(l.registry[i]) << "\n";
    registry.push_back(to_string(l.registry[i]));
  }
  os << "  pi_X " << l.pi_x.to_string() << "\n";
  os << "  pi_Y " << l.pi_y.to_string() << "\n";
  Json levels = Json::array();
  for (const auto& lv : rep.levels) {
    os << "  C_" << lv.i << ": LHS " << lv.lhs << ", RHS " << lv.rhs << (lv.bijective ? "" : " (no bijection)") << "\n";
    levels.push_back({{"i", lv.i}, {"lhs", lv.lhs}, {"rhs", lv.rhs}, {"bijective", lv.bijective}});
  }
  if (rep.witness) os << "  witness " << to_string(*rep.witness) << "\n";
  o.text = os.str();
  o.json = {{"transverse", true},
            {"strongly_transverse", rep.strongly_transverse},
            {"summary", summary},
            {"w_model", io::write(l.w_model)},
            {"conditions", {{"A", it.cond_a}, {"B", it.cond_b}, {"C", it.cond_c}, {"D", it.cond_d}}},
            {"classes", classes},
            {"q", io::write(it.q)},
            {"registry", registry},
            {"pi_x", io::write(l.pi_x)},
            {"pi_y", io::write(l.pi_y)},
            {"corner_levels", levels},
            {"corner_identity", rep.holds}};
  return o;
}

int read_sign(const Json& doc, const char* key) {
  if (!doc.contains("orientations") || !doc.at("orientations").contains(key)) return 1;
  int s = doc.at("orientations").at(key).get<int>();
  if (s != 1 && s != -1) throw ParseError("orientations are +1 or -1");
  return s;
}

void add_report(std::ostringstream& os, Json& arr, const SignReport& r, bool& all) {
  os << "  " << r.identity << ": " << (r.holds ? "holds" : "FAILS") << "\n";
  for (const auto& f : r.failures) os << "    " << f << "\n";
  arr.push_back({{"identity", r.identity}, {"holds", r.holds}});
  all = all && r.holds;
}

Output orient_cmd(const Json& doc) {
  Output o;
  std::ostringstream os;
  if (doc.contains("model")) {
    ModelCorner m = io::read_model(doc.at("model"));
    Json faces = Json::array();
    for (int i = 1; i <= m.depth(); ++i) {
      int s = boundary_orientation_sign(m, i);
      os << "face " << i << ": " << (s > 0 ? "+1" : "-1") << "\n";
      faces.push_back(s);
    }
    o.json = {{"model", io::write(m)}, {"boundary_signs", faces}};
    o.text = os.str();
    return o;
  }
  if (!doc.contains("f") || !doc.contains("g")) throw ParseError("orient needs a \"model\" or maps \"f\" and \"g\"");
  CornerMapGerm f = io::read_map(doc.at("f")).as_germ(), g = io::read_map(doc.at("g")).as_germ();
  if (f.target() != g.target()) throw ParseError("f and g have different targets");
  const int ox = read_sign(doc, "X"), oy = read_sign(doc, "Y"), oz = read_sign(doc, "Z");
  if (!is_transverse(f, g)) {
    o.text = "not transverse\n";
    o.json = {{"transverse", false}};
    o.code = 1;
    return o;
  }
  FibreLedger l = fibre_product(f, g);
  const int ow = fibre_product_orientation(f, g, ox, oy, oz, l);
  const bool indep = splitting_independent(f, g, ox, oy, oz);
  os << "W=" << l.w_model.to_string() << " orientation " << (ow > 0 ? "+1" : "-1") << "\n";
  os << "  splitting independent: " << (indep ? "yes" : "NO") << "\n";
  Json reports = Json::array();
  bool all = indep;
  add_report(os, reports, verify_swap(f, g, ox, oy, oz), all);
  add_report(os, reports, verify_axiom_identity(f, ox, oz), all);
  if (is_submersion(f)) add_report(os, reports, verify_minus_boundary(f, ox, oz), all);
  for (BoundaryFormula k : {BoundaryFormula::FlatTarget, BoundaryFormula::OneSubmersion, BoundaryFormula::BothSubmersions}) {
    try {
      add_report(os, reports, verify_boundary_formula(f, g, k, ox, oy, oz), all);
    } catch (const HypothesisNotMet&) {
    }
  }
  o.text = os.str();
  o.json = {{"w_model", io::write(l.w_model)}, {"orientation", ow}, {"splitting_independent", indep},
            {"identities", reports}};
  if (!all) o.code = 1;
  return o;
}

Output complex_cmd(const Json& doc) {
  CornerComplex c = io::read_complex(doc);
  Output o;
  std::ostringstream os;
  ComplexClassification cl = classify(c);
  os << cl.summary() << "\n";
  Json counts = Json::array();
  for (int k = 0; k <= c.max_depth(); ++k) {
    int n = corners_complex(c, k).count;
    os << "  C_" << k << ": " << n << " component" << (n == 1 ? "" : "s") << "\n";
    counts.push_back(n);
  }
  BoundaryGraph bg = boundary_graph(c);
  std::vector<std::string> edges;
  for (auto [u, v] : bg.edges) edges.push_back(std::to_string(u) + "-" + std::to_string(v));
  os << "  boundary graph: " << bg.nodes << " nodes, edges " << (edges.empty() ? "none" : join(edges, " ")) << "\n";
  Json partition = Json::array();
  for (const auto& part : cl.partition) partition.push_back(part);
  if (cl.embedded_n) {
    std::vector<std::string> parts;
    for (const auto& part : cl.partition) {
      std::vector<std::string> p;
      for (int v : part) p.push_back(std::to_string(v));
      parts.push_back("{" + join(p, ",") + "}");
    }
    os << "  partition " << join(parts, " ") << "\n";
  }
  o.text = os.str();
  o.json = {{"summary", cl.summary()},
            {"with_faces", cl.with_faces},
            {"embedded_n", cl.embedded_n ? Json(*cl.embedded_n) : Json(nullptr)},
            {"partition", partition},
            {"corner_components", counts},
            {"boundary_nodes", bg.nodes},
            {"boundary_edges", edges}};
  return o;
}

Output verify_cmd(const Options& opt) {
  SuiteOptions so{opt.seed, opt.max_dim, opt.cases};
  std::vector<SuiteResult> results;
  try {
    results = run_suite(opt.suite, so);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  Output o;
  std::ostringstream os;
  Json arr = Json::array();
  for (const auto& r : results) {
    os << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.cases << " cases, " << r.checks
       << " checks)\n";
    for (const auto& [k, v] : r.counters) os << "  " << k << ": " << v << "\n";
    for (const auto& f : r.failures) os << "  ! " << f << "\n";
    arr.push_back({{"suite", r.name}, {"passed", r.passed()}, {"cases", r.cases}, {"checks", r.checks},
                   {"counters", r.counters}, {"failures", r.failures}});
    if (!r.passed()) o.code = 1;
  }
  o.text = os.str();
  o.json = {{"seed", opt.seed}, {"suites", arr}};
  return o;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calculus of germs of maps between manifolds with corners", "corners"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("input", opt.input, "JSON input file (default: stdin)");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", opt.seed, "Seed for randomized suites");
    sub->add_option("--max-dim", opt.max_dim, "Dimension bound for randomized suites")->check(CLI::Range(0, 6));
  };
  std::map<std::string, std::function<Output(const Json&)>> commands = {
      {"classify", classify_cmd}, {"germ", germ_cmd},     {"compose", compose_cmd}, {"corners", corners_cmd},
      {"fibre", fibre_cmd},       {"orient", orient_cmd}, {"complex", complex_cmd},
  };
  const std::map<std::string, std::string> help = {
      {"classify", "Classify a polynomial map at the origin"},
      {"germ", "Describe a germ: submersion tests, boundary data, corner maps"},
      {"compose", "Compose two maps f then g"},
      {"corners", "Strata and corner maps of a model or a germ"},
      {"fibre", "Fibre product of two germs into a common model"},
      {"orient", "Boundary signs of a model, or fibre product orientations and sign identities"},
      {"complex", "Classify a complex of glued model charts"},
  };
  for (const auto& [name, fn] : commands) add_common(app.add_subcommand(name, help.at(name)), true);
  CLI::App* verify = app.add_subcommand("verify", "Run randomized verification suites");
  add_common(verify, false);
  verify->add_option("--suite", opt.suite, "Suite name or \"all\"");
  verify->add_option("--cases", opt.cases, "Cases per suite (0: suite default)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Output result;
  try {
    if (verify->parsed()) {
      result = verify_cmd(opt);
    } else {
      for (const auto& [name, fn] : commands) {
        if (!app.got_subcommand(name)) continue;
        Json doc = io::parse_document(read_input(opt.input, in));
        try {
          result = fn(doc);
        } catch (const NotTransverse& e) {
          result.text = std::string("not transverse: ") + e.what() + "\n";
          result.json = {{"error", e.what()}};
          result.code = 1;
        } catch (const NotJoyceSmooth& e) {
          result.text = std::string("not smooth: ") + e.what() + "\n";
          result.json = {{"error", e.what()}};
          result.code = 1;
        }
      }
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InternalInvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  if (opt.format == "json")
    out << result.json.dump(2) << "\n";
  else
    out << result.text;
  return result.code;
}

}  // namespace corners::cli
