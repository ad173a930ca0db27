// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
#include "cli.hpp"

#include <corners/complex.hpp>
#include <corners/fibre.hpp>
#include <corners/verify.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

using namespace corners;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;
  void need(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      notes.push_back(what);
    }
  }
  void suite(const SuiteResult& r, std::size_t min_cases) {
    need(r.cases >= min_cases, r.name + ": only " + std::to_string(r.cases) + " cases");
    for (const auto& f : r.failures) need(false, r.name + ": " + f);
    std::ostringstream os;
    os << r.name << " " << r.cases << " cases, " << r.checks << " checks";
    for (const auto& [k, v] : r.counters) os << ", " << k << " " << v;
    notes.push_back(os.str());
  }
};

std::string classify_line(const std::string& doc) {
  std::istringstream in(doc);
  std::ostringstream out, err;
  cli::run({"classify"}, in, out, err);
  std::string s = out.str();
  return s.substr(0, s.find('\n'));
}

Criterion classifier() {
  Criterion c;
  auto map = [](const char* src, const char* tgt, const char* comp) {
    return std::string(R"({"source":)") + src + R"(,"target":)" + tgt + R"(,"components":[")" + comp + "\"]}";
  };
  const char* half = R"({"dim":1,"depth":1})";
  const char* line = R"({"dim":1,"depth":0})";
  const char* quad = R"({"dim":2,"depth":2})";
  std::string inc = classify_line(map(half, line, "x1"));
  c.need(inc.rfind("smooth, not a submersion", 0) == 0, "(c) inclusion: " + inc);
  std::string sq = classify_line(map(half, half, "x1^2"));
  c.need(sq == "b-map, exponent 2, not smooth", "(d) x^2: " + sq);
  std::string sum = classify_line(map(quad, half, "x1+x2"));
  c.need(sum == "weakly smooth only", "(e) x+y: " + sum);
  std::string prod = classify_line(map(quad, half, "x1*x2"));
  c.need(prod == "b-map, exponents (1,1), not smooth", "(f) xy: " + prod);
  return c;
}

Criterion corner_identity_criterion(const SuiteResult& r) {
  Criterion c;
  c.suite(r, 500);
  ModelCorner h(1, 1), q(2, 2);
  CornerMapGerm f(h, q, {{1, 1}, {2, 1}}, Matrix{{1}, {2}});
  CornerMapGerm g(h, q, {{1, 1}, {2, 1}}, Matrix{{2}, {1}});
  CornerIdentityReport rep = corner_identity_check(f, g);
  for (const auto& lv : rep.levels) {
    if (lv.i == 0)
      c.need(lv.lhs == 1 && lv.rhs == 2 && !lv.bijective, "(x,2x), (2y,y) at i=0");
    else
      c.need(lv.lhs == 0 && lv.rhs == 0, "(x,2x), (2y,y) nonempty at i=" + std::to_string(lv.i));
  }
  return c;
}

Criterion complexes(const SuiteResult& r) {
  Criterion c;
  c.suite(r, 1);
  c.need(classify(teardrop_complex()).summary() == "plain only", "teardrop");
  ComplexClassification s = classify(square_complex());
  c.need(s.embedded_n == 2, "square N");
  c.need(classify(half_space_complex(2)).embedded_n == 1, "half-space N");
  return c;
}

}  // namespace

int main() {
  SuiteOptions opt{0, 4, 0};
  bool all = true;
  auto report = [&](int n, const char* what, const Criterion& c) {
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << n << " " << what << "\n";
    for (const auto& note : c.notes) std::cout << "    " << note << "\n";
    all = all && c.ok;
  };
  auto one = [&](SuiteResult r, std::size_t min_cases) {
    Criterion c;
    c.suite(r, min_cases);
    return c;
  };

  report(1, "classifier examples", classifier());
  report(2, "functoriality", one(functor_suite(opt), 1000));
  report(3, "product counts", one(product_suite(opt), 1));
  report(4, "fibre dimension, depth and interface conditions", one(fibre_suite(opt), 500));
  report(5, "corner identity", corner_identity_criterion(corner_identity_suite(opt)));
  report(6, "universal property", one(universal_suite(opt), 500));
  report(7, "orientation identities", one(sign_suite(opt), 200));
  report(8, "complex classification", complexes(complex_suite(opt)));
  report(9, "boundary formulas", one(formula_suite(opt), 200));
  return all ? 0 : 1;
}
