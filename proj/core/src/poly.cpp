#include <corners/poly.hpp>
#include <corners/errors.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace corners {

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  Exponent e(nvars, 0);
  e.at(index - 1) = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  Polynomial r(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Polynomial result = constant(nvars_, 1), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("point dimension mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& xs) const {
  return substitute(xs, xs.empty() ? 0 : xs[0].nvars());
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& xs, int n) const {
  if (static_cast<int>(xs.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
  for (const auto& x : xs)
    if (x.nvars() != n) throw std::invalid_argument("substitution variable count mismatch");
  Polynomial r(n);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(n, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t = t * xs[i].pow(e[i]);
    r = r + t;
  }
  return r;
}

Exponent Polynomial::content() const {
  if (terms_.empty()) return Exponent(nvars_, 0);
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Polynomial Polynomial::divide_monomial(const Exponent& d) const {
  Polynomial r(nvars_);
  Exponent q(nvars_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) {
      q[i] = e[i] - d[i];
      if (q[i] < 0) throw std::invalid_argument("monomial does not divide polynomial");
    }
    r.add_term(q, c);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    bool wrote = false;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (wrote) os << '*';
      os << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars) : s_(text), n_(nvars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int n_;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) +
                     ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      if (eat('+')) p = p + term();
      else if (eat('-')) p = p - term();
      else return p;
    }
  }
  Polynomial term() {
    Polynomial p = unary();
    while (eat('*')) p = p * unary();
    return p;
  }
  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Polynomial power() {
    Polynomial base = primary();
    if (eat('^')) {
      std::string d = digits();
      if (d.size() > 3) fail("exponent too large");
      return base.pow(std::stoi(d));
    }
    return base;
  }
  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (ch == 'x') {
      ++pos_;
      std::string d = digits();
      int idx = d.size() > 4 ? 0 : std::stoi(d);
      if (idx < 1 || idx > n_) fail("variable x" + d + " out of range 1.." + std::to_string(n_));
      return Polynomial::variable(n_, idx);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::string den = digits();
        Rational q(num + "/" + den);
        if (q.get_den() == 0) fail("zero denominator");
        q.canonicalize();
        return Polynomial::constant(n_, q);
      }
      return Polynomial::constant(n_, Rational(num));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars) { return Parser(text, nvars).parse(); }

PolyMap::PolyMap(ModelCorner source, ModelCorner target, std::vector<Polynomial> components)
    : source_(source), target_(target), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != target_.dim())
    throw ModelMismatch("map into " + target_.to_string() + " needs " + std::to_string(target_.dim()) +
                        " components, got " + std::to_string(components_.size()));
  Exponent zero(source_.dim(), 0);
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (components_[j].nvars() != source_.dim())
      throw ModelMismatch("component " + std::to_string(j + 1) + " has the wrong variable count");
    if (sgn(components_[j].coefficient(zero)) != 0)
      throw InvalidGerm("component " + std::to_string(j + 1) + " does not vanish at the origin");
  }
}

Matrix PolyMap::jacobian_at_origin() const {
  Matrix j(components_.size(), static_cast<std::size_t>(source_.dim()));
  for (std::size_t r = 0; r < components_.size(); ++r)
    for (int k = 0; k < source_.dim(); ++k) {
      Exponent e(source_.dim(), 0);
      e[k] = 1;
      j(r, static_cast<std::size_t>(k)) = components_[r].coefficient(e);
    }
  return j;
}

PolyMap parse_poly_map(const ModelCorner& source, const ModelCorner& target,
                       const std::vector<std::string>& components) {
  std::vector<Polynomial> ps;
  for (const auto& c : components) ps.push_back(parse_polynomial(c, source.dim()));
  return PolyMap(source, target, std::move(ps));
}

std::string to_string(MapClass k) {
  switch (k) {
    case MapClass::NotIntoModel: return "not into model";
    case MapClass::WeaklySmoothOnly: return "weakly smooth only";
    case MapClass::BMap: return "b-map";
    case MapClass::JoyceSmooth: return "smooth";
  }
  return "?";
}

namespace {

// Nonnegative on the whole model: every coefficient >= 0 and every interior
// variable appears to an even power, so each monomial is >= 0 there.
bool nonnegative_certificate(const Polynomial& q, int a) {
  for (const auto& [e, c] : q.terms()) {
    if (sgn(c) < 0) return false;
    for (std::size_t i = static_cast<std::size_t>(a); i < e.size(); ++i)
      if (e[i] % 2) return false;
  }
  return true;
}

std::optional<Point> find_negative(const std::vector<const Polynomial*>& rows, const ModelCorner& m) {
  const Rational eps(1, 1024);
  std::vector<Rational> bvals = {0, eps, eps / 2, eps / 4};
  std::vector<Rational> ivals = {0, eps, -eps, eps / 2, -eps / 2, eps / 4, -eps / 4};
  const int n = m.dim();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  Point x(static_cast<std::size_t>(n));
  while (true) {
    for (int i = 0; i < n; ++i) x[i] = i < m.depth() ? bvals[idx[i]] : ivals[idx[i]];
    for (const Polynomial* q : rows)
      if (sgn(q->evaluate(x)) < 0) return x;
    int t = n - 1;
    while (t >= 0) {
      std::size_t limit = t < m.depth() ? bvals.size() : ivals.size();
      if (++idx[t] < limit) break;
      idx[t] = 0;
      --t;
    }
    if (t < 0) return std::nullopt;
  }
}

}  // namespace

Classification classify_at_origin(const PolyMap& q) {
  Classification out;
  const int a = q.source().depth(), c = q.target().depth();
  bool all_b = true, all_unit = true;
  std::vector<const Polynomial*> suspicious;
  for (int j = 1; j <= c; ++j) {
    const Polynomial& qj = q.components()[j - 1];
    BoundaryRow row;
    row.face = j;
    if (qj.is_zero()) {
      row.flat = true;
      row.b_row = true;
      row.content = Exponent(q.source().dim(), 0);
    } else {
      row.content = qj.content();
      row.unit_at_origin = qj.coefficient(row.content);
      bool boundary_support = true;
      for (int i = a; i < q.source().dim(); ++i)
        if (row.content[i]) boundary_support = false;
      row.b_row = sgn(row.unit_at_origin) > 0 && boundary_support;
      int degree = std::accumulate(row.content.begin(), row.content.end(), 0);
      if (degree != 1) all_unit = false;
    }
    if (!row.b_row) {
      all_b = false;
      if (!nonnegative_certificate(qj, a)) suspicious.push_back(&qj);
    }
    out.rows.push_back(std::move(row));
  }
  if (!all_b) {
    out.negative_witness = find_negative(suspicious, q.source());
    out.kind = out.negative_witness ? MapClass::NotIntoModel : MapClass::WeaklySmoothOnly;
    return out;
  }
  BMapGerm b{q.source(), q.target(), {}, {}, q.jacobian_at_origin()};
  for (const auto& row : out.rows) {
    if (row.flat) b.flat_rows.insert(row.face);
    b.exponents.emplace_back(row.content.begin(), row.content.begin() + a);
  }
  out.bmap = b;
  if (!all_unit) {
    out.kind = MapClass::BMap;
    return out;
  }
  std::map<int, int> transfer;
  for (const auto& row : out.rows)
    if (!row.flat)
      for (int i = 0; i < a; ++i)
        if (row.content[i]) transfer[row.face] = i + 1;
  out.germ = CornerMapGerm(q.source(), q.target(), transfer, b.jacobian);
  out.kind = MapClass::JoyceSmooth;
  return out;
}

CornerMapGerm germ_of(const PolyMap& q) {
  Classification c = classify_at_origin(q);
  if (c.kind != MapClass::JoyceSmooth)
    throw NotJoyceSmooth("map is classified as " + to_string(c.kind));
  return *c.germ;
}

PolyMap compose_poly(const PolyMap& g, const PolyMap& f) {
  if (f.target() != g.source())
    throw ModelMismatch("cannot compose: " + f.target().to_string() + " vs " + g.source().to_string());
  std::vector<Polynomial> out;
  for (const auto& gj : g.components()) out.push_back(gj.substitute(f.components(), f.source().dim()));
  return PolyMap(f.source(), g.target(), std::move(out));
}

PolyMap linear_poly_map(const CornerMapGerm& f) {
  const int m = f.source().dim();
  std::vector<Polynomial> comps;
  for (int r = 0; r < f.target().dim(); ++r) {
    Polynomial p(m);
    for (int k = 0; k < m; ++k) {
      Exponent e(m, 0);
      e[k] = 1;
      p.add_term(e, f.jacobian()(static_cast<std::size_t>(r), static_cast<std::size_t>(k)));
    }
    comps.push_back(std::move(p));
  }
  return PolyMap(f.source(), f.target(), std::move(comps));
}

}  // namespace corners
