#include <corners/fibre.hpp>
#include <corners/errors.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace corners {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

void require_common_target(const CornerMapGerm& f, const CornerMapGerm& g) {
  if (f.target() != g.target())
    throw ModelMismatch("maps have different targets: " + f.target().to_string() + " vs " +
                        g.target().to_string());
}

StratumLabel image_label(const CornerMapGerm& f, const StratumLabel& a) {
  StratumLabel l;
  for (auto [j, i] : f.transfer())
    if (a.count(i)) l.insert(j);
  return l;
}

std::vector<std::size_t> range(int from, int to) {
  std::vector<std::size_t> r;
  for (int i = from; i < to; ++i) r.push_back(uz(i));
  return r;
}

std::set<int> image(const std::map<int, int>& pi, const std::set<int>& dom) {
  std::set<int> out;
  for (int j : dom) out.insert(pi.at(j));
  return out;
}

bool injective_on(const std::map<int, int>& pi, const std::set<int>& dom) {
  return image(pi, dom).size() == dom.size();
}

bool disjoint(const std::set<int>& x, const std::set<int>& y) {
  for (int v : x)
    if (y.count(v)) return false;
  return true;
}

}  // namespace

bool is_transverse(const CornerMapGerm& f, const CornerMapGerm& g) {
  require_common_target(f, g);
  const int p = f.target().dim(), c = f.target().depth();
  Matrix joint = Matrix::hstack(f.jacobian(), g.jacobian());
  if (rank(joint) != uz(p)) return false;
  auto rows = range(c, p);
  auto fc = range(f.source().depth(), f.source().dim());
  auto gc = range(g.source().depth(), g.source().dim());
  Matrix interior = Matrix::hstack(f.jacobian().select_rows(rows).select_cols(fc),
                                   g.jacobian().select_rows(rows).select_cols(gc));
  return rank(interior) == uz(p - c);
}

std::string to_string(const MatchedTriple& t) {
  return "(" + to_string(t.a) + "," + to_string(t.b) + "," + to_string(t.l) + ")";
}

std::vector<MatchedTriple> matched_triples(const CornerMapGerm& f, const CornerMapGerm& g) {
  require_common_target(f, g);
  std::vector<std::pair<StratumLabel, StratumLabel>> gs;
  for (auto& b : all_subsets(g.source().depth())) gs.emplace_back(b, image_label(g, b));
  std::vector<MatchedTriple> out;
  for (auto& a : all_subsets(f.source().depth())) {
    StratumLabel l = image_label(f, a);
    for (const auto& [b, lb] : gs)
      if (lb == l) out.push_back({a, b, l});
  }
  return out;
}

bool is_strongly_transverse(const CornerMapGerm& f, const CornerMapGerm& g) {
  if (!is_transverse(f, g)) return false;
  for (const auto& t : matched_triples(f, g)) {
    bool trivial = t.a.empty() && t.b.empty() && t.l.empty();
    if (t.level() <= 0 && !trivial) return false;
  }
  return true;
}

bool TransversalityInterface::has_type_b() const {
  return std::any_of(classes.begin(), classes.end(), [](const auto& e) { return !e.type_a; });
}

TransversalityInterface compute_interface(const CornerMapGerm& f, const CornerMapGerm& g) {
  require_common_target(f, g);
  TransversalityInterface t;
  t.p_f = f.transfer_set();
  t.p_g = g.transfer_set();
  t.pi_f = f.transfer();
  t.pi_g = g.transfer();
  std::set<int> both, f_only, g_only, all;
  for (int j : t.p_f) (t.p_g.count(j) ? both : f_only).insert(j);
  for (int j : t.p_g)
    if (!t.p_f.count(j)) g_only.insert(j);
  all.insert(t.p_f.begin(), t.p_f.end());
  all.insert(t.p_g.begin(), t.p_g.end());

  std::set<int> f_only_image = image(t.pi_f, f_only), g_only_image = image(t.pi_g, g_only);
  t.cond_a = disjoint(image(t.pi_f, both), f_only_image) && disjoint(image(t.pi_g, both), g_only_image);
  t.cond_b = injective_on(t.pi_f, f_only) && injective_on(t.pi_g, g_only);
  t.cond_d = static_cast<int>(all.size()) == f.target().depth();

  // Union-find on P^f n P^g: i ~ j when they share a face of X or of Y.
  std::vector<int> members(both.begin(), both.end());
  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (t.pi_f.at(members[i]) == t.pi_f.at(members[j]) ||
          t.pi_g.at(members[i]) == t.pi_g.at(members[j]))
        parent[find(j)] = find(i);
  std::map<std::size_t, EquivalenceClass> by_root;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::size_t r = find(i);
    if (!by_root.count(r)) order.push_back(r);
    by_root[r].members.insert(members[i]);
  }
  t.cond_c = true;
  for (std::size_t r : order) {
    EquivalenceClass e = by_root[r];
    e.x_faces = image(t.pi_f, e.members);
    e.y_faces = image(t.pi_g, e.members);
    std::size_t s = e.x_faces.size() + e.y_faces.size();
    if (s != e.members.size() && s != e.members.size() + 1) t.cond_c = false;
    e.type_a = s == e.members.size() + 1;
    e.degenerate = e.type_a && (!disjoint(e.x_faces, f_only_image) || !disjoint(e.y_faces, g_only_image));
    if (e.type_a) t.q.insert(*e.members.begin());
    t.classes.push_back(std::move(e));
  }
  return t;
}

TransversalityInterface interface_data(const CornerMapGerm& f, const CornerMapGerm& g) {
  if (!is_transverse(f, g)) throw NotTransverse("maps are not transverse");
  TransversalityInterface t = compute_interface(f, g);
  if (!t.cond_b || !t.cond_c || !t.cond_d)
    throw InternalInvariantViolation(std::string("transverse pair violates condition ") +
                                     (!t.cond_b ? "(B)" : !t.cond_c ? "(C)" : "(D)"));
  return t;
}

std::string to_string(const RegistryEntry& e) {
  switch (e.type) {
    case FaceType::FromX: return "(i) X face " + std::to_string(e.face);
    case FaceType::FromY: return "(ii) Y face " + std::to_string(e.face);
    case FaceType::FromClass: return "(iii) class " + to_string(e.members);
  }
  return "?";
}

FibreLedger fibre_product(const CornerMapGerm& f, const CornerMapGerm& g) {
  FibreLedger out;
  out.interface = interface_data(f, g);
  const auto& t = out.interface;
  const int m = f.source().dim(), a = f.source().depth();
  const int ny = g.source().dim(), b = g.source().depth();
  const int p = f.target().dim();
  const int total = m + ny;

  std::set<int> x_used = image(t.pi_f, t.p_f), y_used = image(t.pi_g, t.p_g);
  for (int i = 1; i <= a; ++i)
    if (!x_used.count(i)) out.registry.push_back({FaceType::FromX, i, {}, uz(i - 1)});
  for (int i = 1; i <= b; ++i)
    if (!y_used.count(i)) out.registry.push_back({FaceType::FromY, i, {}, uz(m + i - 1)});
  for (const auto& e : t.classes) {
    if (!e.type_a || e.degenerate) continue;
    int face = t.pi_f.at(*e.members.begin());
    out.registry.push_back({FaceType::FromClass, face, e.members, uz(face - 1)});
  }
  const int d = static_cast<int>(out.registry.size());
  const int n = total - p;
  if (n < d) throw InternalInvariantViolation("fibre product has more faces than dimensions");
  out.w_model = ModelCorner(n, d);

  Matrix joint = Matrix::hstack(f.jacobian(), -g.jacobian());
  Matrix kernel = kernel_basis(joint);
  if (kernel.cols() != uz(n)) throw InternalInvariantViolation("kernel has the wrong dimension");

  Matrix functionals(0, uz(total));
  auto unit = [&](std::size_t k) {
    Matrix e(1, uz(total));
    e(0, k) = 1;
    return e;
  };
  for (const auto& r : out.registry) functionals = Matrix::vstack(functionals, unit(r.functional));
  if (rank(functionals * kernel) != uz(d))
    throw InternalInvariantViolation("face functionals are dependent on the fibre product");
  for (std::size_t k = 0; k < uz(total) && functionals.rows() < uz(n); ++k) {
    Matrix trial = Matrix::vstack(functionals, unit(k));
    if (rank(trial * kernel) == trial.rows()) functionals = std::move(trial);
  }
  auto inv = inverse(functionals * kernel);
  if (!inv) throw InternalInvariantViolation("coordinate completion failed");
  out.coordinates = functionals;
  out.kernel_map = kernel * *inv;

  std::map<int, int> x_face_of, y_face_of;  // X/Y face -> W face
  for (int k = 0; k < d; ++k) {
    const auto& r = out.registry[uz(k)];
    if (r.type == FaceType::FromX) x_face_of[r.face] = k + 1;
    if (r.type == FaceType::FromY) y_face_of[r.face] = k + 1;
    if (r.type == FaceType::FromClass)
      for (int j : r.members) {
        x_face_of[t.pi_f.at(j)] = k + 1;
        y_face_of[t.pi_g.at(j)] = k + 1;
      }
  }
  try {
    out.pi_x = CornerMapGerm(out.w_model, f.source(), x_face_of, out.kernel_map.select_rows(range(0, m)));
    out.pi_y = CornerMapGerm(out.w_model, g.source(), y_face_of,
                             out.kernel_map.select_rows(range(m, total)));
  } catch (const InvalidGerm& e) {
    throw InternalInvariantViolation(std::string("projection germ is invalid: ") + e.what());
  }
  if (compose(f, out.pi_x) != compose(g, out.pi_y))
    throw InternalInvariantViolation("fibre square does not commute");
  return out;
}

CornerMapGerm check_universal_property(const CornerMapGerm& f, const CornerMapGerm& g,
                                       const FibreLedger& ledger, const CornerMapGerm& h1,
                                       const CornerMapGerm& h2) {
  if (h1.source() != h2.source()) throw NoMediator("cone legs have different sources");
  if (h1.target() != f.source() || h2.target() != g.source())
    throw NoMediator("cone legs do not land in X and Y");
  if (compose(f, h1) != compose(g, h2)) throw NoMediator("cone does not commute");
  Matrix stacked = Matrix::vstack(h1.jacobian(), h2.jacobian());
  Matrix jh = ledger.coordinates * stacked;
  if (ledger.kernel_map * jh != stacked) throw NoMediator("cone does not factor through the kernel");
  std::map<int, int> transfer;
  for (std::size_t k = 0; k < ledger.registry.size(); ++k) {
    const auto& r = ledger.registry[k];
    const CornerMapGerm& leg = r.type == FaceType::FromY ? h2 : h1;
    if (leg.transfers(r.face)) transfer[static_cast<int>(k) + 1] = leg.transfer_of(r.face);
  }
  CornerMapGerm h;
  try {
    h = CornerMapGerm(h1.source(), ledger.w_model, transfer, jh);
  } catch (const InvalidGerm& e) {
    throw NoMediator(std::string("mediating data is not a germ: ") + e.what());
  }
  if (compose(ledger.pi_x, h) != h1 || compose(ledger.pi_y, h) != h2)
    throw NoMediator("mediator does not reproduce the cone");
  return h;
}

std::pair<CornerMapGerm, CornerMapGerm> restricted_pair(const CornerMapGerm& f,
                                                        const CornerMapGerm& g,
                                                        const MatchedTriple& t) {
  CornerPointMap cf = corner_map(f, t.a), cg = corner_map(g, t.b);
  if (cf.target_label != t.l || cg.target_label != t.l)
    throw BadLabel("labels " + to_string(t) + " are not matched");
  return {cf.restricted, cg.restricted};
}

CornerIdentityReport corner_identity_check(const CornerMapGerm& f, const CornerMapGerm& g) {
  if (!is_transverse(f, g)) throw NotTransverse("maps are not transverse");
  CornerIdentityReport rep;
  rep.strongly_transverse = is_strongly_transverse(f, g);
  FibreLedger ledger = fibre_product(f, g);
  rep.w_model = ledger.w_model;
  const int n = ledger.w_model.dim(), d = ledger.w_model.depth();
  auto fail = [&](const std::string& what) { rep.failures.push_back(what); };

  std::vector<MatchedTriple> triples = matched_triples(f, g);
  for (const auto& t : triples)
    if (t.level() < 0) {
      rep.lemma_inequality = false;
      fail("matched triple " + to_string(t) + " has |A|+|B| < |L|");
    }

  const int top = std::max(f.source().depth() + g.source().depth(), d);
  for (int i = 0; i <= top; ++i) {
    CornerLevel lvl;
    lvl.i = i;
    std::set<MatchedTriple> rhs;
    for (const auto& t : triples)
      if (t.level() == i) rhs.insert(t);
    lvl.rhs = rhs.size();
    std::set<MatchedTriple> hit;
    bool ok = true;
    for (auto& s : subsets_of_size(d, i)) {
      MatchedTriple t{image_label(ledger.pi_x, s), image_label(ledger.pi_y, s), {}};
      t.l = image_label(f, t.a);
      if (image_label(g, t.b) != t.l) {
        ok = false;
        fail("stratum " + to_string(s) + " of W maps to unmatched labels");
      }
      if (!rhs.count(t) || !hit.insert(t).second) ok = false;
      lvl.correspondence.emplace_back(s, t);
      ++lvl.lhs;
    }
    lvl.bijective = ok && hit.size() == rhs.size();
    if (!lvl.bijective)
      fail("level " + std::to_string(i) + ": LHS " + std::to_string(lvl.lhs) + ", RHS " +
           std::to_string(lvl.rhs));
    for (const auto& t : rhs) {
      auto [fa, gb] = restricted_pair(f, g, t);
      if (!is_transverse(fa, gb)) {
        rep.rhs_transverse = false;
        fail("restricted pair " + to_string(t) + " is not transverse");
        continue;
      }
      ModelCorner w = fibre_product(fa, gb).w_model;
      if (n - i < 0 || d - i < 0 || w != ModelCorner(n - i, d - i)) {
        rep.models_match = false;
        fail("restricted fibre product " + to_string(t) + " has model " + w.to_string());
      }
      if (i == 0 && !rep.witness && !hit.count(t)) rep.witness = t;
    }
    rep.levels.push_back(std::move(lvl));
  }
  rep.holds = rep.failures.empty();
  return rep;
}

std::string to_string(BoundaryFormula k) {
  switch (k) {
    case BoundaryFormula::MinusBoundary: return "minus-boundary";
    case BoundaryFormula::FlatTarget: return "flat-target";
    case BoundaryFormula::OneSubmersion: return "one-submersion";
    case BoundaryFormula::BothSubmersions: return "both-submersions";
  }
  return "?";
}

namespace {

FormulaReport minus_boundary_check(const CornerMapGerm& f) {
  if (!is_submersion(f)) throw HypothesisNotMet("minus-boundary formula needs a submersion");
  FormulaReport rep;
  rep.formula = BoundaryFormula::MinusBoundary;
  auto fail = [&](const std::string& what) { rep.failures.push_back(what); };
  for (auto [j, i] : f.transfer()) {
    CornerMapGerm inc = face_inclusion_germ(f.target(), j);
    rep.terms.push_back({TermKind::MinusFace, i, 0, j, "X x_Y dY at face " + std::to_string(j), f,
                         inc, std::nullopt});
    if (!is_transverse(f, inc)) {
      fail("f is not transverse to face " + std::to_string(j));
      continue;
    }
    FibreLedger l = fibre_product(f, inc);
    ModelCorner face_model = stratum_model(f.source(), {i});
    if (l.w_model != face_model) {
      fail("fibre over face " + std::to_string(j) + " has model " + l.w_model.to_string());
      continue;
    }
    if (!l.pi_x.jacobian().row_is_zero(uz(i - 1)) || l.pi_x.transfers(i)) {
      fail("fibre over face " + std::to_string(j) + " does not lie in face " + std::to_string(i));
      continue;
    }
    std::map<int, int> t;
    for (auto [x, w] : l.pi_x.transfer()) t[reindex_face({i}, x)] = w;
    CornerMapGerm phi(l.w_model, face_model, t, l.pi_x.jacobian().drop_row(uz(i - 1)));
    bool iso = rank(phi.jacobian()) == uz(face_model.dim()) &&
               static_cast<int>(t.size()) == face_model.depth() && is_b_submersive(phi);
    if (!iso) fail("fibre over face " + std::to_string(j) + " is not identified with the face");
    if (compose(face_inclusion_germ(f.source(), i), phi) != l.pi_x)
      fail("identification over face " + std::to_string(j) + " does not commute with the inclusion");
    if (compose(corner_map(f, {i}).restricted, phi) != l.pi_y)
      fail("f_- and the projection to dY differ over face " + std::to_string(j));
  }
  rep.holds = rep.failures.empty();
  return rep;
}

}  // namespace

FormulaReport boundary_formula_check(const CornerMapGerm& f, const CornerMapGerm& g,
                                     BoundaryFormula formula) {
  if (formula == BoundaryFormula::MinusBoundary) return minus_boundary_check(f);
  require_common_target(f, g);
  FormulaReport rep;
  rep.formula = formula;
  const bool transverse = is_transverse(f, g);
  using Pred = std::function<bool(const StratumLabel&, const StratumLabel&)>;
  std::vector<Pred> preds;
  auto plus_x = [&](int i) {
    rep.terms.push_back({TermKind::XFace, i, 0, 0, "dX term at face " + std::to_string(i),
                         compose(f, face_inclusion_germ(f.source(), i)), g, std::nullopt});
    preds.push_back([i](const StratumLabel& a, const StratumLabel& b) {
      return a == StratumLabel{i} && b.empty();
    });
  };
  auto plus_y = [&](int i, bool any_a) {
    rep.terms.push_back({TermKind::YFace, 0, i, 0, "dY term at face " + std::to_string(i), f,
                         compose(g, face_inclusion_germ(g.source(), i)), std::nullopt});
    preds.push_back([i, any_a](const StratumLabel& a, const StratumLabel& b) {
      return b == StratumLabel{i} && (any_a || a.empty());
    });
  };

  switch (formula) {
    case BoundaryFormula::FlatTarget:
      if (f.target().depth() != 0 || !transverse)
        throw HypothesisNotMet("flat-target formula needs transverse maps into a model without boundary");
      for (int i = 1; i <= f.source().depth(); ++i) plus_x(i);
      for (int i = 1; i <= g.source().depth(); ++i) plus_y(i, false);
      break;
    case BoundaryFormula::OneSubmersion:
      if (!is_submersion(f)) {
        if (!(is_b_submersive(f) && transverse))
          throw HypothesisNotMet("one-submersion formula needs f a submersion or f b-submersive");
        rep.extension = true;
      }
      for (int i : boundary_decomposition(f).plus_faces) plus_x(i);
      for (int i = 1; i <= g.source().depth(); ++i) plus_y(i, true);
      break;
    case BoundaryFormula::BothSubmersions:
      if (!(is_submersion(f) && is_submersion(g))) {
        if (!(is_b_submersive(f) && is_b_submersive(g) && transverse))
          throw HypothesisNotMet("both-submersions formula needs f, g submersions or both b-submersive");
        rep.extension = true;
      }
      for (int i : boundary_decomposition(f).plus_faces) plus_x(i);
      for (int i : boundary_decomposition(g).plus_faces) plus_y(i, false);
      for (int j = 1; j <= f.target().depth(); ++j) {
        int fi = f.transfer_of(j), gi = g.transfer_of(j);
        rep.terms.push_back({TermKind::Corner, fi, gi, j, "corner term at face " + std::to_string(j),
                             corner_map(f, {fi}).restricted, corner_map(g, {gi}).restricted,
                             std::nullopt});
        preds.push_back([fi, gi](const StratumLabel& a, const StratumLabel& b) {
          return a == StratumLabel{fi} && b == StratumLabel{gi};
        });
      }
      break;
    case BoundaryFormula::MinusBoundary:
      break;
  }

  auto fail = [&](const std::string& what) { rep.failures.push_back(what); };
  FibreLedger ledger = fibre_product(f, g);
  const int n = ledger.w_model.dim(), d = ledger.w_model.depth();
  std::vector<int> hits(rep.terms.size(), 0);
  for (int k = 1; k <= d; ++k) {
    StratumLabel a = image_label(ledger.pi_x, {k}), b = image_label(ledger.pi_y, {k});
    int found = -1;
    for (std::size_t t = 0; t < preds.size(); ++t)
      if (preds[t](a, b)) {
        if (found >= 0) fail("face " + std::to_string(k) + " of W matches two terms");
        found = static_cast<int>(t);
      }
    if (found < 0) {
      fail("face " + std::to_string(k) + " of W matches no term");
      continue;
    }
    ++hits[uz(found)];
    rep.terms[uz(found)].w_face = uz(k);
  }
  for (std::size_t t = 0; t < rep.terms.size(); ++t) {
    const auto& term = rep.terms[t];
    if (hits[t] != 1)
      fail(term.description + " is matched by " + std::to_string(hits[t]) + " faces of W");
    if (!is_transverse(term.left, term.right)) {
      fail(term.description + " is not a transverse fibre product");
      continue;
    }
    ModelCorner w = fibre_product(term.left, term.right).w_model;
    if (d < 1 || w != ModelCorner(n - 1, d - 1))
      fail(term.description + " has model " + w.to_string());
  }
  rep.holds = rep.failures.empty();
  return rep;
}

}  // namespace corners
