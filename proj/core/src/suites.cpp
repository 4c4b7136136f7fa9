#include "daha/suites.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "daha/basic_rep.hpp"
#include "daha/poly_rep.hpp"

namespace daha {

namespace {

CaseRecord record(std::string id, std::string relation, std::map<std::string, std::string> params) {
  CaseRecord c;
  c.id = std::move(id);
  c.relation = std::move(relation);
  c.params = std::move(params);
  return c;
}

VerificationReport new_report(const std::string& suite, const AffineWeylGroup& g,
                              const SuiteOptions& opts) {
  VerificationReport r;
  r.suite = suite;
  r.spec = g.root_system().spec();
  r.seed = opts.seed;
  return r;
}

Weight unit(int i, int sign) {
  Weight w{};
  w[i] = sign;
  return w;
}

Weight add(const Weight& a, const Weight& b) {
  Weight r{};
  for (int i = 0; i < kMaxRank; ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<Weight> signed_fundamentals(int n) {
  std::vector<Weight> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(unit(i, 1));
    out.push_back(unit(i, -1));
  }
  return out;
}

std::vector<Weight> cross_weights(int n, CrossSet set) {
  std::vector<Weight> out = signed_fundamentals(n);
  if (set == CrossSet::Extended) {
    for (int i = 0; i < n; ++i) {
      out.push_back(unit(i, 2));
      for (int k = i + 1; k < n; ++k) {
        out.push_back(add(unit(i, 1), unit(k, 1)));
        out.push_back(add(unit(i, 1), unit(k, -1)));
      }
    }
  }
  return out;
}

void check_words(VerificationReport& report, const BasicRepresentation& rep, int max_length) {
  const AffineWeylGroup& g = rep.group();
  const int letters = g.rank() + 1;
  std::map<ExtAffineWeylElt, std::vector<std::vector<int>>> words;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::size_t total = 1;
    for (int i = 0; i < len; ++i) total *= letters;
    if (total > 4096) break;
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int j = 0; j < letters; ++j) {
        auto v = w;
        v.push_back(j);
        const ExtAffineWeylElt e = g.compose_word(0, v);
        if (g.length(e) != len) continue;  // prefixes of reduced words are reduced
        words[e].push_back(v);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  for (const auto& [e, ws] : words) {
    if (ws.size() < 2) continue;
    const std::string name = g.render(e);
    CaseRecord c = record("word-independence/" + name, "word-independence",
                          {{"w", name}, {"words", std::to_string(ws.size())}});
    const SmashElt first = rep.rep_image(0, ws.front());
    for (std::size_t i = 1; i < ws.size(); ++i) {
      const SmashElt other = rep.rep_image(0, ws[i]);
      if (!(other == first)) {
        c.status = CaseStatus::Fail;
        std::string word;
        for (int j : ws[i]) word += std::to_string(j);
        c.witness = "word " + word + ": " + (other - first).render(g);
        break;
      }
    }
    report.add(std::move(c));
  }
}

// Expected-failure wrapper for negative controls.
CaseRecord expect_failure(CaseRecord inner, const std::string& mutation) {
  CaseRecord c = inner;
  c.id = "control/" + mutation + "/" + inner.id;
  c.params["mutation"] = mutation;
  const bool caught = inner.status == CaseStatus::Fail && inner.witness && !inner.witness->empty();
  c.status = caught ? CaseStatus::Pass : CaseStatus::Fail;
  if (!caught) c.witness = "mutated operator was not detected";
  return c;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "triangularity", "pbw",     "polynomial",
                                              "parabolic", "omega",         "controls"};
  return names;
}

VerificationReport run_relations(std::shared_ptr<const AffineWeylGroup> group,
                                 const HeckeParams& params, const SuiteOptions& opts) {
  const BasicRepresentation rep(group, params);
  const AffineWeylGroup& g = *group;
  const RootSystemData& rs = g.root_system();
  const int n = rs.rank();
  VerificationReport report = new_report("relations", g, opts);

  for (int j = 0; j <= n; ++j) report.add(verify_quadratic(rep, j));
  for (int j = 0; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) report.add(verify_braid(rep, j, k));
  for (int u = 0; u < static_cast<int>(g.omega().size()); ++u) report.add(verify_omega(rep, u));
  report.add(verify_omega_descent(rep));
  for (int j = 0; j <= n; ++j)
    for (const Weight& lambda : cross_weights(n, opts.cross)) report.add(verify_cross(rep, j, lambda));
  const auto fundamentals = signed_fundamentals(n);
  for (int j = 0; j <= n; ++j)
    for (const Weight& lambda : fundamentals)
      for (const Weight& mu : fundamentals) report.add(verify_cross_additivity(rep, j, lambda, mu));
  for (const Weight& lambda : fundamentals)
    for (const Weight& mu : fundamentals) report.add(verify_x_relation(rep, lambda, mu));
  for (const BallEntry& e : g.enumerate_ball(std::min(2, opts.max_length)))
    for (int j = 0; j <= n; ++j) report.add(verify_conjugation(rep, e.element, rs.affine_simple(j)));
  check_words(report, rep, opts.max_length);
  return report;
}

VerificationReport run_triangularity(std::shared_ptr<const AffineWeylGroup> group,
                                     const HeckeParams& params, const SuiteOptions& opts) {
  const BasicRepresentation rep(group, params);
  TriangularSolver solver(rep);
  VerificationReport report = new_report("triangularity", *group, opts);
  const auto ball = group->enumerate_ball(opts.max_length);
  for (const BallEntry& e : ball) report.add(verify_triangular(solver, e));
  for (const BallEntry& e : ball) report.add(verify_inversion(solver, e));
  return report;
}

VerificationReport run_pbw(std::shared_ptr<const AffineWeylGroup> group, const HeckeParams& params,
                           const SuiteOptions& opts) {
  const BasicRepresentation rep(group, params);
  TriangularSolver solver(rep);
  VerificationReport report = new_report("pbw", *group, opts);
  const auto ball = group->enumerate_ball(opts.max_length);
  std::vector<PbwPair> pairs;
  for (const Weight& mu : monomial_box(group->rank(), opts.box))
    for (const BallEntry& e : ball) pairs.push_back({mu, e.element});
  const std::map<std::string, std::string> p{{"box", std::to_string(opts.box)},
                                             {"max_length", std::to_string(opts.max_length)},
                                             {"pairs", std::to_string(pairs.size())}};

  CaseRecord c = record("pbw/independence", "pbw", p);
  const PbwResult r = pbw_independence(solver, ball, pairs);
  if (!r.independent) {
    c.status = CaseStatus::Fail;
    c.witness = r.detail;
  }
  report.add(std::move(c));

  CaseRecord d = record("pbw/duplicate-control", "pbw-control", p);
  auto with_duplicate = pairs;
  with_duplicate.push_back(pairs.front());
  const PbwResult dup = pbw_independence(solver, ball, with_duplicate);
  if (dup.independent || !dup.dependency) {
    d.status = CaseStatus::Fail;
    d.witness = "duplicated pair was not detected";
  } else {
    d.witness = dup.detail;
  }
  report.add(std::move(d));
  return report;
}

VerificationReport run_polynomial(std::shared_ptr<const AffineWeylGroup> group,
                                  const HeckeParams& params, const SuiteOptions& opts) {
  const PolynomialRepresentation rep(LevelledAction(group, opts.level), params);
  VerificationReport report = verify_poly_presentation(rep, opts.box, opts.max_length);
  report.seed = opts.seed;
  return report;
}

VerificationReport run_parabolic(std::shared_ptr<const AffineWeylGroup> group,
                                 const HeckeParams& params, const SuiteOptions& opts) {
  const BasicRepresentation rep(group, params);
  const AffineWeylGroup& g = *group;
  const RootSystemData& rs = g.root_system();
  const int n = rs.rank();
  VerificationReport report = new_report("parabolic", g, opts);

  for (int k = 0; k <= n; ++k) {
    const FiniteRootSubsystem sub = parabolic_subsystem(rs, k);
    const std::string ks = std::to_string(k);
    CaseRecord c = record("parabolic/k=" + ks + "/structure", "parabolic-structure",
                          {{"k", ks}, {"roots", std::to_string(sub.roots.size())},
                           {"components", std::to_string(sub.components.size())}});
    auto fail = [&](std::string why) {
      if (c.status != CaseStatus::Fail) {
        c.status = CaseStatus::Fail;
        c.witness = std::move(why);
      }
    };
    // Closure under its own reflections.
    for (int a : sub.roots)
      for (int b : sub.roots)
        if (!sub.contains(rs.reflection_permutation(a)[b])) fail("not closed under reflections");
    // Rank n: the basis is linearly independent.
    std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(sub.rank()));
    for (int col = 0; col < sub.rank(); ++col)
      for (int i = 0; i < n; ++i) basis[i][col] = rs.root(sub.simple[col]).simple[i];
    if (sub.rank() != n || determinant(basis) == 0) fail("basis does not have full rank");
    // Orthogonal components.
    for (std::size_t x = 0; x < sub.components.size(); ++x)
      for (std::size_t y = x + 1; y < sub.components.size(); ++y)
        for (int a : sub.components[x])
          for (int b : sub.components[y])
            if (rs.inner(rs.root(a).simple, rs.root(b).simple) != 0) fail("components not orthogonal");
    // Every root is a sign-coherent integer combination of the basis.
    if (c.status != CaseStatus::Fail) {
      for (int a : sub.roots) {
        std::vector<Rational> rhs(n);
        for (int i = 0; i < n; ++i) rhs[i] = rs.root(a).simple[i];
        const auto coeffs = solve(basis, rhs);
        bool pos = true, neg = true;
        for (const auto& q : coeffs) {
          if (q.get_den() != 1) fail("root outside the lattice of the basis");
          pos = pos && q >= 0;
          neg = neg && q <= 0;
        }
        if (!pos && !neg) fail("basis is not a basis of simple roots");
      }
    }
    report.add(std::move(c));

    // Relations among T_j, j != k, have coefficients in A_{Q_k} over L_k.
    std::set<int> slots;
    for (int j = 0; j <= n; ++j)
      if (j != k) slots.insert(rs.root(rs.simple_root(j)).tau_slot);
    auto in_lattice = [&](const Weight& w) {
      std::vector<Rational> rhs(n);
      // Weight coordinates -> simple-root coordinates through the Cartan matrix.
      std::vector<std::vector<Rational>> cartan_t(n, std::vector<Rational>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cartan_t[i][j] = rs.cartan(j, i);
      for (int i = 0; i < n; ++i) rhs[i] = w[i];
      const auto simple = solve(cartan_t, rhs);
      const auto coeffs = solve(basis, simple);
      for (const auto& q : coeffs)
        if (q.get_den() != 1) return false;
      return true;
    };
    auto coefficient_ok = [&](const RationalFn& f, std::string& why) {
      for (const auto& [m, q] : f.numerator().terms()) {
        for (int s = 0; s < kTauSlots; ++s)
          if (m.tau[s] != 0 && !slots.count(s)) {
            why = "parameter outside L_k";
            return false;
          }
        if (!in_lattice(m.x)) {
          why = "exponent " + render_weight(m.x, n) + " outside Q_k";
          return false;
        }
      }
      for (const auto& [factor, mult] : f.denominator())
        if (!sub.contains(factor.root)) {
          why = "denominator outside delta(R_k)";
          return false;
        }
      return true;
    };
    CaseRecord r = record("parabolic/k=" + ks + "/coefficients", "parabolic-coefficients", {{"k", ks}});
    std::vector<std::vector<int>> words;
    for (int j = 0; j <= n; ++j) {
      if (j == k) continue;
      words.push_back({j, j});
      for (int l = j + 1; l <= n; ++l) {
        const int m = rs.coxeter_order(j, l);
        if (l == k || m == kInfiniteOrder) continue;
        std::vector<int> w;
        for (int i = 0; i < m; ++i) w.push_back(i % 2 ? l : j);
        words.push_back(w);
      }
    }
    for (const auto& w : words) {
      std::string why;
      for (const auto& [e, f] : rep.rep_image(0, w).terms()) {
        if (!coefficient_ok(f, why)) {
          r.status = CaseStatus::Fail;
          r.witness = why;
          break;
        }
      }
      if (r.failed()) break;
    }
    r.params["products"] = std::to_string(words.size());
    report.add(std::move(r));
  }
  return report;
}

VerificationReport run_omega(std::shared_ptr<const AffineWeylGroup> group,
                             const HeckeParams& params, const SuiteOptions& opts) {
  const BasicRepresentation rep(group, params);
  const AffineWeylGroup& g = *group;
  const RootSystemData& rs = g.root_system();
  const int n = rs.rank();
  const auto& omega = g.omega();
  VerificationReport report = new_report("omega", g, opts);

  const int64_t det = cartan_determinant(rs);
  CaseRecord order = record("omega/order", "omega-order",
                            {{"order", std::to_string(omega.size())}, {"det", std::to_string(det)}});
  if (static_cast<int64_t>(omega.size()) != det) {
    order.status = CaseStatus::Fail;
    order.witness = "|Omega| differs from the Cartan determinant";
  }
  report.add(std::move(order));

  for (int u = 0; u < static_cast<int>(omega.size()); ++u) {
    const OmegaElt& o = omega[u];
    std::string perm;
    for (int j = 0; j <= n; ++j) perm += (j ? "," : "") + std::to_string(o.index_perm[j]);
    CaseRecord c = record("omega/table/u=" + std::to_string(u), "omega-table",
                          {{"u", std::to_string(u)}, {"perm", "[" + perm + "]"}});
    if (g.length(o.element) != 0) {
      c.status = CaseStatus::Fail;
      c.witness = "positive length";
    }
    for (int j = 0; j <= n && !c.failed(); ++j) {
      if (!(o.element.act(rs.affine_simple(j)) == rs.affine_simple(o.index_perm[j]))) {
        c.status = CaseStatus::Fail;
        c.witness = "u a_" + std::to_string(j) + " is not a simple affine root";
      } else if (!(o.element * g.simple_reflection(j) * o.element.inverse() ==
                   g.simple_reflection(o.index_perm[j]))) {
        c.status = CaseStatus::Fail;
        c.witness = "u s_" + std::to_string(j) + " u^-1 differs from s_{u_j}";
      }
    }
    report.add(std::move(c));
  }

  CaseRecord ab = record("omega/abelian", "omega-abelian", {});
  std::set<std::vector<int>> tables;
  for (const auto& a : omega) {
    tables.insert(a.index_perm);
    for (const auto& b : omega)
      if (!(a.element * b.element == b.element * a.element)) {
        ab.status = CaseStatus::Fail;
        ab.witness = "non-commuting pair";
      }
  }
  if (omega.size() == 1) ab.status = CaseStatus::Vacuous;
  report.add(std::move(ab));

  CaseRecord inj = record("omega/faithful", "omega-faithful", {});
  if (tables.size() != omega.size()) {
    inj.status = CaseStatus::Fail;
    inj.witness = "two elements induce the same permutation";
  }
  if (omega.size() == 1) inj.status = CaseStatus::Vacuous;
  report.add(std::move(inj));

  for (int u = 0; u < static_cast<int>(omega.size()); ++u) report.add(verify_omega(rep, u));
  report.add(verify_omega_descent(rep));
  return report;
}

VerificationReport run_controls(std::shared_ptr<const AffineWeylGroup> group,
                                const HeckeParams& params, const SuiteOptions& opts) {
  const BasicRepresentation rep(group, params);
  const int n = group->rank();
  VerificationReport report = new_report("controls", *group, opts);
  for (Mutation m : {Mutation::TauSquared, Mutation::DropCorrection}) {
    const BasicRepresentation bad = rep.mutate(m);
    const std::string name = to_string(m);
    for (int j = 0; j <= n; ++j) report.add(expect_failure(verify_quadratic(bad, j), name));
    // A weight fixed by s_j commutes with any mutation of T_j, so pair each j with
    // a fundamental weight moved by s_j.
    for (int j = 0; j <= n; ++j) {
      const int root = group->root_system().simple_root(j);
      int i = 0;
      while (group->root_system().coroot_pair(unit(i, 1), root) == 0) ++i;
      report.add(expect_failure(verify_cross(bad, j, unit(i, 1)), name));
    }

    const PolynomialRepresentation poly =
        PolynomialRepresentation(LevelledAction(group, opts.level), params).mutate(m);
    const VerificationReport pr = verify_poly_presentation(poly, std::min(opts.box, 1), 0);
    for (const auto& c : pr.cases)
      if (c.relation == "quadratic") report.add(expect_failure(c, name));
  }
  return report;
}

VerificationReport run_suite(const std::string& name, std::shared_ptr<const AffineWeylGroup> group,
                             const HeckeParams& params, const SuiteOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  if (name == "relations") r = run_relations(group, params, opts);
  else if (name == "triangularity") r = run_triangularity(group, params, opts);
  else if (name == "pbw") r = run_pbw(group, params, opts);
  else if (name == "polynomial") r = run_polynomial(group, params, opts);
  else if (name == "parabolic") r = run_parabolic(group, params, opts);
  else if (name == "omega") r = run_omega(group, params, opts);
  else if (name == "controls") r = run_controls(group, params, opts);
  else throw std::invalid_argument("unknown suite: " + name);
  r.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

TauAssignment random_assignment(uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  auto draw = [&] {
    for (;;) {
      Rational q(num(gen), den(gen));
      q.canonicalize();
      if (q != 0 && q != 1 && q != -1) return q;
    }
  };
  TauAssignment a;
  a.short_value = draw();
  a.long_value = draw();
  return a;
}

CaseRecord compare_outcomes(const VerificationReport& symbolic,
                            const VerificationReport& specialized) {
  CaseRecord c = record("specialization/" + symbolic.suite, "specialization",
                        {{"cases", std::to_string(symbolic.cases.size())}});
  if (symbolic.cases.size() != specialized.cases.size()) {
    c.status = CaseStatus::Fail;
    c.witness = "different case sets";
    return c;
  }
  for (std::size_t i = 0; i < symbolic.cases.size(); ++i) {
    const auto& a = symbolic.cases[i];
    const auto& b = specialized.cases[i];
    if (a.id != b.id || (a.failed() != b.failed())) {
      c.status = CaseStatus::Fail;
      c.witness = "outcome differs at " + a.id;
      return c;
    }
  }
  return c;
}

}  // namespace daha
