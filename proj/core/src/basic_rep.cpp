#include "daha/basic_rep.hpp"

#include <set>
#include <stdexcept>

namespace daha {

namespace {

constexpr std::size_t kWitnessLimit = 2000;

std::string clip(std::string s) {
  if (s.size() > kWitnessLimit) s = s.substr(0, kWitnessLimit) + " ...";
  return s;
}

CaseRecord record(std::string id, std::string relation, std::map<std::string, std::string> params) {
  CaseRecord c;
  c.id = std::move(id);
  c.relation = std::move(relation);
  c.params = std::move(params);
  return c;
}

// Marks c as failed unless lhs == rhs.
bool expect_equal(CaseRecord& c, const BasicRepresentation& rep, const SmashElt& lhs,
                  const SmashElt& rhs, const std::string& what) {
  if (lhs == rhs) return true;
  c.status = CaseStatus::Fail;
  c.witness = clip(what + ": " + (lhs - rhs).render(rep.group()));
  return false;
}

std::string weight_param(const RootSystemData& rs, const Weight& w) {
  return render_weight(w, rs.rank());
}

std::vector<int> alternating(int j, int k, int m) {
  std::vector<int> w;
  for (int i = 0; i < m; ++i) w.push_back(i % 2 == 0 ? j : k);
  return w;
}

}  // namespace

std::string to_string(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::TauSquared: return "tau-squared";
    case Mutation::DropCorrection: return "drop-correction";
  }
  return "?";
}

BasicRepresentation::BasicRepresentation(std::shared_ptr<const AffineWeylGroup> group,
                                         HeckeParams params, Mutation mutation)
    : group_(std::move(group)), params_(std::move(params)), mutation_(mutation) {
  for (int j = 0; j <= group_->rank(); ++j)
    generators_.push_back(demazure_lusztig(root_system().affine_simple(j)));
}

RationalFn BasicRepresentation::tau_of_root(int root, int power) const {
  return RationalFn(root_system(), params_.tau(root_system().root(root).tau_slot, power));
}

RationalFn BasicRepresentation::tau_j(int j, int power) const {
  return tau_of_root(root_system().simple_root(j), power);
}

RationalFn BasicRepresentation::operator_tau(int root, int power) const {
  return tau_of_root(root, mutation_ == Mutation::TauSquared ? 2 * power : power);
}

RationalFn BasicRepresentation::correction(int root) const {
  return (tau_of_root(root) - tau_of_root(root, -1)) *
         RationalFn::inverse_root_binomial(root_system(), root);
}

SmashElt BasicRepresentation::demazure_lusztig(const AffineRoot& a) const {
  const RootSystemData& rs = root_system();
  if (a.root < 0 || a.root >= rs.num_roots() || !rs.is_valid_affine(a))
    throw InvalidRootError("Demazure-Lusztig element of a non-root");
  const ExtAffineWeylElt s = ExtAffineWeylElt::reflection(rs, a);
  const RationalFn tau = operator_tau(a.root, 1);
  RationalFn kappa(rs);
  if (mutation_ != Mutation::DropCorrection)
    kappa = (tau - operator_tau(a.root, -1)) * RationalFn::inverse_root_binomial(rs, a.root);
  return SmashElt::term(kappa, ExtAffineWeylElt::identity(rs)) + SmashElt::term(tau - kappa, s);
}

SmashElt BasicRepresentation::generator_inverse(int j) const {
  const int root = root_system().simple_root(j);
  return generator(j) - fn(operator_tau(root, 1) - operator_tau(root, -1));
}

SmashElt BasicRepresentation::omega_element(int u) const {
  return SmashElt::embed_group(group_->omega().at(u).element);
}

SmashElt BasicRepresentation::x(const Weight& lambda) const {
  return fn(RationalFn(root_system(), GroupAlgElt::monomial(lambda)));
}

SmashElt BasicRepresentation::rep_image(int omega, std::span<const int> word) const {
  SmashElt s = omega_element(omega);
  for (int j : word) s = s * generator(j);
  return s;
}

std::optional<RationalFn> cross_correction(const BasicRepresentation& rep, int j,
                                           const Weight& lambda) {
  const RootSystemData& rs = rep.root_system();
  const int alpha = rs.simple_root(j);
  const Weight image = rs.reflection_on_weights(alpha).apply(lambda);
  auto q = exact_divide(GroupAlgElt::monomial(lambda) - GroupAlgElt::monomial(image),
                        rs.root(alpha).weight);
  if (!q) return std::nullopt;
  return RationalFn(rs, *q) * (rep.tau_j(j) - rep.tau_j(j, -1));
}

CaseRecord verify_quadratic(const BasicRepresentation& rep, int j) {
  CaseRecord c = record("quadratic/j=" + std::to_string(j), "quadratic", {{"j", std::to_string(j)}});
  const SmashElt& t = rep.generator(j);
  const SmashElt lhs = (t - rep.fn(rep.tau_j(j))) * (t + rep.fn(rep.tau_j(j, -1)));
  expect_equal(c, rep, lhs, SmashElt(rep.root_system()), "(T - tau)(T + tau^-1)");
  return c;
}

CaseRecord verify_braid(const BasicRepresentation& rep, int j, int k) {
  const int m = rep.root_system().coxeter_order(j, k);
  CaseRecord c = record("braid/" + std::to_string(j) + "-" + std::to_string(k), "braid",
                        {{"j", std::to_string(j)},
                         {"k", std::to_string(k)},
                         {"m", m == kInfiniteOrder ? "inf" : std::to_string(m)}});
  if (m == kInfiniteOrder) {
    c.status = CaseStatus::Vacuous;
    return c;
  }
  const auto a = alternating(j, k, m), b = alternating(k, j, m);
  expect_equal(c, rep, rep.rep_image(0, a), rep.rep_image(0, b), "braid difference");
  return c;
}

CaseRecord verify_cross(const BasicRepresentation& rep, int j, const Weight& lambda) {
  const RootSystemData& rs = rep.root_system();
  const std::string lam = weight_param(rs, lambda);
  CaseRecord c = record("cross/j=" + std::to_string(j) + "/lambda=" + lam, "cross",
                        {{"j", std::to_string(j)}, {"lambda", lam}});
  const auto corr = cross_correction(rep, j, lambda);
  if (!corr) {
    c.status = CaseStatus::Fail;
    c.witness = "correction term is not a Laurent polynomial";
    return c;
  }
  const Weight image = rs.reflection_on_weights(rs.simple_root(j)).apply(lambda);
  const SmashElt& t = rep.generator(j);
  expect_equal(c, rep, t * rep.x(lambda), rep.x(image) * t + rep.fn(*corr), "cross residue");
  return c;
}

CaseRecord verify_cross_additivity(const BasicRepresentation& rep, int j, const Weight& lambda,
                                   const Weight& mu) {
  const RootSystemData& rs = rep.root_system();
  const std::string l = weight_param(rs, lambda), m = weight_param(rs, mu);
  CaseRecord c = record("additivity/j=" + std::to_string(j) + "/" + l + "+" + m, "cross-additivity",
                        {{"j", std::to_string(j)}, {"lambda", l}, {"mu", m}});
  Weight sum{};
  for (int i = 0; i < kMaxRank; ++i) sum[i] = lambda[i] + mu[i];
  const auto rl = cross_correction(rep, j, lambda), rm = cross_correction(rep, j, mu),
             rs_sum = cross_correction(rep, j, sum);
  if (!rl || !rm || !rs_sum) {
    c.status = CaseStatus::Fail;
    c.witness = "correction term is not a Laurent polynomial";
    return c;
  }
  const Weight image = rs.reflection_on_weights(rs.simple_root(j)).apply(lambda);
  const RationalFn xs(rs, GroupAlgElt::monomial(image)), xm(rs, GroupAlgElt::monomial(mu));
  const RationalFn diff = xs * *rm + *rl * xm - *rs_sum;
  if (!diff.is_zero()) {
    c.status = CaseStatus::Fail;
    c.witness = clip(diff.render());
  }
  return c;
}

CaseRecord verify_x_relation(const BasicRepresentation& rep, const Weight& lambda,
                             const Weight& mu) {
  const RootSystemData& rs = rep.root_system();
  const std::string l = weight_param(rs, lambda), m = weight_param(rs, mu);
  CaseRecord c = record("x/" + l + "+" + m, "x-product", {{"lambda", l}, {"mu", m}});
  Weight sum{};
  for (int i = 0; i < kMaxRank; ++i) sum[i] = lambda[i] + mu[i];
  expect_equal(c, rep, rep.x(lambda) * rep.x(mu), rep.x(sum), "X product");
  return c;
}

CaseRecord verify_omega(const BasicRepresentation& rep, int u) {
  const AffineWeylGroup& g = rep.group();
  const RootSystemData& rs = rep.root_system();
  const OmegaElt& ou = g.omega().at(u);
  CaseRecord c = record("omega/u=" + std::to_string(u), "omega",
                        {{"u", std::to_string(u)}, {"w", g.render(ou.element)}});
  const SmashElt eu = rep.omega_element(u);
  for (int j = 0; j <= rs.rank(); ++j) {
    if (!expect_equal(c, rep, eu * rep.generator(j), rep.generator(ou.index_perm[j]) * eu,
                      "T_u T_" + std::to_string(j) + " - T_{u_j} T_u"))
      return c;
  }
  for (int i = 0; i < rs.rank(); ++i) {
    for (int sign : {1, -1}) {
      Weight lambda{};
      lambda[i] = sign;
      const Weight image = ou.element.gradient().act_weight(lambda);
      if (!expect_equal(c, rep, eu * rep.x(lambda), rep.x(image) * eu, "T_u X - X T_u"))
        return c;
    }
  }
  for (int v = 0; v < static_cast<int>(g.omega().size()); ++v) {
    const ExtAffineWeylElt prod = ou.element * g.omega()[v].element;
    if (!g.omega_index(prod)) {
      c.status = CaseStatus::Fail;
      c.witness = "product with u" + std::to_string(v) + " leaves Omega";
      return c;
    }
    if (!expect_equal(c, rep, eu * rep.omega_element(v), SmashElt::embed_group(prod),
                      "T_u T_v - T_uv"))
      return c;
  }
  if (g.omega().size() == 1) c.status = CaseStatus::Vacuous;
  return c;
}

CaseRecord verify_omega_descent(const BasicRepresentation& rep) {
  const AffineWeylGroup& g = rep.group();
  CaseRecord c = record("omega-descent", "omega-descent", {});
  if (g.omega().size() == 1) {
    c.status = CaseStatus::Vacuous;
    c.witness = "Omega is trivial";
    return c;
  }
  int found = 0;
  for (int u = 1; u < static_cast<int>(g.omega().size()); ++u) {
    for (int j = 1; j <= g.rank(); ++j) {
      if (g.omega()[u].index_perm[j] != 0) continue;
      ++found;
      const SmashElt eu = rep.omega_element(u);
      const SmashElt inv = SmashElt::embed_group(g.omega()[u].element.inverse());
      if (!expect_equal(c, rep, rep.generator(0), eu * rep.generator(j) * inv,
                        "T_0 - u T_" + std::to_string(j) + " u^-1"))
        return c;
      c.params["u" + std::to_string(u)] = "j=" + std::to_string(j);
    }
  }
  if (found == 0) {
    c.status = CaseStatus::Fail;
    c.witness = "no u in Omega maps some a_j, j >= 1, to a_0";
  }
  return c;
}

CaseRecord verify_conjugation(const BasicRepresentation& rep, const ExtAffineWeylElt& w,
                              const AffineRoot& a) {
  const RootSystemData& rs = rep.root_system();
  CaseRecord c = record("conjugation/" + rep.group().render(w) + "/a=" +
                            weight_param(rs, rs.root(a.root).weight) + "+" +
                            std::to_string(a.level) + "c",
                        "conjugation",
                        {{"w", rep.group().render(w)},
                         {"a", weight_param(rs, rs.root(a.root).weight) + "+" +
                                   std::to_string(a.level) + "c"}});
  const SmashElt lhs =
      SmashElt::embed_group(w) * rep.demazure_lusztig(a) * SmashElt::embed_group(w.inverse());
  expect_equal(c, rep, lhs, rep.demazure_lusztig(w.act(a)), "w T(a) w^-1 - T(wa)");
  return c;
}

// ---------------------------------------------------------------------------
// Triangularity

const SmashElt& TriangularSolver::image(const ReducedWord& word) {
  const ExtAffineWeylElt w = rep_.group().compose_word(word.omega, word.word);
  if (auto it = images_.find(w); it != images_.end()) return it->second;
  SmashElt s;
  if (word.word.empty()) {
    s = rep_.omega_element(word.omega);
  } else {
    ReducedWord prefix{word.omega, {word.word.begin(), word.word.end() - 1}};
    s = image(prefix) * rep_.generator(word.word.back());
  }
  return images_.emplace(w, std::move(s)).first->second;
}

const TriangularExpansion& TriangularSolver::expand(const BallEntry& entry) {
  if (auto it = expansions_.find(entry.element); it != expansions_.end()) return it->second;
  TriangularExpansion e;
  e.w = entry.element;
  e.word = entry.word;
  e.image = image(entry.word);
  e.support_in_ideal = true;
  for (const auto& [v, f] : e.image.terms()) {
    e.coefficients.emplace(v, f);
    if (e.support_in_ideal && !rep_.group().bruhat_leq(v, entry.word)) {
      e.support_in_ideal = false;
      e.escaped = v;
    }
  }
  auto lead = e.coefficients.find(e.w);
  e.leading_nonzero = lead != e.coefficients.end();
  e.leading_unit = e.leading_nonzero && is_localized_unit(lead->second, rep_.params());
  return expansions_.emplace(entry.element, std::move(e)).first->second;
}

const std::map<ExtAffineWeylElt, RationalFn>& TriangularSolver::invert(const ExtAffineWeylElt& w) {
  if (auto it = inverses_.find(w); it != inverses_.end()) return it->second;
  auto ex = expansions_.find(w);
  if (ex == expansions_.end() || !ex->second.ok())
    throw std::logic_error("inversion requires a passing triangular expansion of " +
                           rep_.group().render(w));
  const TriangularExpansion& e = ex->second;
  const auto lead_inv = unit_inverse(e.leading(), rep_.params());
  if (!lead_inv) throw std::logic_error("leading coefficient is not invertible");

  std::map<ExtAffineWeylElt, RationalFn> out;
  out.emplace(w, *lead_inv);
  for (const auto& [v, f] : e.coefficients) {
    if (v == w) continue;
    const RationalFn scale = -(*lead_inv * f);
    for (const auto& [x, g] : invert(v)) {
      auto [it, inserted] = out.emplace(x, scale * g);
      if (!inserted) it->second += scale * g;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return inverses_.emplace(w, std::move(out)).first->second;
}

SmashElt TriangularSolver::recompose(const ExtAffineWeylElt& w) {
  SmashElt s(rep_.root_system());
  for (const auto& [x, g] : invert(w)) s += g * expansions_.at(x).image;
  return s;
}

CaseRecord verify_triangular(TriangularSolver& solver, const BallEntry& entry) {
  const AffineWeylGroup& g = solver.rep().group();
  const std::string name = g.render(entry.word);
  CaseRecord c = record("triangular/" + name, "triangularity", {{"w", name}});
  const TriangularExpansion& e = solver.expand(entry);
  c.params["support"] = std::to_string(e.coefficients.size());
  c.params["support_in_ideal"] = e.support_in_ideal ? "true" : "false";
  c.params["leading_nonzero"] = e.leading_nonzero ? "true" : "false";
  c.params["leading_unit"] = e.leading_unit ? "true" : "false";
  if (!e.support_in_ideal) {
    c.status = CaseStatus::Fail;
    c.witness = "support element " + g.render(*e.escaped) + " is not below w";
  } else if (!e.leading_nonzero) {
    c.status = CaseStatus::Fail;
    c.witness = "leading coefficient vanishes";
  } else if (!e.leading_unit) {
    c.status = CaseStatus::Fail;
    c.witness = clip("leading coefficient is not a unit: " + e.leading().render());
  }
  return c;
}

CaseRecord verify_inversion(TriangularSolver& solver, const BallEntry& entry) {
  const BasicRepresentation& rep = solver.rep();
  const std::string name = rep.group().render(entry.word);
  CaseRecord c = record("inversion/" + name, "inversion", {{"w", name}});
  const TriangularExpansion& e = solver.expand(entry);
  if (!e.ok()) {
    c.status = CaseStatus::Fail;
    c.witness = "triangular expansion failed";
    return c;
  }
  const auto& inv = solver.invert(entry.element);
  const RationalFn one(rep.root_system(), GroupAlgElt::constant(1));
  if (!(inv.at(entry.element) * e.leading() == one)) {
    c.status = CaseStatus::Fail;
    c.witness = "tilde f_ww f_ww != 1";
    return c;
  }
  expect_equal(c, rep, solver.recompose(entry.element), SmashElt::embed_group(entry.element),
               "recomposition - w");
  return c;
}

PbwResult pbw_independence(TriangularSolver& solver, const std::vector<BallEntry>& ball,
                           const std::vector<PbwPair>& pairs) {
  const BasicRepresentation& rep = solver.rep();
  const AffineWeylGroup& g = rep.group();
  std::map<ExtAffineWeylElt, const BallEntry*> index;
  for (const auto& b : ball) index.emplace(b.element, &b);

  PbwResult r;
  // (w, mu + leading weight of f_ww) -> first pair index.  For a fixed w the
  // leading coefficients X^mu f_ww are independent over L iff these are distinct.
  std::map<std::pair<ExtAffineWeylElt, Weight>, std::size_t> leading;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto it = index.find(pairs[i].w);
    if (it == index.end()) throw std::invalid_argument("PBW element outside the enumerated ball");
    const TriangularExpansion& e = solver.expand(*it->second);
    if (!e.support_in_ideal || !e.leading_nonzero) {
      r.detail = "triangularity fails for " + g.render(e.word);
      return r;
    }
    Weight key = *e.leading().numerator().leading_weight();
    for (int k = 0; k < kMaxRank; ++k) key[k] += pairs[i].mu[k];
    auto [pos, inserted] = leading.emplace(std::make_pair(pairs[i].w, key), i);
    if (!inserted) {
      const std::size_t j = pos->second;
      const SmashElt combo = rep.x(pairs[j].mu) * e.image - rep.x(pairs[i].mu) * e.image;
      if (!combo.is_zero())
        throw std::logic_error("equal leading terms without a dependency");
      r.dependency = std::make_tuple(j, i, Rational(1), Rational(-1));
      r.detail = "pairs " + std::to_string(j) + " and " + std::to_string(i) + " coincide: X^" +
                 render_weight(pairs[i].mu, g.rank()) + " T_" + g.render(e.word);
      return r;
    }
  }
  r.independent = true;
  r.detail = std::to_string(pairs.size()) + " elements, " + std::to_string(leading.size()) +
             " distinct leading terms";
  return r;
}

}  // namespace daha
