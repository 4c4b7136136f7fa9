#include "daha/poly_rep.hpp"

#include <map>

namespace daha {

namespace {

std::string weight_param(const AffineWeylGroup& g, const Weight& w) {
  return render_weight(w, g.rank());
}

CaseRecord record(std::string id, std::string relation, std::map<std::string, std::string> params) {
  CaseRecord c;
  c.id = std::move(id);
  c.relation = std::move(relation);
  c.params = std::move(params);
  return c;
}

}  // namespace

LevelledAction::LevelledAction(std::shared_ptr<const AffineWeylGroup> group, int t)
    : group_(std::move(group)), t_(t) {
  if (t < 1) throw std::invalid_argument("level parameter must be a positive integer");
  const RootSystemData& rs = group_->root_system();
  Rational half_norm(rs.root(rs.simple_root(0)).norm, 2);
  half_norm.canonicalize();
  c_ = t * half_norm;
}

Weight LevelledAction::act(const ExtAffineWeylElt& w, const Weight& mu) const {
  const RootSystemData& rs = group_->root_system();
  Weight shifted = mu;
  for (int i = 0; i < rs.rank(); ++i) {
    const Rational d = c_ * rs.coweight_scale(i) * w.translation_part()[i];
    if (d.get_den() != 1)
      throw LevelConstraintError("affine action at level c = " + c_.get_str() +
                                 " does not preserve the weight lattice");
    shifted[i] += static_cast<int32_t>(d.get_num().get_si());
  }
  return w.gradient().act_weight(shifted);
}

GroupAlgElt LevelledAction::act(const ExtAffineWeylElt& w, const GroupAlgElt& f) const {
  std::vector<GroupAlgElt::Term> out;
  out.reserve(f.size());
  for (const auto& [m, coef] : f.terms()) {
    Monomial image = m;
    image.x = act(w, m.x);
    out.emplace_back(image, coef);
  }
  return GroupAlgElt::from_terms(std::move(out));
}

PolynomialRepresentation::PolynomialRepresentation(LevelledAction action, HeckeParams params,
                                                   Mutation mutation)
    : action_(std::move(action)), params_(std::move(params)), mutation_(mutation) {}

GroupAlgElt PolynomialRepresentation::apply_generator(int j, const GroupAlgElt& f) const {
  const AffineWeylGroup& g = action_.group();
  const RootSystemData& rs = g.root_system();
  const int alpha = rs.simple_root(j);
  const int slot = rs.root(alpha).tau_slot;
  const int p = mutation_ == Mutation::TauSquared ? 2 : 1;
  const GroupAlgElt sf = action_.act(g.simple_reflection(j), f);
  GroupAlgElt out = params_.tau(slot, p) * sf;
  if (mutation_ == Mutation::DropCorrection) return out;
  auto q = exact_divide(f - sf, rs.root(alpha).weight);
  if (!q) throw DivisibilityError("T_" + std::to_string(j) + " leaves the Laurent polynomials");
  return out + (params_.tau(slot, p) - params_.tau(slot, -p)) * *q;
}

GroupAlgElt PolynomialRepresentation::apply_omega(int u, const GroupAlgElt& f) const {
  return action_.act(action_.group().omega().at(u).element, f);
}

GroupAlgElt PolynomialRepresentation::apply_word(const ReducedWord& w, const GroupAlgElt& f) const {
  GroupAlgElt r = f;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = apply_generator(*it, r);
  return apply_omega(w.omega, r);
}

std::vector<Weight> monomial_box(int rank, int bound) {
  if (bound < 0) throw std::invalid_argument("negative box bound");
  std::vector<Weight> out;
  Weight w{};
  for (int i = 0; i < rank; ++i) w[i] = -bound;
  for (;;) {
    out.push_back(w);
    int i = 0;
    while (i < rank && w[i] == bound) w[i++] = -bound;
    if (i == rank) break;
    ++w[i];
  }
  return out;
}

VerificationReport verify_poly_presentation(const PolynomialRepresentation& rep, int bound,
                                            int max_length) {
  const AffineWeylGroup& g = rep.action().group();
  const RootSystemData& rs = g.root_system();
  const int n = rs.rank();
  const std::vector<Weight> box = monomial_box(n, bound);
  const GroupAlgElt zero;
  VerificationReport report;
  report.suite = "polynomial";
  report.spec = rs.spec();

  auto tau = [&](int j, int p) { return rep.params().tau(rs.root(rs.simple_root(j)).tau_slot, p); };

  // Runs check(mu) over the box; the first exception or mismatch fails the case.
  auto over_box = [&](CaseRecord c, auto&& check) {
    for (const Weight& mu : box) {
      try {
        const GroupAlgElt residue = check(GroupAlgElt::monomial(mu));
        if (!residue.is_zero()) {
          c.status = CaseStatus::Fail;
          c.witness = "lambda=" + weight_param(g, mu) + ": " + residue.render(n, rs.simply_laced());
          break;
        }
      } catch (const DivisibilityError& e) {
        c.status = CaseStatus::Fail;
        c.witness = "lambda=" + weight_param(g, mu) + ": " + e.what();
        break;
      }
    }
    report.add(std::move(c));
  };
  const std::string level = std::to_string(rep.action().level());

  for (int j = 0; j <= n; ++j) {
    over_box(record("poly-divisibility/j=" + std::to_string(j), "divisibility",
                    {{"j", std::to_string(j)}, {"t", level}}),
             [&](const GroupAlgElt& f) {
               rep.apply_generator(j, f);
               return zero;
             });
  }
  for (int j = 0; j <= n; ++j) {
    over_box(record("poly-quadratic/j=" + std::to_string(j), "quadratic",
                    {{"j", std::to_string(j)}, {"t", level}}),
             [&](const GroupAlgElt& f) {
               const GroupAlgElt tf = rep.apply_generator(j, f);
               return rep.apply_generator(j, tf) + (tau(j, -1) - tau(j, 1)) * tf - f;
             });
  }
  for (int j = 0; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      const int m = rs.coxeter_order(j, k);
      CaseRecord c = record("poly-braid/" + std::to_string(j) + "-" + std::to_string(k), "braid",
                            {{"j", std::to_string(j)},
                             {"k", std::to_string(k)},
                             {"m", m == kInfiniteOrder ? "inf" : std::to_string(m)},
                             {"t", level}});
      if (m == kInfiniteOrder) {
        c.status = CaseStatus::Vacuous;
        report.add(std::move(c));
        continue;
      }
      over_box(std::move(c), [&](const GroupAlgElt& f) {
        GroupAlgElt a = f, b = f;
        for (int i = 0; i < m; ++i) {
          a = rep.apply_generator(i % 2 == 0 ? k : j, a);
          b = rep.apply_generator(i % 2 == 0 ? j : k, b);
        }
        return a - b;
      });
    }
  }
  for (int u = 1; u < static_cast<int>(g.omega().size()); ++u) {
    over_box(record("poly-omega/u=" + std::to_string(u), "omega",
                    {{"u", std::to_string(u)}, {"t", level}}),
             [&](const GroupAlgElt& f) {
               GroupAlgElt residue;
               for (int j = 0; j <= n; ++j)
                 residue += rep.apply_omega(u, rep.apply_generator(j, f)) -
                            rep.apply_generator(g.omega()[u].index_perm[j], rep.apply_omega(u, f));
               return residue;
             });
  }
  for (int j = 0; j <= n; ++j) {
    const int alpha = rs.simple_root(j);
    for (int i = 0; i < n; ++i) {
      for (int sign : {1, -1}) {
        Weight lambda{};
        lambda[i] = sign;
        const std::string lam = weight_param(g, lambda);
        const GroupAlgElt xl = GroupAlgElt::monomial(lambda);
        const GroupAlgElt xs = GroupAlgElt::monomial(rs.reflection_on_weights(alpha).apply(lambda));
        auto r = exact_divide(xl - xs, rs.root(alpha).weight);
        CaseRecord c = record("poly-cross/j=" + std::to_string(j) + "/lambda=" + lam, "cross",
                              {{"j", std::to_string(j)}, {"lambda", lam}, {"t", level}});
        if (!r) {
          c.status = CaseStatus::Fail;
          c.witness = "correction term is not a Laurent polynomial";
          report.add(std::move(c));
          continue;
        }
        const GroupAlgElt corr = (tau(j, 1) - tau(j, -1)) * *r;
        over_box(std::move(c), [&](const GroupAlgElt& f) {
          return rep.apply_generator(j, xl * f) - xs * rep.apply_generator(j, f) - corr * f;
        });
      }
    }
  }

  // Agreement with the smash product: (T_j X^mu) applied to 1 is sum_w h_w X^{w(0)}.
  const BasicRepresentation basic(rep.action().group_ptr(), rep.params());
  for (int j = 0; j <= n; ++j) {
    CaseRecord c = record("poly-compat/j=" + std::to_string(j), "smash-compatibility",
                          {{"j", std::to_string(j)}, {"t", level}});
    for (const Weight& mu : box) {
      const SmashElt image = basic.generator(j) * basic.x(mu);
      RationalFn sum(rs);
      for (const auto& [w, h] : image.terms())
        sum += h * RationalFn(rs, GroupAlgElt::monomial(rep.action().act(w, Weight{})));
      GroupAlgElt direct;
      try {
        direct = rep.apply_generator(j, GroupAlgElt::monomial(mu));
      } catch (const DivisibilityError& e) {
        c.status = CaseStatus::Fail;
        c.witness = "lambda=" + weight_param(g, mu) + ": " + e.what();
        break;
      }
      if (!(sum == RationalFn(rs, direct))) {
        c.status = CaseStatus::Fail;
        c.witness = "lambda=" + weight_param(g, mu) + ": " + (sum - RationalFn(rs, direct)).render();
        break;
      }
    }
    report.add(std::move(c));
  }

  // Elements of the ball whose operators agree on the box.
  CaseRecord unfaithful =
      record("poly-unfaithfulness", "unfaithfulness",
             {{"max_length", std::to_string(max_length)}, {"t", level}});
  unfaithful.status = CaseStatus::Info;
  std::map<std::string, ReducedWord> seen;
  std::size_t coincidences = 0;
  for (const BallEntry& e : g.enumerate_ball(max_length)) {
    std::string signature;
    try {
      for (const Weight& mu : box)
        signature += rep.apply_word(e.word, GroupAlgElt::monomial(mu)).render(n, rs.simply_laced()) + ";";
    } catch (const DivisibilityError&) {
      continue;
    }
    auto [it, inserted] = seen.emplace(std::move(signature), e.word);
    if (!inserted && coincidences++ == 0)
      unfaithful.witness = g.render(it->second) + " and " + g.render(e.word) + " agree on the box";
  }
  unfaithful.params["coincidences"] = std::to_string(coincidences);
  if (coincidences == 0) unfaithful.witness = "no coincidence found on the box";
  report.add(std::move(unfaithful));
  return report;
}

}  // namespace daha
