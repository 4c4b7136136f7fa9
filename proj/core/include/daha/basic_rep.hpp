#pragma once

// Image of the critical-level DAHA in A # W: T_j -> Demazure-Lusztig element,
// T_u -> u, X^lambda -> X^lambda.  The verify_* functions check the defining
// relations exactly and return one case record each.

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "daha/affine_weyl.hpp"
#include "daha/coeff_algebra.hpp"
#include "daha/report.hpp"
#include "daha/smash_product.hpp"

namespace daha {

/// Deliberately broken operators, used as negative controls.
enum class Mutation {
  None,
  TauSquared,      // tau_a replaced by tau_a^2 inside the operator
  DropCorrection,  // the (tau - tau^{-1}) / (1 - X^{-alpha}) part removed
};

std::string to_string(Mutation m);

class BasicRepresentation {
 public:
  BasicRepresentation(std::shared_ptr<const AffineWeylGroup> group, HeckeParams params,
                      Mutation mutation = Mutation::None);

  const AffineWeylGroup& group() const { return *group_; }
  std::shared_ptr<const AffineWeylGroup> group_ptr() const { return group_; }
  const RootSystemData& root_system() const { return group_->root_system(); }
  const HeckeParams& params() const { return params_; }
  Mutation mutation() const { return mutation_; }
  BasicRepresentation mutate(Mutation m) const { return {group_, params_, m}; }

  /// tau_a^power for the orbit of the gradient root, as an element of A.
  RationalFn tau_of_root(int root, int power = 1) const;
  RationalFn tau_j(int j, int power = 1) const;
  /// (tau_a - tau_a^{-1}) / (1 - X^{-alpha}) with the unmutated parameters.
  RationalFn correction(int root) const;

  /// T(a) = tau_a s_a + (tau_a - tau_a^{-1}) / (1 - X^{-alpha}) (1 - s_a).
  /// Throws InvalidRootError for a non-root.
  SmashElt demazure_lusztig(const AffineRoot& a) const;
  const SmashElt& generator(int j) const { return generators_.at(j); }
  /// T_j - (tau_j - tau_j^{-1}).
  SmashElt generator_inverse(int j) const;
  SmashElt omega_element(int u) const;
  SmashElt x(const Weight& lambda) const;
  SmashElt fn(const RationalFn& f) const { return SmashElt::embed_fn(root_system(), f); }

  /// u T_{j1} ... T_{jl}; the word need not be reduced.
  SmashElt rep_image(int omega, std::span<const int> word) const;

 private:
  std::shared_ptr<const AffineWeylGroup> group_;
  HeckeParams params_;
  Mutation mutation_;
  std::vector<SmashElt> generators_;

  // Parameters as seen by the (possibly mutated) operators.
  RationalFn operator_tau(int root, int power) const;
};

/// The correction term of the cross relation, (tau_j - tau_j^{-1}) (X^lambda - X^{s'_j lambda})
/// / (1 - X^{-alpha_j}), or nullopt when the division is not exact.
std::optional<RationalFn> cross_correction(const BasicRepresentation& rep, int j,
                                           const Weight& lambda);

CaseRecord verify_quadratic(const BasicRepresentation& rep, int j);
CaseRecord verify_braid(const BasicRepresentation& rep, int j, int k);
CaseRecord verify_cross(const BasicRepresentation& rep, int j, const Weight& lambda);
/// r(lambda + mu) = X^{s'_j lambda} r(mu) + r(lambda) X^mu.
CaseRecord verify_cross_additivity(const BasicRepresentation& rep, int j, const Weight& lambda,
                                   const Weight& mu);
CaseRecord verify_x_relation(const BasicRepresentation& rep, const Weight& lambda,
                             const Weight& mu);
/// T_u T_j = T_{u_j} T_u, T_u X^lambda = X^{u' lambda} T_u and T_u T_v = T_{uv}.
CaseRecord verify_omega(const BasicRepresentation& rep, int u);
/// Finds u, j >= 1 with u a_j = a_0 and checks T_0 = u T_j u^{-1}; vacuous for trivial Omega.
CaseRecord verify_omega_descent(const BasicRepresentation& rep);
/// w T(a) w^{-1} = T(w a).
CaseRecord verify_conjugation(const BasicRepresentation& rep, const ExtAffineWeylElt& w,
                              const AffineRoot& a);

struct TriangularExpansion {
  ExtAffineWeylElt w;
  ReducedWord word;
  SmashElt image;                          // T_w
  std::map<ExtAffineWeylElt, RationalFn> coefficients;  // v -> f_vw
  bool support_in_ideal = false;
  bool leading_nonzero = false;
  bool leading_unit = false;
  std::optional<ExtAffineWeylElt> escaped;  // a support element not below w

  const RationalFn& leading() const { return coefficients.at(w); }
  bool ok() const { return support_in_ideal && leading_nonzero && leading_unit; }
};

/// Expands and inverts T_w over a ball, reusing T_{w s_j} = T_w T_j.
class TriangularSolver {
 public:
  explicit TriangularSolver(const BasicRepresentation& rep) : rep_(rep) {}

  const BasicRepresentation& rep() const { return rep_; }

  const TriangularExpansion& expand(const BallEntry& entry);
  /// v -> tilde f_vw with w = sum tilde f_vw T_v.  Requires every element of the
  /// Bruhat ideal to have been expanded and to have passed its flags; throws
  /// std::logic_error otherwise.
  const std::map<ExtAffineWeylElt, RationalFn>& invert(const ExtAffineWeylElt& w);
  /// sum tilde f_vw T_v, which must equal w.
  SmashElt recompose(const ExtAffineWeylElt& w);

 private:
  const SmashElt& image(const ReducedWord& word);

  const BasicRepresentation& rep_;
  std::map<ExtAffineWeylElt, SmashElt> images_;
  std::map<ExtAffineWeylElt, TriangularExpansion> expansions_;
  std::map<ExtAffineWeylElt, std::map<ExtAffineWeylElt, RationalFn>> inverses_;
};

CaseRecord verify_triangular(TriangularSolver& solver, const BallEntry& entry);
CaseRecord verify_inversion(TriangularSolver& solver, const BallEntry& entry);

struct PbwPair {
  Weight mu{};
  ExtAffineWeylElt w;
};

struct PbwResult {
  bool independent = false;
  /// For a dependency: indices i, j and coefficients with c_i X^mu_i T_wi + c_j X^mu_j T_wj = 0.
  std::optional<std::tuple<std::size_t, std::size_t, Rational, Rational>> dependency;
  std::string detail;
};

/// Leading-term argument: T_w has support in the Bruhat ideal of w with a nonzero
/// leading coefficient, so a relation sum c X^mu T_w = 0 restricted to a
/// Bruhat-maximal w forces sum c_mu X^mu = 0, i.e. c = 0 for distinct mu.
PbwResult pbw_independence(TriangularSolver& solver, const std::vector<BallEntry>& ball,
                           const std::vector<PbwPair>& pairs);

}  // namespace daha
