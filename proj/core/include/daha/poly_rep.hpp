#pragma once

// The polynomial representation on L[P] at integral level: W acts on P by the
// affine action at c = t <alpha_0, alpha_0> / 2, T_j by the Demazure-Lusztig
// operator and X^lambda by multiplication.

#include <memory>
#include <stdexcept>
#include <vector>

#include "daha/affine_weyl.hpp"
#include "daha/basic_rep.hpp"
#include "daha/coeff_algebra.hpp"
#include "daha/report.hpp"

namespace daha {

class LevelConstraintError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LevelledAction {
 public:
  /// Throws std::invalid_argument unless t >= 1.
  LevelledAction(std::shared_ptr<const AffineWeylGroup> group, int t);

  const AffineWeylGroup& group() const { return *group_; }
  std::shared_ptr<const AffineWeylGroup> group_ptr() const { return group_; }
  int level() const { return t_; }
  const Rational& c() const { return c_; }

  /// v (mu + c lambda) for w = v t_{c lambda}.  Throws LevelConstraintError if
  /// the image leaves P.
  Weight act(const ExtAffineWeylElt& w, const Weight& mu) const;
  GroupAlgElt act(const ExtAffineWeylElt& w, const GroupAlgElt& f) const;

 private:
  std::shared_ptr<const AffineWeylGroup> group_;
  int t_;
  Rational c_;
};

class PolynomialRepresentation {
 public:
  PolynomialRepresentation(LevelledAction action, HeckeParams params,
                           Mutation mutation = Mutation::None);

  const LevelledAction& action() const { return action_; }
  const HeckeParams& params() const { return params_; }
  PolynomialRepresentation mutate(Mutation m) const { return {action_, params_, m}; }

  /// tau_j s_j f + (tau_j - tau_j^{-1}) (f - s_j f) / (1 - X^{-alpha_j}).
  /// Throws DivisibilityError when the quotient is not a Laurent polynomial.
  GroupAlgElt apply_generator(int j, const GroupAlgElt& f) const;
  GroupAlgElt apply_omega(int u, const GroupAlgElt& f) const;
  /// T_u T_{j1} ... T_{jl} f.
  GroupAlgElt apply_word(const ReducedWord& w, const GroupAlgElt& f) const;

 private:
  LevelledAction action_;
  HeckeParams params_;
  Mutation mutation_;
};

/// All weights with coordinates in [-bound, bound] in the fundamental weight basis.
std::vector<Weight> monomial_box(int rank, int bound);

/// Quadratic, braid, Omega and cross relations checked on every X^lambda of the
/// box, divisibility of every generator image, agreement with the smash
/// product, and (as information) coincidences of T_w on the box for
/// l(w) <= max_length.
VerificationReport verify_poly_presentation(const PolynomialRepresentation& rep, int bound,
                                            int max_length);

}  // namespace daha
