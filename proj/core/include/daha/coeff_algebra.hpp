#pragma once

// Coefficient tower L -> L[P] -> A.
//
// L is the ring of Laurent polynomials over Q in the Hecke parameters, one per
// W0-orbit of roots: slot 0 holds tau_short (the only one for simply laced
// systems), slot 1 holds tau_long.  L[P] is stored flat: a term is a rational
// coefficient times tau^e X^lambda.  A is L[P] localized at the Weyl
// denominator; its elements keep a numerator over a product of binomials
// (1 - X^{-beta}), beta > 0, and, for the tau-deformed localization, of
// (1 - tau_alpha^2 X^alpha), alpha in R0.  These binomials are squarefree and
// pairwise coprime, so dividing out every binomial that divides the numerator
// yields a unique normal form.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "daha/affine_weyl.hpp"
#include "daha/root_data.hpp"

namespace daha {

inline constexpr int kTauSlots = 2;
using TauExp = std::array<int32_t, kTauSlots>;

struct Monomial {
  Weight x{};
  TauExp tau{};

  auto operator<=>(const Monomial&) const = default;
  Monomial operator+(const Monomial& o) const;
  Monomial operator-() const;
  bool is_one() const;
};

/// Values substituted for tau_short and tau_long.
struct TauAssignment {
  Rational short_value = 1;
  Rational long_value = 1;

  const Rational& value(int slot) const { return slot == 0 ? short_value : long_value; }
  /// Throws std::invalid_argument on a zero value.
  void validate() const;
};

class TauLaurent {
 public:
  TauLaurent() = default;
  explicit TauLaurent(const Rational& c);
  static TauLaurent monomial(const TauExp& e, const Rational& c = 1);
  /// tau_slot^power
  static TauLaurent tau(int slot, int power = 1);

  const std::map<TauExp, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TauLaurent operator+(const TauLaurent& o) const;
  TauLaurent operator-(const TauLaurent& o) const;
  TauLaurent operator*(const TauLaurent& o) const;
  TauLaurent operator-() const;
  bool operator==(const TauLaurent&) const = default;

  Rational evaluate(const TauAssignment& a) const;
  TauLaurent specialize(const TauAssignment& a) const { return TauLaurent(evaluate(a)); }
  std::string render(bool simply_laced) const;

 private:
  std::map<TauExp, Rational> terms_;
};

/// Element of L[P]: finite sum of c tau^e X^lambda, sorted by monomial, no zero terms.
class GroupAlgElt {
 public:
  using Term = std::pair<Monomial, Rational>;

  GroupAlgElt() = default;
  static GroupAlgElt constant(const Rational& c);
  static GroupAlgElt monomial(const Weight& x, const Rational& c = 1);
  static GroupAlgElt term(const Monomial& m, const Rational& c = 1);
  static GroupAlgElt from_tau(const TauLaurent& t);
  /// Accepts unsorted terms with repetitions and zeros.
  static GroupAlgElt from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  TauLaurent coefficient(const Weight& x) const;

  GroupAlgElt operator+(const GroupAlgElt& o) const;
  GroupAlgElt operator-(const GroupAlgElt& o) const;
  GroupAlgElt operator*(const GroupAlgElt& o) const;
  GroupAlgElt operator-() const;
  GroupAlgElt& operator+=(const GroupAlgElt& o) { return *this = *this + o; }
  GroupAlgElt scale(const Rational& c) const;
  /// Multiplication by the monomial c tau^e X^lambda.
  GroupAlgElt shift(const Monomial& m, const Rational& c = 1) const;
  GroupAlgElt pow(int e) const;
  bool operator==(const GroupAlgElt&) const = default;

  /// X^lambda -> X^{m lambda}, tau untouched.
  GroupAlgElt map_weights(const IntMatrix& m) const;
  GroupAlgElt specialize(const TauAssignment& a) const;
  /// Largest X-exponent in lexicographic order.
  std::optional<Weight> leading_weight() const;

  std::string render(int rank, bool simply_laced) const;

 private:
  std::vector<Term> terms_;
};

/// Quotient q with f = (1 - c X^d) q, or nullopt if there is none.
std::optional<GroupAlgElt> divide_by_binomial(const GroupAlgElt& f, const Monomial& d,
                                              const Rational& c);
/// Quotient q with f = (1 - X^{-beta}) q, or nullopt.  beta must be nonzero.
std::optional<GroupAlgElt> exact_divide(const GroupAlgElt& f, const Weight& beta);

/// The binomial 1 - coeff * X^dir used as a denominator factor.
struct DenomFactor {
  enum class Kind { Root, Deformed };
  Kind kind = Kind::Root;
  int root = 0;  // Root: beta > 0 with dir = -beta.  Deformed: alpha in R0 with dir ~ alpha.
  Monomial dir;
  Rational coeff = 1;

  GroupAlgElt as_polynomial() const;
  bool operator==(const DenomFactor& o) const;
  bool operator<(const DenomFactor& o) const;
};

/// Choice of Hecke parameters: indeterminates, or fixed nonzero rationals.
class HeckeParams {
 public:
  static HeckeParams symbolic() { return HeckeParams(); }
  static HeckeParams specialized(const TauAssignment& a);

  bool is_symbolic() const { return !assignment_.has_value(); }
  const std::optional<TauAssignment>& assignment() const { return assignment_; }

  /// tau_slot^power as an element of L[P].
  GroupAlgElt tau(int slot, int power = 1) const;
  /// 1 - tau_alpha^2 X^alpha, or nullopt when it degenerates to a root binomial.
  std::optional<DenomFactor> deformed_factor(const RootSystemData& rs, int root) const;

 private:
  std::optional<TauAssignment> assignment_;
};

DenomFactor root_factor(const RootSystemData& rs, int positive_root);

/// Element of A = L[P] localized at delta (or delta_tau), kept in normal form.
class RationalFn {
 public:
  using Denominator = std::map<DenomFactor, int>;

  RationalFn() = default;
  explicit RationalFn(const RootSystemData& rs) : rs_(&rs) {}
  RationalFn(const RootSystemData& rs, GroupAlgElt numerator);

  /// num / prod(factor^mult).  Throws std::invalid_argument if a factor is not
  /// an allowed binomial of rs.
  static RationalFn fraction(const RootSystemData& rs, GroupAlgElt numerator,
                             const Denominator& den);
  /// 1 / (1 - X^{-alpha}) for any root alpha.
  static RationalFn inverse_root_binomial(const RootSystemData& rs, int root);

  const RootSystemData* root_system() const { return rs_; }
  const GroupAlgElt& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn scale(const Rational& c) const;
  bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// f -> f^v for v in W0.
  RationalFn act(const FiniteWeylElt& v) const;
  RationalFn specialize(const TauAssignment& a) const;

  std::string render() const;

 private:
  void normalize();
  const RootSystemData* ambient(const RationalFn& o) const;

  const RootSystemData* rs_ = nullptr;
  GroupAlgElt num_;
  Denominator den_;
};

/// Action through the gradient: translations act trivially.
RationalFn gradient_action(const ExtAffineWeylElt& w, const RationalFn& f);

/// Numerator reduced by every binomial of delta_tau it is divisible by.
struct UnitFactorization {
  GroupAlgElt remainder;
  RationalFn::Denominator factors;
};
UnitFactorization factor_localized(const RationalFn& f, const HeckeParams& params);
/// True iff f is a unit of L[P] localized at delta_tau.
bool is_localized_unit(const RationalFn& f, const HeckeParams& params);
std::optional<RationalFn> unit_inverse(const RationalFn& f, const HeckeParams& params);

std::string render_weight(const Weight& w, int rank);

}  // namespace daha
