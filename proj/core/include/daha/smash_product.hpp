#pragma once

// The smash product A # W: finite sums of f_w w with f_w in A, multiplied
// through the cross relation (f v)(g w) = f g^{v'} v w.

#include <map>
#include <string>

#include "daha/affine_weyl.hpp"
#include "daha/coeff_algebra.hpp"

namespace daha {

class SmashElt {
 public:
  using Map = std::map<ExtAffineWeylElt, RationalFn>;

  SmashElt() = default;
  explicit SmashElt(const RootSystemData& rs) : rs_(&rs) {}

  static SmashElt embed_fn(const RootSystemData& rs, const RationalFn& f);
  static SmashElt embed_group(const ExtAffineWeylElt& w);
  /// f w
  static SmashElt term(const RationalFn& f, const ExtAffineWeylElt& w);

  const RootSystemData* root_system() const { return rs_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// f_w, zero when w is not in the support.
  RationalFn coefficient(const ExtAffineWeylElt& w) const;

  SmashElt operator+(const SmashElt& o) const;
  SmashElt operator-(const SmashElt& o) const;
  SmashElt operator*(const SmashElt& o) const;
  SmashElt operator-() const;
  SmashElt& operator+=(const SmashElt& o);
  SmashElt scale(const Rational& c) const;
  bool operator==(const SmashElt& o) const { return terms_ == o.terms_; }

  SmashElt specialize(const TauAssignment& a) const;

  /// Terms ordered by (Omega part, length, reduced word): "f · [u; j1 ... jl]".
  std::string render(const AffineWeylGroup& group) const;

 private:
  void add_term(const ExtAffineWeylElt& w, const RationalFn& f);
  const RootSystemData* ambient(const SmashElt& o) const;

  const RootSystemData* rs_ = nullptr;
  Map terms_;
};

/// Left multiplication by an element of A.
SmashElt operator*(const RationalFn& f, const SmashElt& a);

}  // namespace daha
