#pragma once

// The extended affine Weyl group W = W0 x| t(c P^).
//
// An element v t_{c lambda} acts on V by x -> v(x + c lambda) and on affine
// roots by a -> a o w^{-1}, so that (v t_{c lambda}) (alpha + k c) =
// v alpha + (k - <alpha, lambda>) c.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "daha/root_data.hpp"

namespace daha {

/// Element of W0, kept as its action on P, on P^ and on the root table.
class FiniteWeylElt {
 public:
  FiniteWeylElt() = default;
  static FiniteWeylElt identity(const RootSystemData& rs);
  static FiniteWeylElt reflection(const RootSystemData& rs, int root);

  Weight act_weight(const Weight& w) const { return on_weights_.apply(w); }
  Coweight act_coweight(const Coweight& w) const { return on_coweights_.apply(w); }
  Coweight act_coweight_inverse(const Coweight& w) const { return on_coweights_inv_.apply(w); }
  int act_root(int root) const { return perm_[root]; }

  const IntMatrix& on_weights() const { return on_weights_; }
  const std::vector<int>& permutation() const { return perm_; }
  bool is_identity() const;

  FiniteWeylElt operator*(const FiniteWeylElt& o) const;
  FiniteWeylElt inverse() const;

  bool operator==(const FiniteWeylElt& o) const { return perm_ == o.perm_; }
  auto operator<=>(const FiniteWeylElt& o) const { return perm_ <=> o.perm_; }

 private:
  IntMatrix on_weights_, on_weights_inv_;
  IntMatrix on_coweights_, on_coweights_inv_;
  std::vector<int> perm_;
};

class ExtAffineWeylElt {
 public:
  ExtAffineWeylElt() = default;
  ExtAffineWeylElt(const RootSystemData& rs, FiniteWeylElt gradient, Coweight translation);

  static ExtAffineWeylElt identity(const RootSystemData& rs);
  static ExtAffineWeylElt translation(const RootSystemData& rs, const Coweight& lambda);
  /// The affine reflection s_a = s_alpha t_{c k alpha^vee} for a = alpha + k c.
  static ExtAffineWeylElt reflection(const RootSystemData& rs, const AffineRoot& a);
  static ExtAffineWeylElt simple_reflection(const RootSystemData& rs, int j);

  const RootSystemData& root_system() const { return *rs_; }
  const FiniteWeylElt& gradient() const { return grad_; }
  const Coweight& translation_part() const { return trans_; }
  bool is_identity() const;

  /// (v1, l1)(v2, l2) = (v1 v2, v2^{-1} l1 + l2).  Throws on mixed root systems.
  ExtAffineWeylElt operator*(const ExtAffineWeylElt& o) const;
  ExtAffineWeylElt inverse() const;

  /// Throws std::logic_error if the image level breaks the multiplier invariant.
  AffineRoot act(const AffineRoot& a) const;

  bool operator==(const ExtAffineWeylElt& o) const {
    return trans_ == o.trans_ && grad_ == o.grad_;
  }
  auto operator<=>(const ExtAffineWeylElt& o) const {
    if (auto c = grad_ <=> o.grad_; c != 0) return c;
    return trans_ <=> o.trans_;
  }

 private:
  const RootSystemData* rs_ = nullptr;
  FiniteWeylElt grad_;
  Coweight trans_{};
};

struct OmegaElt {
  ExtAffineWeylElt element;
  std::vector<int> index_perm;  // j -> u_j with u a_j = a_{u_j}
};

/// w = u s_{j1} ... s_{jl} with u the length-zero part.
struct ReducedWord {
  int omega = 0;  // index into AffineWeylGroup::omega()
  std::vector<int> word;
};

struct BallEntry {
  ExtAffineWeylElt element;
  ReducedWord word;
};

/// The extended affine Weyl group of a root system, with its subgroup Omega.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(std::shared_ptr<const RootSystemData> rs);

  const RootSystemData& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystemData> root_system_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }

  const ExtAffineWeylElt& identity() const { return identity_; }
  const ExtAffineWeylElt& simple_reflection(int j) const { return simple_[j]; }

  /// Number of positive affine roots sent to negative ones.
  int64_t length(const ExtAffineWeylElt& w) const;
  /// True iff w a_j is a negative affine root.
  bool is_right_descent(const ExtAffineWeylElt& w, int j) const;

  /// Omega; element 0 is the identity.
  const std::vector<OmegaElt>& omega() const { return omega_; }
  std::optional<int> omega_index(const ExtAffineWeylElt& w) const;

  ReducedWord reduced_word(const ExtAffineWeylElt& w) const;
  ExtAffineWeylElt compose_word(int omega, std::span<const int> word) const;

  /// Subword order inside a coset of W^a; elements with different Omega parts
  /// are incomparable.
  bool bruhat_leq(const ExtAffineWeylElt& v, const ExtAffineWeylElt& w) const;
  bool bruhat_leq(const ExtAffineWeylElt& v, const ReducedWord& w) const;

  /// All elements of length <= max_length, in breadth-first order.
  std::vector<BallEntry> enumerate_ball(int max_length) const;

  /// "[u1; 0 2 1]"
  std::string render(const ReducedWord& w) const;
  std::string render(const ExtAffineWeylElt& w) const { return render(reduced_word(w)); }

 private:
  friend std::vector<OmegaElt> compute_omega(const AffineWeylGroup& group);

  // Strips right descents until none remain; returns the terminal element and
  // the indices in the order they were removed.
  std::pair<ExtAffineWeylElt, std::vector<int>> strip_descents(ExtAffineWeylElt w) const;

  std::shared_ptr<const RootSystemData> rs_;
  ExtAffineWeylElt identity_;
  std::vector<ExtAffineWeylElt> simple_;
  std::vector<OmegaElt> omega_;
};

/// Omega computed by stripping descents of the translations t_{c w^_i} and
/// closing under multiplication; each element's permutation table is checked.
/// Throws std::logic_error if a candidate fails to permute the simple affine roots.
std::vector<OmegaElt> compute_omega(const AffineWeylGroup& group);

}  // namespace daha
