#include "daha/affine_weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace daha {

FiniteWeylElt FiniteWeylElt::identity(const RootSystemData& rs) {
  FiniteWeylElt v;
  const int n = rs.rank();
  v.on_weights_ = v.on_weights_inv_ = IntMatrix::identity(n);
  v.on_coweights_ = v.on_coweights_inv_ = IntMatrix::identity(n);
  v.perm_.resize(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) v.perm_[i] = i;
  return v;
}

FiniteWeylElt FiniteWeylElt::reflection(const RootSystemData& rs, int root) {
  FiniteWeylElt v;
  v.on_weights_ = v.on_weights_inv_ = rs.reflection_on_weights(root);
  v.on_coweights_ = v.on_coweights_inv_ = rs.reflection_on_coweights(root);
  v.perm_ = rs.reflection_permutation(root);
  return v;
}

bool FiniteWeylElt::is_identity() const {
  for (int i = 0; i < static_cast<int>(perm_.size()); ++i)
    if (perm_[i] != i) return false;
  return true;
}

FiniteWeylElt FiniteWeylElt::operator*(const FiniteWeylElt& o) const {
  FiniteWeylElt r;
  r.on_weights_ = on_weights_ * o.on_weights_;
  r.on_weights_inv_ = o.on_weights_inv_ * on_weights_inv_;
  r.on_coweights_ = on_coweights_ * o.on_coweights_;
  r.on_coweights_inv_ = o.on_coweights_inv_ * on_coweights_inv_;
  r.perm_.resize(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) r.perm_[i] = perm_[o.perm_[i]];
  return r;
}

FiniteWeylElt FiniteWeylElt::inverse() const {
  FiniteWeylElt r;
  r.on_weights_ = on_weights_inv_;
  r.on_weights_inv_ = on_weights_;
  r.on_coweights_ = on_coweights_inv_;
  r.on_coweights_inv_ = on_coweights_;
  r.perm_.resize(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) r.perm_[perm_[i]] = static_cast<int>(i);
  return r;
}

ExtAffineWeylElt::ExtAffineWeylElt(const RootSystemData& rs, FiniteWeylElt gradient,
                                   Coweight translation)
    : rs_(&rs), grad_(std::move(gradient)), trans_(translation) {}

ExtAffineWeylElt ExtAffineWeylElt::identity(const RootSystemData& rs) {
  return ExtAffineWeylElt(rs, FiniteWeylElt::identity(rs), Coweight{});
}

ExtAffineWeylElt ExtAffineWeylElt::translation(const RootSystemData& rs, const Coweight& lambda) {
  return ExtAffineWeylElt(rs, FiniteWeylElt::identity(rs), lambda);
}

ExtAffineWeylElt ExtAffineWeylElt::reflection(const RootSystemData& rs, const AffineRoot& a) {
  if (!rs.is_valid_affine(a)) throw InvalidRootError("reflection in a non-root");
  const auto& r = rs.root(a.root);
  const int64_t q = a.level / r.multiplier;
  Coweight lambda{};
  for (int i = 0; i < rs.rank(); ++i) lambda[i] = static_cast<int32_t>(q * r.hat[i]);
  return ExtAffineWeylElt(rs, FiniteWeylElt::reflection(rs, a.root), lambda);
}

ExtAffineWeylElt ExtAffineWeylElt::simple_reflection(const RootSystemData& rs, int j) {
  return reflection(rs, rs.affine_simple(j));
}

bool ExtAffineWeylElt::is_identity() const {
  return std::all_of(trans_.begin(), trans_.end(), [](int x) { return x == 0; }) &&
         grad_.is_identity();
}

ExtAffineWeylElt ExtAffineWeylElt::operator*(const ExtAffineWeylElt& o) const {
  if (rs_ != o.rs_) throw std::invalid_argument("composing elements of different Weyl groups");
  Coweight t = o.grad_.act_coweight_inverse(trans_);
  for (int i = 0; i < kMaxRank; ++i) t[i] += o.trans_[i];
  return ExtAffineWeylElt(*rs_, grad_ * o.grad_, t);
}

ExtAffineWeylElt ExtAffineWeylElt::inverse() const {
  Coweight t = grad_.act_coweight(trans_);
  for (auto& x : t) x = -x;
  return ExtAffineWeylElt(*rs_, grad_.inverse(), t);
}

AffineRoot ExtAffineWeylElt::act(const AffineRoot& a) const {
  AffineRoot r{grad_.act_root(a.root), a.level - rs_->pair(a.root, trans_)};
  if (r.level % rs_->root(r.root).multiplier != 0)
    throw std::logic_error("affine root image violates the multiplier invariant");
  return r;
}

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const RootSystemData> rs) : rs_(std::move(rs)) {
  identity_ = ExtAffineWeylElt::identity(*rs_);
  for (int j = 0; j <= rs_->rank(); ++j)
    simple_.push_back(ExtAffineWeylElt::simple_reflection(*rs_, j));
  omega_ = compute_omega(*this);
}

int64_t AffineWeylGroup::length(const ExtAffineWeylElt& w) const {
  // Sum over alpha > 0 of |<alpha, lambda>/m_alpha + [v alpha < 0]|.
  int64_t total = 0;
  for (int a = 0; a < rs_->num_positive(); ++a) {
    const int64_t mu = rs_->pair(a, w.translation_part()) / rs_->root(a).multiplier;
    const int64_t flip = rs_->is_positive(w.gradient().act_root(a)) ? 0 : 1;
    total += std::abs(mu + flip);
  }
  return total;
}

bool AffineWeylGroup::is_right_descent(const ExtAffineWeylElt& w, int j) const {
  return !is_positive_affine(*rs_, w.act(rs_->affine_simple(j)));
}

std::optional<int> AffineWeylGroup::omega_index(const ExtAffineWeylElt& w) const {
  for (int i = 0; i < static_cast<int>(omega_.size()); ++i)
    if (omega_[i].element == w) return i;
  return std::nullopt;
}

std::pair<ExtAffineWeylElt, std::vector<int>> AffineWeylGroup::strip_descents(
    ExtAffineWeylElt w) const {
  std::vector<int> removed;
  const int n = rs_->rank();
  for (;;) {
    int j = 0;
    while (j <= n && !is_right_descent(w, j)) ++j;
    if (j > n) break;
    w = w * simple_[j];
    removed.push_back(j);
  }
  return {std::move(w), std::move(removed)};
}

ReducedWord AffineWeylGroup::reduced_word(const ExtAffineWeylElt& w) const {
  auto [u, removed] = strip_descents(w);
  auto idx = omega_index(u);
  if (!idx) throw std::logic_error("descent-free element missing from the Omega table");
  ReducedWord r;
  r.omega = *idx;
  r.word.assign(removed.rbegin(), removed.rend());
  return r;
}

ExtAffineWeylElt AffineWeylGroup::compose_word(int omega, std::span<const int> word) const {
  ExtAffineWeylElt w = omega_.at(omega).element;
  for (int j : word) w = w * simple_.at(j);
  return w;
}

bool AffineWeylGroup::bruhat_leq(const ExtAffineWeylElt& v, const ExtAffineWeylElt& w) const {
  return bruhat_leq(v, reduced_word(w));
}

bool AffineWeylGroup::bruhat_leq(const ExtAffineWeylElt& v, const ReducedWord& w) const {
  const ExtAffineWeylElt& u = omega_.at(w.omega).element;
  ExtAffineWeylElt x = u.inverse() * v;
  // Reading w's word from the right: v <= w s iff (v s <= w if v s < v, else v <= w).
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    if (is_right_descent(x, *it)) x = x * simple_[*it];
  return x.is_identity();
}

std::vector<BallEntry> AffineWeylGroup::enumerate_ball(int max_length) const {
  if (max_length < 0) throw std::invalid_argument("negative ball radius");
  std::vector<BallEntry> out;
  std::set<ExtAffineWeylElt> seen;
  for (int i = 0; i < static_cast<int>(omega_.size()); ++i) {
    out.push_back({omega_[i].element, ReducedWord{i, {}}});
    seen.insert(omega_[i].element);
  }
  std::size_t begin = 0;
  for (int len = 0; len < max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t e = begin; e < end; ++e) {
      for (int j = 0; j <= rs_->rank(); ++j) {
        if (is_right_descent(out[e].element, j)) continue;
        ExtAffineWeylElt y = out[e].element * simple_[j];
        if (!seen.insert(y).second) continue;
        ReducedWord word = out[e].word;
        word.word.push_back(j);
        out.push_back({std::move(y), std::move(word)});
      }
    }
    begin = end;
  }
  return out;
}

std::string AffineWeylGroup::render(const ReducedWord& w) const {
  std::string s = "[u" + std::to_string(w.omega) + ";";
  for (int j : w.word) s += " " + std::to_string(j);
  return s + "]";
}

std::vector<OmegaElt> compute_omega(const AffineWeylGroup& group) {
  const RootSystemData& rs = group.root_system();
  const int n = rs.rank();
  std::vector<ExtAffineWeylElt> gens;
  for (int i = 0; i < n; ++i) {
    Coweight lambda{};
    lambda[i] = 1;
    gens.push_back(group.strip_descents(ExtAffineWeylElt::translation(rs, lambda)).first);
  }
  std::set<ExtAffineWeylElt> elements{group.identity()};
  std::deque<ExtAffineWeylElt> queue{group.identity()};
  while (!queue.empty()) {
    const ExtAffineWeylElt x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      ExtAffineWeylElt y = x * g;
      if (elements.insert(y).second) queue.push_back(std::move(y));
    }
  }

  std::vector<OmegaElt> out;
  for (const auto& u : elements) {
    if (group.length(u) != 0) throw std::logic_error("Omega candidate has positive length");
    OmegaElt o{u, std::vector<int>(n + 1, -1)};
    for (int j = 0; j <= n; ++j) {
      const AffineRoot image = u.act(rs.affine_simple(j));
      for (int k = 0; k <= n; ++k)
        if (image == rs.affine_simple(k)) o.index_perm[j] = k;
      if (o.index_perm[j] < 0)
        throw std::logic_error("Omega candidate does not permute the simple affine roots");
    }
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(),
            [](const OmegaElt& a, const OmegaElt& b) { return a.index_perm < b.index_perm; });
  return out;
}

}  // namespace daha
