#include "daha/smash_product.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace daha {

SmashElt SmashElt::embed_fn(const RootSystemData& rs, const RationalFn& f) {
  return term(f.root_system() ? f : RationalFn(rs), ExtAffineWeylElt::identity(rs));
}

SmashElt SmashElt::embed_group(const ExtAffineWeylElt& w) {
  const RootSystemData& rs = w.root_system();
  return term(RationalFn(rs, GroupAlgElt::constant(1)), w);
}

SmashElt SmashElt::term(const RationalFn& f, const ExtAffineWeylElt& w) {
  SmashElt s(w.root_system());
  if (f.root_system() && f.root_system() != &w.root_system())
    throw std::invalid_argument("coefficient and group element from different root systems");
  s.add_term(w, f);
  return s;
}

void SmashElt::add_term(const ExtAffineWeylElt& w, const RationalFn& f) {
  if (f.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

const RootSystemData* SmashElt::ambient(const SmashElt& o) const {
  if (rs_ && o.rs_ && rs_ != o.rs_)
    throw std::invalid_argument("combining smash product elements of different root systems");
  return rs_ ? rs_ : o.rs_;
}

RationalFn SmashElt::coefficient(const ExtAffineWeylElt& w) const {
  auto it = terms_.find(w);
  if (it != terms_.end()) return it->second;
  return rs_ ? RationalFn(*rs_) : RationalFn();
}

SmashElt SmashElt::operator+(const SmashElt& o) const {
  SmashElt r = *this;
  r += o;
  return r;
}

SmashElt& SmashElt::operator+=(const SmashElt& o) {
  rs_ = ambient(o);
  for (const auto& [w, f] : o.terms_) add_term(w, f);
  return *this;
}

SmashElt SmashElt::operator-() const {
  SmashElt r = *this;
  for (auto& [w, f] : r.terms_) f = -f;
  return r;
}

SmashElt SmashElt::operator-(const SmashElt& o) const { return *this + (-o); }

SmashElt SmashElt::operator*(const SmashElt& o) const {
  SmashElt r;
  r.rs_ = ambient(o);
  for (const auto& [v, f] : terms_) {
    for (const auto& [w, g] : o.terms_) r.add_term(v * w, f * g.act(v.gradient()));
  }
  return r;
}

SmashElt SmashElt::scale(const Rational& c) const {
  SmashElt r;
  r.rs_ = rs_;
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [w, f] : r.terms_) f = f.scale(c);
  return r;
}

SmashElt operator*(const RationalFn& f, const SmashElt& a) {
  SmashElt r(*a.root_system());
  for (const auto& [w, g] : a.terms()) r += SmashElt::term(f * g, w);
  return r;
}

SmashElt SmashElt::specialize(const TauAssignment& a) const {
  SmashElt r;
  r.rs_ = rs_;
  for (const auto& [w, f] : terms_) r.add_term(w, f.specialize(a));
  return r;
}

std::string SmashElt::render(const AffineWeylGroup& group) const {
  if (terms_.empty()) return "0";
  struct Row {
    int omega;
    std::size_t length;
    std::vector<int> word;
    std::string text;
  };
  std::vector<Row> rows;
  for (const auto& [w, f] : terms_) {
    ReducedWord rw = group.reduced_word(w);
    std::string coef = f.render();
    if (f.is_polynomial() && f.numerator().size() > 1) coef = "(" + coef + ")";
    rows.push_back({rw.omega, rw.word.size(), rw.word, coef + " · " + group.render(rw)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.omega, a.length, a.word) < std::tie(b.omega, b.length, b.word);
  });
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? " + " : "") + rows[i].text;
  return s;
}

}  // namespace daha
