#include "daha/coeff_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace daha {

namespace {

constexpr int kCoords = kMaxRank + kTauSlots;

int32_t coord(const Monomial& m, int p) { return p < kMaxRank ? m.x[p] : m.tau[p - kMaxRank]; }

Monomial scaled(const Monomial& m, int64_t k) {
  Monomial r;
  for (int i = 0; i < kMaxRank; ++i) r.x[i] = static_cast<int32_t>(k * m.x[i]);
  for (int i = 0; i < kTauSlots; ++i) r.tau[i] = static_cast<int32_t>(k * m.tau[i]);
  return r;
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Rational power(const Rational& base, int e) {
  Rational r = 1;
  const Rational b = e < 0 ? Rational(1 / base) : base;
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

std::string render_rational(const Rational& c) { return c.get_str(); }

std::string render_monomial_body(const Monomial& m, int rank, bool simply_laced) {
  std::vector<std::string> parts;
  for (int s = 0; s < kTauSlots; ++s) {
    if (m.tau[s] == 0) continue;
    std::string name = simply_laced ? "t" : (s == 0 ? "ts" : "tl");
    if (m.tau[s] != 1) name += "^" + std::to_string(m.tau[s]);
    parts.push_back(name);
  }
  const bool trivial_x = std::all_of(m.x.begin(), m.x.end(), [](int v) { return v == 0; });
  if (!trivial_x) parts.push_back("X" + render_weight(m.x, rank));
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
  return s;
}

}  // namespace

std::string render_weight(const Weight& w, int rank) {
  std::string s = "[";
  for (int i = 0; i < rank; ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

Monomial Monomial::operator+(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxRank; ++i) r.x[i] = x[i] + o.x[i];
  for (int i = 0; i < kTauSlots; ++i) r.tau[i] = tau[i] + o.tau[i];
  return r;
}

Monomial Monomial::operator-() const { return scaled(*this, -1); }

bool Monomial::is_one() const {
  return std::all_of(x.begin(), x.end(), [](int v) { return v == 0; }) &&
         std::all_of(tau.begin(), tau.end(), [](int v) { return v == 0; });
}

void TauAssignment::validate() const {
  if (short_value == 0 || long_value == 0)
    throw std::invalid_argument("Hecke parameters must be specialized to nonzero values");
}

// ---------------------------------------------------------------------------
// TauLaurent

TauLaurent::TauLaurent(const Rational& c) {
  if (c != 0) terms_.emplace(TauExp{}, c);
}

TauLaurent TauLaurent::monomial(const TauExp& e, const Rational& c) {
  TauLaurent t;
  if (c != 0) t.terms_.emplace(e, c);
  return t;
}

TauLaurent TauLaurent::tau(int slot, int power) {
  TauExp e{};
  e.at(slot) = power;
  return monomial(e);
}

TauLaurent TauLaurent::operator+(const TauLaurent& o) const {
  TauLaurent r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto& slot = r.terms_[e];
    slot += c;
    if (slot == 0) r.terms_.erase(e);
  }
  return r;
}

TauLaurent TauLaurent::operator-() const {
  TauLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TauLaurent TauLaurent::operator-(const TauLaurent& o) const { return *this + (-o); }

TauLaurent TauLaurent::operator*(const TauLaurent& o) const {
  TauLaurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      TauExp e{};
      for (int i = 0; i < kTauSlots; ++i) e[i] = e1[i] + e2[i];
      auto& slot = r.terms_[e];
      slot += c1 * c2;
      if (slot == 0) r.terms_.erase(e);
    }
  return r;
}

Rational TauLaurent::evaluate(const TauAssignment& a) const {
  a.validate();
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kTauSlots; ++i) t *= power(a.value(i), e[i]);
    s += t;
  }
  return s;
}

std::string TauLaurent::render(bool simply_laced) const {
  GroupAlgElt g = GroupAlgElt::from_tau(*this);
  return g.render(0, simply_laced);
}

// ---------------------------------------------------------------------------
// GroupAlgElt

GroupAlgElt GroupAlgElt::constant(const Rational& c) { return term(Monomial{}, c); }

GroupAlgElt GroupAlgElt::monomial(const Weight& x, const Rational& c) {
  Monomial m;
  m.x = x;
  return term(m, c);
}

GroupAlgElt GroupAlgElt::term(const Monomial& m, const Rational& c) {
  GroupAlgElt g;
  if (c != 0) g.terms_.emplace_back(m, c);
  return g;
}

GroupAlgElt GroupAlgElt::from_tau(const TauLaurent& t) {
  GroupAlgElt g;
  for (const auto& [e, c] : t.terms()) {
    Monomial m;
    m.tau = e;
    g.terms_.emplace_back(m, c);
  }
  return g;
}

GroupAlgElt GroupAlgElt::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  GroupAlgElt g;
  for (auto& t : terms) {
    if (!g.terms_.empty() && g.terms_.back().first == t.first) {
      g.terms_.back().second += t.second;
    } else {
      if (!g.terms_.empty() && g.terms_.back().second == 0) g.terms_.pop_back();
      g.terms_.push_back(std::move(t));
    }
  }
  if (!g.terms_.empty() && g.terms_.back().second == 0) g.terms_.pop_back();
  return g;
}

TauLaurent GroupAlgElt::coefficient(const Weight& x) const {
  TauLaurent t;
  for (const auto& [m, c] : terms_)
    if (m.x == x) t = t + TauLaurent::monomial(m.tau, c);
  return t;
}

GroupAlgElt GroupAlgElt::operator+(const GroupAlgElt& o) const {
  GroupAlgElt r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      r.terms_.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return r;
}

GroupAlgElt GroupAlgElt::operator-() const {
  GroupAlgElt r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

GroupAlgElt GroupAlgElt::operator-(const GroupAlgElt& o) const { return *this + (-o); }

GroupAlgElt GroupAlgElt::operator*(const GroupAlgElt& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return shift(o.terms_[0].first, o.terms_[0].second);
  if (terms_.size() == 1) return o.shift(terms_[0].first, terms_[0].second);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) prod.emplace_back(m1 + m2, c1 * c2);
  return from_terms(std::move(prod));
}

GroupAlgElt GroupAlgElt::scale(const Rational& c) const {
  if (c == 0) return {};
  GroupAlgElt r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

GroupAlgElt GroupAlgElt::shift(const Monomial& m, const Rational& c) const {
  if (c == 0) return {};
  GroupAlgElt r = *this;
  for (auto& t : r.terms_) {
    t.first = t.first + m;
    t.second *= c;
  }
  return r;  // translation preserves the order
}

GroupAlgElt GroupAlgElt::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a group algebra element");
  GroupAlgElt r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

GroupAlgElt GroupAlgElt::map_weights(const IntMatrix& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, c] : terms_) {
    Monomial t = mono;
    t.x = m.apply(mono.x);
    out.emplace_back(t, c);
  }
  return from_terms(std::move(out));
}

GroupAlgElt GroupAlgElt::specialize(const TauAssignment& a) const {
  a.validate();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < kTauSlots; ++i) v *= power(a.value(i), mono.tau[i]);
    Monomial t;
    t.x = mono.x;
    out.emplace_back(t, v);
  }
  return from_terms(std::move(out));
}

std::optional<Weight> GroupAlgElt::leading_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().first.x;
}

std::string GroupAlgElt::render(int rank, bool simply_laced) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const std::string body = render_monomial_body(m, rank, simply_laced);
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (body.empty()) {
      s += render_rational(mag);
    } else {
      if (mag != 1) s += render_rational(mag) + "*";
      s += body;
    }
  }
  return s;
}

std::optional<GroupAlgElt> divide_by_binomial(const GroupAlgElt& f, const Monomial& d,
                                              const Rational& c) {
  if (c == 0) throw std::invalid_argument("binomial with zero coefficient");
  if (f.is_zero()) return GroupAlgElt{};
  int p = 0;
  while (p < kCoords && coord(d, p) == 0) ++p;
  if (p == kCoords) throw std::invalid_argument("division by a constant binomial");
  if (coord(d, p) < 0) {
    // 1 - c X^d = -c X^d (1 - c^{-1} X^{-d})
    const Rational ci = 1 / c;
    auto q = divide_by_binomial(f, -d, ci);
    if (!q) return std::nullopt;
    return q->shift(-d, -ci);
  }

  // Group terms into lines r + k d with 0 <= r_p < d_p; divide each line by 1 - c y.
  const int64_t dp = coord(d, p);
  std::map<Monomial, std::map<int64_t, Rational>> lines;
  for (const auto& [m, coef] : f.terms()) {
    const int64_t k = floor_div(coord(m, p), dp);
    lines[m + scaled(d, -k)].emplace(k, coef);
  }
  std::vector<GroupAlgElt::Term> quotient;
  for (const auto& [base, line] : lines) {
    const int64_t lo = line.begin()->first;
    const int64_t hi = line.rbegin()->first;
    Rational acc = 0;
    auto it = line.begin();
    for (int64_t k = lo; k <= hi; ++k) {
      acc *= c;
      if (it != line.end() && it->first == k) {
        acc += it->second;
        ++it;
      }
      if (k == hi) {
        if (acc != 0) return std::nullopt;
      } else if (acc != 0) {
        quotient.emplace_back(base + scaled(d, k), acc);
      }
    }
  }
  return GroupAlgElt::from_terms(std::move(quotient));
}

std::optional<GroupAlgElt> exact_divide(const GroupAlgElt& f, const Weight& beta) {
  Monomial d;
  for (int i = 0; i < kMaxRank; ++i) d.x[i] = -beta[i];
  return divide_by_binomial(f, d, 1);
}

// ---------------------------------------------------------------------------
// Denominator factors and parameters

GroupAlgElt DenomFactor::as_polynomial() const {
  return GroupAlgElt::constant(1) - GroupAlgElt::term(dir, coeff);
}

bool DenomFactor::operator==(const DenomFactor& o) const {
  return kind == o.kind && root == o.root && dir == o.dir && coeff == o.coeff;
}

bool DenomFactor::operator<(const DenomFactor& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (root != o.root) return root < o.root;
  if (dir != o.dir) return dir < o.dir;
  return cmp(coeff, o.coeff) < 0;
}

DenomFactor root_factor(const RootSystemData& rs, int positive_root) {
  if (!rs.is_positive(positive_root))
    throw std::invalid_argument("root binomials are indexed by positive roots");
  DenomFactor f;
  f.kind = DenomFactor::Kind::Root;
  f.root = positive_root;
  for (int i = 0; i < kMaxRank; ++i) f.dir.x[i] = -rs.root(positive_root).weight[i];
  f.coeff = 1;
  return f;
}

HeckeParams HeckeParams::specialized(const TauAssignment& a) {
  a.validate();
  HeckeParams p;
  p.assignment_ = a;
  return p;
}

GroupAlgElt HeckeParams::tau(int slot, int power_) const {
  if (assignment_) return GroupAlgElt::constant(power(assignment_->value(slot), power_));
  Monomial m;
  m.tau.at(slot) = power_;
  return GroupAlgElt::term(m);
}

std::optional<DenomFactor> HeckeParams::deformed_factor(const RootSystemData& rs,
                                                        int root) const {
  const RootEntry& r = rs.root(root);
  DenomFactor f;
  f.kind = DenomFactor::Kind::Deformed;
  f.root = root;
  f.dir.x = r.weight;
  if (assignment_) {
    f.coeff = power(assignment_->value(r.tau_slot), 2);
    if (f.coeff == 1) return std::nullopt;
  } else {
    f.dir.tau[r.tau_slot] = 2;
    f.coeff = 1;
  }
  return f;
}

// ---------------------------------------------------------------------------
// RationalFn

namespace {

void validate_factor(const RootSystemData& rs, const DenomFactor& f) {
  if (f.root < 0 || f.root >= rs.num_roots()) throw std::invalid_argument("non-root denominator");
  const RootEntry& r = rs.root(f.root);
  if (f.kind == DenomFactor::Kind::Root) {
    if (!(f == root_factor(rs, f.root) && r.positive))
      throw std::invalid_argument("non-root denominator");
    return;
  }
  if (f.dir.x != r.weight) throw std::invalid_argument("non-root denominator");
  TauExp sym{};
  sym[r.tau_slot] = 2;
  const bool symbolic = f.dir.tau == sym && f.coeff == 1;
  const bool special = f.dir.tau == TauExp{} && f.coeff != 0 && f.coeff != 1;
  if (!symbolic && !special) throw std::invalid_argument("non-root denominator");
}

}  // namespace

RationalFn::RationalFn(const RootSystemData& rs, GroupAlgElt numerator)
    : rs_(&rs), num_(std::move(numerator)) {}

RationalFn RationalFn::fraction(const RootSystemData& rs, GroupAlgElt numerator,
                                const Denominator& den) {
  RationalFn f(rs, std::move(numerator));
  for (const auto& [factor, mult] : den) {
    validate_factor(rs, factor);
    if (mult < 0) throw std::invalid_argument("negative denominator multiplicity");
    if (mult > 0) f.den_[factor] += mult;
  }
  f.normalize();
  return f;
}

RationalFn RationalFn::inverse_root_binomial(const RootSystemData& rs, int root) {
  if (rs.is_positive(root)) return fraction(rs, GroupAlgElt::constant(1), {{root_factor(rs, root), 1}});
  // 1 - X^{beta} = -X^{beta} (1 - X^{-beta}) for beta = -alpha > 0.
  const int beta = rs.root(root).negation;
  Weight minus{};
  for (int i = 0; i < kMaxRank; ++i) minus[i] = -rs.root(beta).weight[i];
  return fraction(rs, GroupAlgElt::monomial(minus, -1), {{root_factor(rs, beta), 1}});
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = divide_by_binomial(num_, it->first.dir, it->first.coeff);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

const RootSystemData* RationalFn::ambient(const RationalFn& o) const {
  if (rs_ && o.rs_ && rs_ != o.rs_)
    throw std::invalid_argument("combining rational functions of different root systems");
  return rs_ ? rs_ : o.rs_;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  const RootSystemData* rs = ambient(o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  RationalFn r;
  r.rs_ = rs;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
  } else {
    GroupAlgElt a = num_, b = o.num_;
    Denominator d = den_;
    for (const auto& [f, m] : o.den_) d[f] = std::max(d[f], m);
    for (const auto& [f, m] : d) {
      auto ia = den_.find(f);
      const int ma = ia == den_.end() ? 0 : ia->second;
      auto ib = o.den_.find(f);
      const int mb = ib == o.den_.end() ? 0 : ib->second;
      if (m > ma) a = a * f.as_polynomial().pow(m - ma);
      if (m > mb) b = b * f.as_polynomial().pow(m - mb);
    }
    r.num_ = a + b;
    r.den_ = std::move(d);
  }
  r.normalize();
  return r;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator*(const RationalFn& o) const {
  const RootSystemData* rs = ambient(o);
  RationalFn r;
  r.rs_ = rs;
  if (is_zero() || o.is_zero()) return r;
  r.num_ = num_ * o.num_;
  r.den_ = den_;
  for (const auto& [f, m] : o.den_) r.den_[f] += m;
  if (!den_.empty() && !o.den_.empty()) {
    r.normalize();
  } else if (!r.den_.empty()) {
    // Only factors of the side with a denominator can newly divide.
    r.normalize();
  }
  return r;
}

RationalFn RationalFn::scale(const Rational& c) const {
  RationalFn r = *this;
  r.num_ = r.num_.scale(c);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RationalFn RationalFn::act(const FiniteWeylElt& v) const {
  if (is_zero()) return *this;
  RationalFn r;
  r.rs_ = rs_;
  r.num_ = num_.map_weights(v.on_weights());
  for (const auto& [f, m] : den_) {
    const int image = v.act_root(f.root);
    if (f.kind == DenomFactor::Kind::Deformed) {
      DenomFactor g = f;
      g.root = image;
      g.dir.x = rs_->root(image).weight;
      r.den_[g] += m;
    } else if (rs_->is_positive(image)) {
      r.den_[root_factor(*rs_, image)] += m;
    } else {
      // 1 - X^{b} = -X^{b} (1 - X^{-b}) with b = -v(beta) > 0.
      const int b = rs_->root(image).negation;
      Monomial unit;
      for (int i = 0; i < kMaxRank; ++i) unit.x[i] = -rs_->root(b).weight[i];
      for (int k = 0; k < m; ++k) r.num_ = r.num_.shift(unit, -1);
      r.den_[root_factor(*rs_, b)] += m;
    }
  }
  return r;
}

RationalFn RationalFn::specialize(const TauAssignment& a) const {
  a.validate();
  if (is_zero()) return *this;
  const HeckeParams params = HeckeParams::specialized(a);
  RationalFn r;
  r.rs_ = rs_;
  r.num_ = num_.specialize(a);
  for (const auto& [f, m] : den_) {
    if (f.kind == DenomFactor::Kind::Root) {
      r.den_[f] += m;
      continue;
    }
    // Deformed factors: substitute tau_alpha^2.
    const Rational t2 = power(a.value(rs_->root(f.root).tau_slot), 2) * f.coeff;
    if (auto g = params.deformed_factor(*rs_, f.root); g && f.dir.tau != TauExp{}) {
      r.den_[*g] += m;
    } else if (f.dir.tau == TauExp{} && f.coeff != 1) {
      r.den_[f] += m;
    } else {
      // Degenerates to 1 - X^alpha; reorient as a root binomial.
      (void)t2;
      const int alpha = f.root;
      if (!rs_->is_positive(alpha)) {
        r.den_[root_factor(*rs_, rs_->root(alpha).negation)] += m;
      } else {
        Monomial unit;
        for (int i = 0; i < kMaxRank; ++i) unit.x[i] = -rs_->root(alpha).weight[i];
        for (int k = 0; k < m; ++k) r.num_ = r.num_.shift(unit, -1);
        r.den_[root_factor(*rs_, alpha)] += m;
      }
    }
  }
  r.normalize();
  return r;
}

std::string RationalFn::render() const {
  const int rank = rs_ ? rs_->rank() : 0;
  const bool sl = rs_ ? rs_->simply_laced() : true;
  std::string num = num_.render(rank, sl);
  if (den_.empty()) return num;
  if (num_.size() > 1) num = "(" + num + ")";
  std::string den;
  for (const auto& [f, m] : den_) {
    if (!den.empty()) den += " * ";
    den += "(" + f.as_polynomial().render(rank, sl) + ")";
    if (m != 1) den += "^" + std::to_string(m);
  }
  if (den_.size() > 1) den = "(" + den + ")";
  return num + " / " + den;
}

RationalFn gradient_action(const ExtAffineWeylElt& w, const RationalFn& f) {
  return f.act(w.gradient());
}

// ---------------------------------------------------------------------------
// Units of the delta_tau localization

UnitFactorization factor_localized(const RationalFn& f, const HeckeParams& params) {
  if (!f.root_system()) throw std::invalid_argument("rational function without a root system");
  const RootSystemData& rs = *f.root_system();
  std::vector<DenomFactor> candidates;
  for (int b = 0; b < rs.num_positive(); ++b) candidates.push_back(root_factor(rs, b));
  for (int a = 0; a < rs.num_roots(); ++a)
    if (auto g = params.deformed_factor(rs, a)) candidates.push_back(*g);

  UnitFactorization out;
  out.remainder = f.numerator();
  if (out.remainder.is_zero()) return out;
  for (const auto& g : candidates) {
    for (;;) {
      auto q = divide_by_binomial(out.remainder, g.dir, g.coeff);
      if (!q) break;
      out.remainder = std::move(*q);
      ++out.factors[g];
    }
  }
  return out;
}

bool is_localized_unit(const RationalFn& f, const HeckeParams& params) {
  if (f.is_zero()) return false;
  return factor_localized(f, params).remainder.size() == 1;
}

std::optional<RationalFn> unit_inverse(const RationalFn& f, const HeckeParams& params) {
  if (f.is_zero()) return std::nullopt;
  UnitFactorization u = factor_localized(f, params);
  if (u.remainder.size() != 1) return std::nullopt;
  const auto& [m, c] = u.remainder.terms().front();
  GroupAlgElt num = GroupAlgElt::term(-m, 1 / c);
  for (const auto& [g, mult] : f.denominator()) num = num * g.as_polynomial().pow(mult);
  return RationalFn::fraction(*f.root_system(), std::move(num), u.factors);
}

}  // namespace daha
