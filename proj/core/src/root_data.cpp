#include "daha/root_data.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace daha {

namespace {

// Gram matrix of the simple roots (Bourbaki numbering), short roots of norm 2.
std::vector<std::vector<int>> dynkin_gram(const RootSystemSpec& spec) {
  const int n = spec.rank;
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int value) {
    g[i - 1][j - 1] = value;
    g[j - 1][i - 1] = value;
  };
  switch (spec.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) g[i - 1][i - 1] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) g[i - 1][i - 1] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case Family::D:
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case Family::E: {
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
      for (const auto& e : edges)
        if (e[0] <= n && e[1] <= n) link(e[0], e[1], -1);
      break;
    }
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case Family::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(1, 2, -3);
      break;
  }
  return g;
}

void check_admissible(const RootSystemSpec& spec) {
  const int n = spec.rank;
  bool ok = false;
  switch (spec.family) {
    case Family::A: ok = n >= 1 && n <= kMaxRank; break;
    case Family::B:
    case Family::C: ok = n >= 2 && n <= kMaxRank; break;
    case Family::D: ok = n >= 3 && n <= kMaxRank; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok)
    throw RootSystemError("inadmissible root system: family " +
                          std::string(1, family_letter(spec.family)) + " does not admit rank " +
                          std::to_string(n));
}

int64_t as_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string("non-integral ") + what);
  return q.get_num().get_si();
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw RootSystemError("unknown root system family '" + s + "'");
}

Twist parse_twist(const std::string& s) {
  if (s == "twisted") return Twist::Twisted;
  if (s == "untwisted") return Twist::Untwisted;
  throw RootSystemError("unknown twist '" + s + "' (expected twisted or untwisted)");
}

std::string to_string(Twist t) { return t == Twist::Twisted ? "twisted" : "untwisted"; }

std::string to_string(const RootSystemSpec& spec) {
  return std::string(1, family_letter(spec.family)) + std::to_string(spec.rank) + " " +
         to_string(spec.twist);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IVec IntMatrix::apply(const IVec& v) const {
  IVec r{};
  for (int i = 0; i < n; ++i) {
    int64_t s = 0;
    for (int j = 0; j < n; ++j) s += static_cast<int64_t>(at(i, j)) * v[j];
    r[i] = static_cast<int32_t>(s);
  }
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r;
  r.n = n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int32_t x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

bool FiniteRootSubsystem::contains(int root) const {
  return std::binary_search(roots.begin(), roots.end(), root);
}

std::shared_ptr<const RootSystemData> RootSystemData::build(const RootSystemSpec& spec) {
  check_admissible(spec);
  std::shared_ptr<RootSystemData> rs(new RootSystemData());
  rs->spec_ = spec;
  const int n = spec.rank;
  rs->rank_ = n;

  const auto g = dynkin_gram(spec);
  rs->gram_.assign(n, std::vector<Rational>(n));
  rs->cartan_.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs->gram_[i][j] = g[i][j];
      rs->cartan_[i][j] = 2 * g[i][j] / g[j][j];
    }
  rs->simply_laced_ = true;
  for (int i = 0; i < n; ++i)
    if (g[i][i] != 2) rs->simply_laced_ = false;

  // Closure of the simple roots under simple reflections.
  std::set<IVec> found;
  std::deque<IVec> queue;
  for (int i = 0; i < n; ++i) {
    IVec e{};
    e[i] = 1;
    found.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IVec b = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int k = 0; k < n; ++k) c += b[k] * rs->cartan_[k][i];
      IVec r = b;
      r[i] -= c;
      if (found.insert(r).second) queue.push_back(r);
    }
  }

  std::vector<IVec> pos;
  for (const auto& b : found) {
    const bool nonneg = std::all_of(b.begin(), b.begin() + n, [](int x) { return x >= 0; });
    if (nonneg) pos.push_back(b);
  }
  auto height = [n](const IVec& b) { return std::accumulate(b.begin(), b.begin() + n, 0); };
  std::sort(pos.begin(), pos.end(), [&](const IVec& x, const IVec& y) {
    const int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  const int np = static_cast<int>(pos.size());
  if (2 * np != static_cast<int>(found.size()))
    throw std::logic_error("root closure is not symmetric");
  rs->num_positive_ = np;
  rs->roots_.resize(2 * np);
  for (int i = 0; i < np; ++i) {
    IVec neg{};
    for (int k = 0; k < n; ++k) neg[k] = -pos[i][k];
    rs->roots_[i].simple = pos[i];
    rs->roots_[i + np].simple = neg;
    rs->roots_[i].negation = i + np;
    rs->roots_[i + np].negation = i;
    rs->roots_[i + np].positive = false;
  }

  for (auto& r : rs->roots_) {
    r.height = height(r.simple);
    int norm = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm += r.simple[i] * g[i][j] * r.simple[j];
    r.norm = norm;
    r.is_long = !rs->simply_laced_ && norm > 2;
    r.tau_slot = r.is_long ? 1 : 0;
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int k = 0; k < n; ++k) c += r.simple[k] * rs->cartan_[k][i];
      r.weight[i] = c;
    }
  }
  for (int i = 0; i < 2 * np; ++i) rs->by_weight_.emplace(rs->roots_[i].weight, i);

  // Highest root and highest short root by height.
  for (int i = 0; i < np; ++i) {
    const auto& r = rs->roots_[i];
    if (rs->highest_root_ < 0 || r.height > rs->roots_[rs->highest_root_].height)
      rs->highest_root_ = i;
    if (!r.is_long &&
        (rs->highest_short_root_ < 0 || r.height > rs->roots_[rs->highest_short_root_].height))
      rs->highest_short_root_ = i;
  }
  const int phi_norm = rs->roots_[rs->highest_root_].norm;
  const int theta_norm = rs->roots_[rs->highest_short_root_].norm;
  rs->long_multiplier_ = spec.twist == Twist::Twisted ? phi_norm / theta_norm : 1;
  for (auto& r : rs->roots_) r.multiplier = r.is_long ? rs->long_multiplier_ : 1;

  rs->affine_simple_.resize(n + 1);
  const int top = spec.twist == Twist::Twisted ? rs->highest_short_root_ : rs->highest_root_;
  rs->affine_simple_[0] = rs->roots_[top].negation;
  for (int j = 1; j <= n; ++j) {
    IVec e{};
    e[j - 1] = 1;
    rs->affine_simple_[j] = static_cast<int>(
        std::find_if(rs->roots_.begin(), rs->roots_.end(),
                     [&](const RootEntry& r) { return r.simple == e; }) -
        rs->roots_.begin());
  }

  std::vector<int> simple_mult(n);
  for (int i = 0; i < n; ++i) simple_mult[i] = rs->roots_[rs->affine_simple_[i + 1]].multiplier;

  // a^ = m_a * 2a/<a,a>, in coordinates <a_i, a^> / m_i.
  for (auto& r : rs->roots_) {
    for (int i = 0; i < n; ++i) {
      int ip = 0;
      for (int k = 0; k < n; ++k) ip += g[i][k] * r.simple[k];
      Rational c(2 * r.multiplier * ip, r.norm * simple_mult[i]);
      c.canonicalize();
      r.hat[i] = static_cast<int32_t>(as_integer(c, "coweight coordinate"));
    }
  }

  rs->coweight_scale_.resize(n);
  for (int i = 0; i < n; ++i) {
    rs->coweight_scale_[i] = Rational(2 * simple_mult[i], g[i][i]);
    rs->coweight_scale_[i].canonicalize();
  }

  // Reflections on P, on P^ and on the root table.
  const int nr = 2 * np;
  rs->refl_w_.resize(nr);
  rs->refl_cw_.resize(nr);
  rs->refl_perm_.resize(nr);
  for (int b = 0; b < nr; ++b) {
    const auto& r = rs->roots_[b];
    IntMatrix mw = IntMatrix::identity(n);
    IntMatrix mc = IntMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
      Rational cw(r.simple[k] * g[k][k], r.norm);
      cw.canonicalize();
      const int64_t ck = as_integer(cw, "coroot coefficient");
      for (int i = 0; i < n; ++i) mw.at(i, k) -= static_cast<int32_t>(ck * r.weight[i]);
      Rational cc(r.simple[k] * simple_mult[k], r.multiplier);
      cc.canonicalize();
      const int64_t dk = as_integer(cc, "coweight pairing");
      for (int i = 0; i < n; ++i) mc.at(i, k) -= static_cast<int32_t>(dk * r.hat[i]);
    }
    rs->refl_w_[b] = mw;
    rs->refl_cw_[b] = mc;
    auto& perm = rs->refl_perm_[b];
    perm.resize(nr);
    for (int x = 0; x < nr; ++x) {
      auto it = rs->by_weight_.find(mw.apply(rs->roots_[x].weight));
      if (it == rs->by_weight_.end()) throw std::logic_error("reflection leaves the root system");
      perm[x] = it->second;
    }
  }

  rs->coxeter_.assign(n + 1, std::vector<int>(n + 1, 1));
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k) {
      if (j == k) continue;
      const auto& x = rs->roots_[rs->affine_simple_[j]];
      const auto& y = rs->roots_[rs->affine_simple_[k]];
      const Rational ip = rs->inner(x.simple, y.simple);
      Rational prod = 4 * ip * ip / (x.norm * y.norm);
      const int64_t p = as_integer(prod, "bond product");
      static constexpr int kOrders[] = {2, 3, 4, 6, kInfiniteOrder};
      if (p < 0 || p > 4) throw std::logic_error("invalid bond between affine simple roots");
      rs->coxeter_[j][k] = kOrders[p];
    }
  return rs;
}

std::optional<int> RootSystemData::find_root(const Weight& w) const {
  auto it = by_weight_.find(w);
  if (it == by_weight_.end()) return std::nullopt;
  return it->second;
}

Rational RootSystemData::inner(const IVec& x, const IVec& y) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (x[i] != 0 && y[j] != 0) s += gram_[i][j] * x[i] * y[j];
  return s;
}

int64_t RootSystemData::pair(int root, const Coweight& lambda) const {
  int64_t s = 0;
  const auto& r = roots_[root];
  for (int i = 0; i < rank_; ++i)
    s += static_cast<int64_t>(r.simple[i]) * roots_[affine_simple_[i + 1]].multiplier * lambda[i];
  return s;
}

int64_t RootSystemData::coroot_pair(const Weight& mu, int root) const {
  const auto& r = roots_[root];
  int64_t s = 0;
  for (int i = 0; i < rank_; ++i)
    s += static_cast<int64_t>(mu[i]) * r.simple[i] * roots_[affine_simple_[i + 1]].norm;
  if (s % r.norm != 0) throw std::logic_error("weight pairs non-integrally with a coroot");
  return s / r.norm;
}

bool RootSystemData::is_valid_affine(const AffineRoot& a) const {
  if (a.root < 0 || a.root >= num_roots()) return false;
  return a.level % roots_[a.root].multiplier == 0;
}

AffineRoot RootSystemData::affine_simple(int j) const {
  return AffineRoot{affine_simple_.at(j), j == 0 ? 1 : 0};
}

bool is_positive_affine(const RootSystemData& rs, const AffineRoot& a) {
  if (!rs.is_valid_affine(a))
    throw InvalidRootError("not an affine root: level " + std::to_string(a.level) +
                           " is not a multiple of the multiplier");
  if (a.level != 0) return a.level > 0;
  return rs.is_positive(a.root);
}

FiniteRootSubsystem parabolic_subsystem(const RootSystemData& rs, int k) {
  const int n = rs.rank();
  if (k < 0 || k > n) throw std::out_of_range("parabolic index out of range");
  FiniteRootSubsystem sub;
  sub.ambient = &rs;
  sub.removed_index = k;
  for (int j = 0; j <= n; ++j)
    if (j != k) sub.simple.push_back(rs.simple_root(j));

  auto closure = [&rs](const std::vector<int>& gens) {
    std::set<int> seen(gens.begin(), gens.end());
    std::deque<int> queue(gens.begin(), gens.end());
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int s : gens) {
        const int y = rs.reflection_permutation(s)[x];
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
    return std::vector<int>(seen.begin(), seen.end());
  };
  sub.roots = closure(sub.simple);

  // Connected components of the Dynkin graph of the simple basis.
  const int m = static_cast<int>(sub.simple.size());
  std::vector<int> label(m, -1);
  int ncomp = 0;
  for (int s = 0; s < m; ++s) {
    if (label[s] >= 0) continue;
    std::deque<int> queue{s};
    label[s] = ncomp;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < m; ++y) {
        if (label[y] >= 0) continue;
        if (rs.inner(rs.root(sub.simple[x]).simple, rs.root(sub.simple[y]).simple) != 0) {
          label[y] = ncomp;
          queue.push_back(y);
        }
      }
    }
    ++ncomp;
  }
  sub.components.resize(ncomp);
  sub.component_simple.resize(ncomp);
  for (int s = 0; s < m; ++s) sub.component_simple[label[s]].push_back(sub.simple[s]);
  for (int c = 0; c < ncomp; ++c) sub.components[c] = closure(sub.component_simple[c]);
  return sub;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
  const int n = static_cast<int>(m.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("singular system");
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  for (int i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

int64_t cartan_determinant(const RootSystemData& rs) {
  const int n = rs.rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = rs.root(rs.simple_root(i + 1)).hat[j];
  const Rational d = determinant(std::move(m));
  const Rational a = abs(d);
  return a.get_num().get_si();
}

}  // namespace daha
