#pragma once

// Irreducible reduced affine root systems R with reduced gradient R0.
//
// Vectors of V are written in the basis of simple roots; the inner product is
// the Gram matrix of that basis, normalized so that short roots have squared
// length 2.  Weights are stored in the basis of fundamental weights w_i and
// elements of the coweight lattice P^ in the basis of the w^_i, defined by
// <a_j, w^_i> = m_{a_j} delta_ij.  Both are integer vectors.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace daha {

using Rational = mpq_class;

inline constexpr int kMaxRank = 8;

/// Integer coordinate vector; entries at positions >= rank are zero.
using IVec = std::array<int32_t, kMaxRank>;
/// Element of P in the fundamental weight basis.
using Weight = IVec;
/// Element of P^ in the fundamental coweight basis.
using Coweight = IVec;

/// Order of s_j s_k when it is infinite (only for rank one).
inline constexpr int kInfiniteOrder = 0;

enum class Family { A, B, C, D, E, F, G };
enum class Twist { Untwisted, Twisted };

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;
  Twist twist = Twist::Untwisted;

  bool operator==(const RootSystemSpec&) const = default;
};

char family_letter(Family f);
Family parse_family(const std::string& s);
Twist parse_twist(const std::string& s);
std::string to_string(Twist t);
/// "A2", "C2 twisted", ...
std::string to_string(const RootSystemSpec& spec);

class RootSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidRootError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square integer matrix acting on coordinate vectors, at most kMaxRank wide.
struct IntMatrix {
  int n = 0;
  std::array<int32_t, kMaxRank * kMaxRank> a{};

  static IntMatrix identity(int n);
  int32_t& at(int i, int j) { return a[i * kMaxRank + j]; }
  int32_t at(int i, int j) const { return a[i * kMaxRank + j]; }
  IVec apply(const IVec& v) const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix&) const = default;
};

struct RootEntry {
  IVec simple;        // coordinates in the simple-root basis
  Weight weight;      // coordinates in the fundamental weight basis
  Coweight hat;       // a^ = m_a a^vee, in the fundamental coweight basis
  int negation = -1;  // index of -a
  int height = 0;
  int norm = 2;       // <a, a>
  int multiplier = 1; // m_a
  bool positive = true;
  bool is_long = false;
  int tau_slot = 0;   // 0: short orbit (or simply laced), 1: long orbit
};

/// An affine root a = gradient + level * c.
struct AffineRoot {
  int root = 0;       // index into the root table of R0
  int64_t level = 0;

  bool operator==(const AffineRoot&) const = default;
};

class RootSystemData;

/// Finite root subsystem R_k generated by the gradients of a_j, j != k.
struct FiniteRootSubsystem {
  const RootSystemData* ambient = nullptr;
  int removed_index = 0;
  std::vector<int> roots;                       // root table indices, sorted
  std::vector<int> simple;                      // gradients a'_j, j != k
  std::vector<std::vector<int>> components;     // roots of each irreducible component
  std::vector<std::vector<int>> component_simple;

  int rank() const { return static_cast<int>(simple.size()); }
  bool contains(int root) const;
};

class RootSystemData {
 public:
  static std::shared_ptr<const RootSystemData> build(const RootSystemSpec& spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return rank_; }
  bool simply_laced() const { return simply_laced_; }
  bool twisted() const { return spec_.twist == Twist::Twisted; }

  const std::vector<RootEntry>& roots() const { return roots_; }
  const RootEntry& root(int i) const { return roots_[i]; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  bool is_positive(int i) const { return roots_[i].positive; }

  /// Gradient of a_j; index 0 gives alpha_0.
  int simple_root(int j) const { return affine_simple_[j]; }
  int highest_root() const { return highest_root_; }
  int highest_short_root() const { return highest_short_root_; }
  int long_multiplier() const { return long_multiplier_; }

  std::optional<int> find_root(const Weight& w) const;

  const Rational& gram(int i, int j) const { return gram_[i][j]; }
  int cartan(int i, int j) const { return cartan_[i][j]; }  // <a_i, a_j^vee>
  /// Inner product of two vectors given in simple-root coordinates.
  Rational inner(const IVec& x, const IVec& y) const;

  /// <alpha, lambda^> for a root and an element of P^; lies in m_alpha Z.
  int64_t pair(int root, const Coweight& lambda) const;
  /// <mu, alpha^vee> for a weight and a root.
  int64_t coroot_pair(const Weight& mu, int root) const;

  /// Reflection s_alpha acting on P and on P^ (in their bases) and on the root table.
  const IntMatrix& reflection_on_weights(int root) const { return refl_w_[root]; }
  const IntMatrix& reflection_on_coweights(int root) const { return refl_cw_[root]; }
  const std::vector<int>& reflection_permutation(int root) const { return refl_perm_[root]; }

  /// w^_i as an element of V expressed in the weight basis: w^_i = scale_i * w_i.
  const Rational& coweight_scale(int i) const { return coweight_scale_[i]; }

  /// Order of s_{a_j} s_{a_k} for j, k in 0..n; kInfiniteOrder for rank one (0,1).
  int coxeter_order(int j, int k) const { return coxeter_[j][k]; }

  bool is_valid_affine(const AffineRoot& a) const;
  AffineRoot affine_simple(int j) const;

 private:
  RootSystemData() = default;

  RootSystemSpec spec_;
  int rank_ = 0;
  bool simply_laced_ = true;
  int long_multiplier_ = 1;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootEntry> roots_;
  int num_positive_ = 0;
  std::map<Weight, int> by_weight_;
  std::vector<int> affine_simple_;
  int highest_root_ = -1;
  int highest_short_root_ = -1;
  std::vector<Rational> coweight_scale_;
  std::vector<IntMatrix> refl_w_;
  std::vector<IntMatrix> refl_cw_;
  std::vector<std::vector<int>> refl_perm_;
  std::vector<std::vector<int>> coxeter_;
};

/// Affine positivity: level > 0, or level == 0 and positive gradient.
/// Throws InvalidRootError when the level is not a multiple of m_alpha.
bool is_positive_affine(const RootSystemData& rs, const AffineRoot& a);

/// R_k for k in 0..n, with its decomposition into orthogonal irreducible parts.
FiniteRootSubsystem parabolic_subsystem(const RootSystemData& rs, int k);

/// Index [P^ : Q^], the determinant of the Cartan matrix of R^0.
int64_t cartan_determinant(const RootSystemData& rs);

/// Exact determinant of a square rational matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Solve M x = b exactly, with M square and invertible.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> b);

}  // namespace daha
