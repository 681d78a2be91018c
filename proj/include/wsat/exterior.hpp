#pragma once

// Exact exterior algebra over a ground set of at most 64 ordered vertices.
// Basis elements e_S are indexed by bitmasks; vertex ids give the total order.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsat/bits.hpp"
#include "wsat/errors.hpp"
#include "wsat/hypergraph.hpp"
#include "wsat/rng.hpp"
#include "wsat/scalar.hpp"

namespace wsat {

/// α(S,T) = |{(s,t) ∈ S×T : t < s}|.
inline int transpositions(Mask s, Mask t) {
  int count = 0;
  for (Mask m = s; m; m &= m - 1) count += popcount(t & low_bits(lowest(m)));
  return count;
}

/// Sign of the permutation listing S then T, for disjoint S and T.
inline int sgn(Mask s, Mask t) {
  if (s & t) throw InputError("sgn: sets are not disjoint");
  return (transpositions(s, t) & 1) ? -1 : 1;
}

/// Memo of transposition counts and of the block-reordering parity c for a
/// size profile (u_1..u_d, t_1..t_d): sgn(U,T) = (-1)^c Π sgn(U_i,T_i).
class SignCache {
 public:
  int alpha(Mask s, Mask t) const {
    const std::pair<Mask, Mask> key{s, t};
    {
      std::shared_lock lock(mu_);
      if (auto it = alpha_.find(key); it != alpha_.end()) return it->second;
    }
    const int a = transpositions(s, t);
    std::unique_lock lock(mu_);
    alpha_.emplace(key, a);
    return a;
  }

  int sign(Mask s, Mask t) const {
    if (s & t) throw InputError("sgn: sets are not disjoint");
    return (alpha(s, t) & 1) ? -1 : 1;
  }

  /// Parity c for moving blocks (U_1..U_d,T_1..T_d) into (U_1,T_1,...,U_d,T_d):
  /// T_j jumps over U_i exactly when j < i.
  int profile_parity(const std::vector<int>& u, const std::vector<int>& t) const {
    if (u.size() != t.size()) throw InputError("profile_parity: size mismatch");
    std::vector<int> key(u);
    key.insert(key.end(), t.begin(), t.end());
    {
      std::shared_lock lock(mu_);
      if (auto it = parity_.find(key); it != parity_.end()) return it->second;
    }
    long c = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) c += static_cast<long>(u[i]) * t[j];
    const int parity = static_cast<int>(c & 1);
    std::unique_lock lock(mu_);
    parity_.emplace(std::move(key), parity);
    return parity;
  }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Mask, Mask>& p) const { return std::hash<Mask>()(p.first * 0x9e3779b97f4a7c15ULL ^ p.second); }
  };
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::pair<Mask, Mask>, int, PairHash> alpha_;
  mutable std::map<std::vector<int>, int> parity_;
};

/// A sparse element of ⋀V in the standard basis: sorted (subset, coefficient)
/// pairs with no stored zeros.
template <typename S>
class Multivector {
  using T = ScalarTraits<S>;

 public:
  using Term = std::pair<Mask, S>;

  Multivector() = default;
  explicit Multivector(int ground) : ground_(check_ground(ground)) {}

  static Multivector basis(int ground, Mask set, S coeff = T::one()) {
    Multivector m(ground);
    if (!contains(low_bits(ground), set)) throw InputError("basis element outside the ground set");
    if (!T::is_zero(coeff)) m.terms_.emplace_back(set, std::move(coeff));
    return m;
  }

  /// Accumulates coefficients; zeros are dropped on build().
  class Builder {
   public:
    explicit Builder(int ground) : ground_(ground) {}
    void add(Mask set, const S& c) {
      if (T::is_zero(c)) return;
      auto [it, inserted] = acc_.try_emplace(set, c);
      if (!inserted) it->second += c;
    }
    Multivector build() && {
      Multivector m(ground_);
      m.terms_.reserve(acc_.size());
      for (auto& [set, c] : acc_)
        if (!T::is_zero(c)) m.terms_.emplace_back(set, std::move(c));
      std::sort(m.terms_.begin(), m.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
      return m;
    }

   private:
    int ground_;
    std::unordered_map<Mask, S> acc_;
  };

  int ground() const { return ground_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nnz() const { return terms_.size(); }

  S coeff(Mask set) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), set, [](const Term& t, Mask m) { return t.first < m; });
    return (it != terms_.end() && it->first == set) ? it->second : T::zero();
  }

  /// The subsets carrying nonzero coefficients, ascending.
  std::vector<Mask> support() const {
    std::vector<Mask> out;
    for (const auto& [m, c] : terms_) out.push_back(m);
    return out;
  }

  /// The homogeneous component in ⋀^k.
  Multivector grade(int k) const {
    Multivector m(ground_);
    for (const auto& t : terms_)
      if (popcount(t.first) == k) m.terms_.push_back(t);
    return m;
  }

  /// Degree if homogeneous and nonzero.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    const int k = popcount(terms_.front().first);
    for (const auto& t : terms_)
      if (popcount(t.first) != k) return std::nullopt;
    return k;
  }

  Multivector operator+(const Multivector& o) const { return combine(o, T::one()); }
  Multivector operator-(const Multivector& o) const { return combine(o, -T::one()); }
  Multivector operator-() const { return scaled(-T::one()); }

  Multivector scaled(const S& c) const {
    Multivector m(ground_);
    if (T::is_zero(c)) return m;
    for (const auto& [set, x] : terms_) m.terms_.emplace_back(set, x * c);
    return m;
  }

  bool operator==(const Multivector& o) const { return ground_ == o.ground_ && terms_ == o.terms_; }

  void require_same_ground(const Multivector& o) const {
    if (ground_ != o.ground_) throw InputError("multivectors live over different ground sets");
  }

 private:
  static int check_ground(int g) {
    if (g < 0 || g > kMaxVertices) throw InputError("ground set size must be in [0,64]");
    return g;
  }

  Multivector combine(const Multivector& o, const S& sign) const {
    require_same_ground(o);
    Multivector m(ground_);
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        m.terms_.push_back(*a++);
      } else if (a == terms_.end() || b->first < a->first) {
        m.terms_.emplace_back(b->first, b->second * sign);
        ++b;
      } else {
        S c = a->second + b->second * sign;
        if (!T::is_zero(c)) m.terms_.emplace_back(a->first, std::move(c));
        ++a, ++b;
      }
    }
    return m;
  }

  int ground_ = 0;
  std::vector<Term> terms_;
};

/// Bilinear extension of e_S ∧ e_T = sgn(S,T) e_{S∪T} (zero on overlap).
template <typename S>
Multivector<S> wedge(const Multivector<S>& x, const Multivector<S>& y) {
  x.require_same_ground(y);
  typename Multivector<S>::Builder b(x.ground());
  for (const auto& [sx, cx] : x.terms())
    for (const auto& [sy, cy] : y.terms()) {
      if (sx & sy) continue;
      S c = cx * cy;
      b.add(sx | sy, (transpositions(sx, sy) & 1) ? S(-c) : c);
    }
  return std::move(b).build();
}

/// Standard inner product: Σ_S x_S y_S.
template <typename S>
S inner(const Multivector<S>& x, const Multivector<S>& y) {
  x.require_same_ground(y);
  S acc = ScalarTraits<S>::zero();
  auto a = x.terms().begin(), b = y.terms().begin();
  while (a != x.terms().end() && b != y.terms().end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      acc += a->second * b->second;
      ++a, ++b;
    }
  }
  return acc;
}

/// Left interior product g⌞f = Σ_S ⟨e_S ∧ g, f⟩ e_S, evaluated termwise:
/// e_G ⌞ e_F = sgn(F\G, G) e_{F\G} when G ⊆ F, else 0.
template <typename S>
Multivector<S> left_interior(const Multivector<S>& g, const Multivector<S>& f) {
  g.require_same_ground(f);
  typename Multivector<S>::Builder b(g.ground());
  for (const auto& [sg, cg] : g.terms())
    for (const auto& [sf, cf] : f.terms()) {
      if (!contains(sf, sg)) continue;
      const Mask rest = sf & ~sg;
      S c = cg * cf;
      b.add(rest, (transpositions(rest, sg) & 1) ? S(-c) : c);
    }
  return std::move(b).build();
}

/// Transition matrix A from (e_v) to (f_v): f_v = Σ_w a_{vw} e_w. Block-diagonal
/// with respect to a partition when built as a colorful basis.
template <typename S>
class BasisChange {
  using T = ScalarTraits<S>;

 public:
  BasisChange() = default;
  BasisChange(PartitionedVertexSet blocks, std::vector<std::vector<S>> a, std::uint64_t seed)
      : blocks_(std::move(blocks)), a_(std::move(a)), seed_(seed) {
    const int n = size();
    if (blocks_.all() != low_bits(n)) throw InputError("basis blocks must cover vertices 0..n-1");
    for (const auto& row : a_)
      if (static_cast<int>(row.size()) != n) throw InputError("transition matrix must be square");
    rows_.reserve(n);
    for (int v = 0; v < n; ++v) {
      typename Multivector<S>::Builder b(n);
      for (int w = 0; w < n; ++w) b.add(bit(w), a_[v][w]);
      rows_.push_back(std::move(b).build());
    }
  }

  static BasisChange identity(const PartitionedVertexSet& blocks) {
    const int n = blocks.size();
    std::vector<std::vector<S>> a(n, std::vector<S>(n, T::zero()));
    for (int v = 0; v < n; ++v) a[v][v] = T::one();
    return BasisChange(blocks, std::move(a), 0);
  }

  int size() const { return static_cast<int>(a_.size()); }
  const PartitionedVertexSet& blocks() const { return blocks_; }
  const S& entry(Vertex v, Vertex w) const { return a_.at(v).at(w); }
  const std::vector<std::vector<S>>& matrix() const { return a_; }
  std::uint64_t seed() const { return seed_; }

  /// f_v in the standard basis.
  const Multivector<S>& row(Vertex v) const { return rows_.at(v); }

  /// f_S = f_{s_1} ∧ ... ∧ f_{s_k} in the standard basis; coefficients are the
  /// minors det A_{S|T}.
  Multivector<S> expand_f(Mask set) const {
    if (!contains(low_bits(size()), set)) throw InputError("expand_f: subset outside the ground set");
    Multivector<S> acc = Multivector<S>::basis(size(), 0);
    for (Vertex v : vertices_of(set)) acc = wedge(acc, rows_[v]);
    return acc;
  }

  /// A Aᵗ = I exactly.
  bool is_orthonormal() const {
    const int n = size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        S dot = T::zero();
        for (int k = 0; k < n; ++k) dot += a_[i][k] * a_[j][k];
        if (dot != (i == j ? T::one() : T::zero())) return false;
      }
    return true;
  }

  /// True iff a_{vw} = 0 whenever v and w lie in different blocks.
  bool is_block_diagonal() const {
    for (int v = 0; v < size(); ++v)
      for (int w = 0; w < size(); ++w)
        if (blocks_.class_of(v) != blocks_.class_of(w) && !T::is_zero(a_[v][w])) return false;
    return true;
  }

 private:
  PartitionedVertexSet blocks_;
  std::vector<std::vector<S>> a_;
  std::vector<Multivector<S>> rows_;
  std::uint64_t seed_ = 0;
};

namespace detail {

// Inverse by Gauss-Jordan; nullopt when singular.
template <typename S>
std::optional<std::vector<std::vector<S>>> invert(std::vector<std::vector<S>> m) {
  using T = ScalarTraits<S>;
  const std::size_t n = m.size();
  std::vector<std::vector<S>> inv(n, std::vector<S>(n, T::zero()));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = T::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && T::is_zero(m[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const S scale = T::one() / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || T::is_zero(m[i][col])) continue;
      const S factor = m[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= factor * m[col][j];
        inv[i][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

// Cayley transform (I - K)(I + K)^{-1} of a seeded random skew-symmetric K.
template <typename S>
std::optional<std::vector<std::vector<S>>> cayley_block(int m, Rng& rng) {
  using T = ScalarTraits<S>;
  std::vector<std::vector<S>> k(m, std::vector<S>(m, T::zero()));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      k[i][j] = T::random_entry(rng);
      k[j][i] = -k[i][j];
    }
  std::vector<std::vector<S>> plus(m, std::vector<S>(m)), minus(m, std::vector<S>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const S id = i == j ? T::one() : T::zero();
      plus[i][j] = id + k[i][j];
      minus[i][j] = id - k[i][j];
    }
  auto inv = invert(std::move(plus));
  if (!inv) return std::nullopt;
  std::vector<std::vector<S>> out(m, std::vector<S>(m, T::zero()));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l) out[i][j] += minus[i][l] * (*inv)[l][j];
  return out;
}

}  // namespace detail

/// A block-diagonal orthonormal basis change, one Cayley-transform block per
/// class. Genericity of the blocks is not verified here; callers check the
/// minors they rely on and resample with the next seed on failure.
template <typename S>
BasisChange<S> colorful_generic_orthonormal_basis(const PartitionedVertexSet& blocks, std::uint64_t seed, int max_attempts = 64) {
  const int n = blocks.size();
  if (blocks.all() != low_bits(n)) throw InputError("basis blocks must cover vertices 0..n-1");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::vector<S>> a(n, std::vector<S>(n, ScalarTraits<S>::zero()));
    bool ok = true;
    for (int b = 0; b < blocks.num_classes() && ok; ++b) {
      const auto& part = blocks.part(b);
      Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(attempt)}));
      auto block = detail::cayley_block<S>(static_cast<int>(part.size()), rng);
      if (!block) {
        ok = false;
        break;
      }
      for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = 0; j < part.size(); ++j) a[part[i]][part[j]] = (*block)[i][j];
    }
    if (ok) return BasisChange<S>(blocks, std::move(a), seed);
  }
  throw std::runtime_error("colorful_generic_orthonormal_basis: I + K singular for every attempt (seed " + std::to_string(seed) + ")");
}

/// The same basis change read modulo p.
inline BasisChange<Fp61> reduce_mod_p(const BasisChange<Rational>& b) {
  std::vector<std::vector<Fp61>> a;
  for (const auto& row : b.matrix()) {
    a.emplace_back();
    for (const auto& x : row) a.back().push_back(to_fp61(x));
  }
  return BasisChange<Fp61>(b.blocks(), std::move(a), b.seed());
}

/// f_T ⌞ f_S for an orthonormal basis: sgn(S\T, T) f_{S\T} if T ⊆ S, else 0.
template <typename S>
Multivector<S> lip_closed_form(Mask t, Mask s, const BasisChange<S>& basis) {
  if (!contains(s, t)) return Multivector<S>(basis.size());
  const Mask rest = s & ~t;
  Multivector<S> out = basis.expand_f(rest);
  return sgn(rest, t) < 0 ? -out : out;
}

struct FactorizationVerdict {
  bool holds = false;  // LHS = ±RHS with the expected sign
  int realized = 0;    // +1 or -1 when LHS = ±RHS and nonzero, 0 when both vanish or they differ
  int expected = 1;    // (-1)^c from the size profile
};

/// Checks (∧ f_i) ⌞ (∧ h_i) = (-1)^c ∧ (f_i ⌞ h_i) for f_i ∈ ⋀^{t_i}V_i and
/// h_i ∈ ⋀^{s_i}V_i with t_i ≤ s_i.
template <typename S>
FactorizationVerdict colorful_factorization_check(const std::vector<Multivector<S>>& f, const std::vector<Multivector<S>>& h,
                                                  const PartitionedVertexSet& parts, const SignCache& cache) {
  const int d = parts.num_classes();
  if (static_cast<int>(f.size()) != d || static_cast<int>(h.size()) != d) throw InputError("need one f_i and one h_i per class");
  std::vector<int> u(d), t(d);
  auto grade_in_block = [&](const Multivector<S>& x, int i) {
    int k = -1;
    for (const auto& [set, c] : x.terms()) {
      if (!contains(parts.part_mask(i), set)) throw InputError("factor has support outside its class");
      if (k >= 0 && popcount(set) != k) throw InputError("factor is not homogeneous");
      k = popcount(set);
    }
    return k;
  };
  const int ground = parts.size();
  Multivector<S> lhs_f = Multivector<S>::basis(ground, 0), lhs_h = lhs_f, rhs = lhs_f;
  for (int i = 0; i < d; ++i) {
    const int ti = grade_in_block(f[i], i), si = grade_in_block(h[i], i);
    if (ti > si && ti >= 0 && si >= 0) throw InputError("grade violation: t_i > s_i");
    t[i] = std::max(ti, 0);
    u[i] = std::max(si, 0) - t[i];
    lhs_f = wedge(lhs_f, f[i]);
    lhs_h = wedge(lhs_h, h[i]);
    rhs = wedge(rhs, left_interior(f[i], h[i]));
  }
  const Multivector<S> lhs = left_interior(lhs_f, lhs_h);
  FactorizationVerdict v;
  v.expected = cache.profile_parity(u, t) ? -1 : 1;
  if (lhs == rhs && !lhs.is_zero()) v.realized = 1;
  else if (lhs == -rhs && !lhs.is_zero()) v.realized = -1;
  v.holds = v.expected > 0 ? lhs == rhs : lhs == -rhs;
  return v;
}

}  // namespace wsat
