#pragma once

// Bitmask subsets over a ground set of at most 64 vertices.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wsat {

using Vertex = int;
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool contains(Mask outer, Mask inner) { return (outer & inner) == inner; }

constexpr Vertex lowest(Mask m) { return std::countr_zero(m); }

constexpr Vertex highest(Mask m) { return 63 - std::countl_zero(m); }

inline Mask mask_of(const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex id out of range [0,64)");
    m |= bit(v);
  }
  return m;
}

inline std::vector<Vertex> vertices_of(Mask m) {
  std::vector<Vertex> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

constexpr Mask low_bits(int k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

// Next mask with the same popcount in increasing numeric order (Gosper's hack).
// Returns 0 once the sequence runs past `limit_bits` bits.
constexpr Mask next_combination(Mask m, int limit_bits) {
  const Mask c = m & (~m + 1);
  const Mask r = m + c;
  if (r == 0) return 0;
  const Mask next = (((r ^ m) >> 2) / c) | r;
  if (limit_bits < 64 && (next >> limit_bits) != 0) return 0;
  return next;
}

// Calls f(sub) for every sub ⊆ universe with |sub| = k, in increasing colex order.
template <typename F>
void for_each_subset_of_size(Mask universe, int k, F&& f) {
  const std::vector<Vertex> elems = vertices_of(universe);
  const int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  for (Mask sel = low_bits(k); sel != 0; sel = next_combination(sel, n)) {
    Mask sub = 0;
    for (Mask s = sel; s; s &= s - 1) sub |= bit(elems[lowest(s)]);
    f(sub);
  }
}

// Calls f(sub) for every sub ⊆ universe (including empty and universe itself).
template <typename F>
void for_each_subset(Mask universe, F&& f) {
  Mask sub = 0;
  while (true) {
    f(sub);
    if (sub == universe) break;
    sub = (sub - universe) & universe;
  }
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

}  // namespace wsat
