#pragma once

// Closed-form values, all in arbitrary precision.

#include <string>
#include <vector>

#include "wsat/bits.hpp"
#include "wsat/errors.hpp"
#include "wsat/scalar.hpp"

namespace wsat {

struct FormulaTerm {
  std::vector<int> classes;  // I, 0-based
  BigInt product;
};

struct FormulaResult {
  BigInt value;
  BigInt first_sum;   // Σ_{|I|=q} Π n_i
  BigInt second_sum;  // Σ_{|I|<=q} Π (n_i - r_i)
  std::vector<FormulaTerm> first_terms;
  std::vector<FormulaTerm> second_terms;
};

inline void check_partite_params(int q, const std::vector<int>& n, const std::vector<int>& r) {
  const int d = static_cast<int>(n.size());
  if (q < 2) throw InputError("need q >= 2");
  if (d < q) throw InputError("need d >= q (d = number of classes)");
  if (r.size() != n.size()) throw InputError("n and r must have the same length");
  for (int i = 0; i < d; ++i) {
    if (r[i] < 1) throw InputError("need r_i >= 1");
    if (r[i] > n[i]) throw InputError("need r_i <= n_i");
  }
  if (d > 62) throw InputError("too many classes");
}

/// Σ_{I ∈ C([d],q)} Π_{i∈I} n_i − Σ_{I ⊆ [d], |I| ≤ q} Π_{i∈I} (n_i − r_i).
inline FormulaResult mwsat_formula(int q, const std::vector<int>& n, const std::vector<int>& r) {
  check_partite_params(q, n, r);
  const int d = static_cast<int>(n.size());
  FormulaResult out;
  for (int k = 0; k <= q; ++k) {
    for_each_subset_of_size(low_bits(d), k, [&](Mask set) {
      FormulaTerm second{vertices_of(set), 1};
      for (int i : second.classes) second.product *= n[i] - r[i];
      out.second_sum += second.product;
      out.second_terms.push_back(second);
      if (k == q) {
        FormulaTerm first{vertices_of(set), 1};
        for (int i : first.classes) first.product *= n[i];
        out.first_sum += first.product;
        out.first_terms.push_back(std::move(first));
      }
    });
  }
  out.value = out.first_sum - out.second_sum;
  return out;
}

inline BigInt balanced_corollary(int q, const std::vector<int>& n, int r) {
  return mwsat_formula(q, n, std::vector<int>(n.size(), r)).value;
}

inline BigInt binomial_big(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// Weak saturation number of K^q_r in K^q_n: C(n,q) − C(n−r+q,q).
inline BigInt lovasz_clique(int n, int q, int r) {
  if (q < 1 || r < q || n < r) throw InputError("need n >= r >= q >= 1");
  return binomial_big(n, q) - binomial_big(n - r + q, q);
}

/// Leading term d (r1−1) n^{d−1} of the partite clique-host value; reference only.
inline BigInt ms_reference(int d, int n, int r1) {
  if (d < 2 || r1 < 1 || n < 0) throw InputError("need d >= 2, r1 >= 1, n >= 0");
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(d - 1));
  return BigInt(d) * (r1 - 1) * p;
}

/// (r1−1)/(d−1)!
inline Rational asymptotic_coefficient(int d, int r1) {
  if (d < 2 || r1 < 1) throw InputError("need d >= 2, r1 >= 1");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(d - 1));
  Rational out(BigInt(r1 - 1), f);
  out.canonicalize();
  return out;
}

}  // namespace wsat
