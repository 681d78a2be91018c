#pragma once

// Exact scalar backends: GMP rationals (reference) and the prime field
// F_p with p = 2^61 - 1 (fast path).

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <string>

#include "wsat/errors.hpp"
#include "wsat/rng.hpp"

namespace wsat {

using Rational = mpq_class;
using BigInt = mpz_class;

class Fp61 {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  constexpr Fp61() = default;
  constexpr Fp61(std::int64_t x) : v_(reduce_signed(x)) {}  // NOLINT(google-explicit-constructor)

  static constexpr Fp61 from_raw(std::uint64_t raw) {
    Fp61 f;
    f.v_ = raw % kModulus;
    return f;
  }

  constexpr std::uint64_t value() const { return v_; }

  constexpr Fp61& operator+=(Fp61 o) {
    v_ += o.v_;
    if (v_ >= kModulus) v_ -= kModulus;
    return *this;
  }
  constexpr Fp61& operator-=(Fp61 o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + kModulus - o.v_;
    return *this;
  }
  constexpr Fp61& operator*=(Fp61 o) {
    const unsigned __int128 z = static_cast<unsigned __int128>(v_) * o.v_;
    std::uint64_t w = static_cast<std::uint64_t>(z & kModulus) + static_cast<std::uint64_t>(z >> 61);
    if (w >= kModulus) w -= kModulus;
    v_ = w;
    return *this;
  }
  Fp61& operator/=(Fp61 o) { return *this *= o.inverse(); }

  friend constexpr Fp61 operator+(Fp61 a, Fp61 b) { return a += b; }
  friend constexpr Fp61 operator-(Fp61 a, Fp61 b) { return a -= b; }
  friend constexpr Fp61 operator*(Fp61 a, Fp61 b) { return a *= b; }
  friend Fp61 operator/(Fp61 a, Fp61 b) { return a /= b; }
  constexpr Fp61 operator-() const { return Fp61() - *this; }
  friend constexpr bool operator==(Fp61 a, Fp61 b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Fp61 a, Fp61 b) { return a.v_ != b.v_; }

  constexpr Fp61 pow(std::uint64_t e) const {
    Fp61 base = *this, acc = 1;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Fp61 inverse() const {
    if (v_ == 0) throw std::domain_error("Fp61: inverse of zero");
    return pow(kModulus - 2);
  }

  // Symmetric representative in (-p/2, p/2], printed as a signed decimal.
  std::string to_string() const {
    if (v_ > kModulus / 2) return "-" + std::to_string(kModulus - v_);
    return std::to_string(v_);
  }

 private:
  static constexpr std::uint64_t reduce_signed(std::int64_t x) {
    std::int64_t r = x % static_cast<std::int64_t>(kModulus);
    if (r < 0) r += static_cast<std::int64_t>(kModulus);
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t v_ = 0;
};

/// Image of a rational in the prime field; the denominator must be a unit.
inline Fp61 to_fp61(const Rational& x) {
  auto reduce = [](const BigInt& z) {
    BigInt m = z % BigInt(static_cast<unsigned long>(Fp61::kModulus));
    if (m < 0) m += BigInt(static_cast<unsigned long>(Fp61::kModulus));
    return Fp61::from_raw(m.get_ui());
  };
  return reduce(x.get_num()) / reduce(x.get_den());
}

enum class Backend { Rational, PrimeField };

inline std::string to_string(Backend b) { return b == Backend::Rational ? "rat" : "fp"; }

inline Backend parse_backend(const std::string& s) {
  if (s == "rat" || s == "rational") return Backend::Rational;
  if (s == "fp" || s == "prime" || s == "prime-field") return Backend::PrimeField;
  throw InputError("unknown backend '" + s + "' (expected rat|fp)");
}

/// Default backend from WSAT_BACKEND, falling back to the prime field.
inline Backend default_backend() {
  if (const char* env = std::getenv("WSAT_BACKEND"); env && *env) return parse_backend(env);
  return Backend::PrimeField;
}

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr Backend backend = Backend::Rational;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(std::int64_t x) { return Rational(static_cast<long>(x)); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string to_string(const Rational& x) { return x.get_str(); }
  // Skew entries for basis generation. Small integers hit ±1 too often, which
  // zeroes entries of 2x2 Cayley blocks.
  static Rational random_entry(Rng& rng) {
    const long num = static_cast<long>(uniform_in(rng, 1, 97)) * (uniform_in(rng, 0, 1) ? 1 : -1);
    Rational x(num, static_cast<long>(uniform_in(rng, 1, 89)));
    x.canonicalize();
    return x;
  }
};

template <>
struct ScalarTraits<Fp61> {
  static constexpr Backend backend = Backend::PrimeField;
  static Fp61 zero() { return Fp61(0); }
  static Fp61 one() { return Fp61(1); }
  static Fp61 from_int(std::int64_t x) { return Fp61(x); }
  static bool is_zero(const Fp61& x) { return x.value() == 0; }
  static std::string to_string(const Fp61& x) { return x.to_string(); }
  static Fp61 random_entry(Rng& rng) { return Fp61::from_raw(uniform_below(rng, Fp61::kModulus)); }
};

}  // namespace wsat
