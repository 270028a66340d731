#pragma once

// Integer factorization for reporting K-group orders: trial division,
// then Brent's variant of Pollard rho, with Miller-Rabin certification
// (deterministic below 2^64, seeded random bases above).

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "integer.hpp"
#include "numtheory.hpp"

namespace kcyc {

inline constexpr std::uint64_t kDefaultSeed = 0x6b637963ULL;

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors) : f_(std::move(factors)) {
    std::sort(f_.begin(), f_.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  }

  const std::vector<PrimePower>& factors() const& { return f_; }
  // by value on temporaries so `for (x : factorize(n).factors())` is safe
  std::vector<PrimePower> factors() && { return std::move(f_); }
  bool empty() const { return f_.empty(); }

  Integer value() const {
    Integer v = 1;
    for (const auto& f : f_) v *= power(f.prime, f.exponent);
    return v;
  }

  unsigned exponent_of(const Integer& p) const {
    for (const auto& f : f_) {
      if (f.prime == p) return f.exponent;
    }
    return 0;
  }

  /// Ascending primes with caret exponents joined by a middle dot,
  /// e.g. "2^9·3^2·487"; "1" for the empty factorization.
  std::string to_string() const {
    if (f_.empty()) return "1";
    std::string out;
    for (const auto& f : f_) {
      if (!out.empty()) out += "·";
      out += f.prime.get_str();
      if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
    }
    return out;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> f_;
};

namespace detail {

inline bool fits_u64(const Integer& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

inline u64 to_u64(const Integer& n) {
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

inline Integer from_u64(u64 v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

inline const std::vector<i64>& small_primes() {
  static const std::vector<i64> primes = [] {
    constexpr i64 limit = 1 << 16;
    std::vector<char> composite(limit + 1, 0);
    std::vector<i64> out;
    for (i64 i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (i64 j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return out;
  }();
  return primes;
}

inline u64 rho_u64(u64 n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  for (;;) {
    const u64 c = rng() % (n - 1) + 1;
    u64 y = rng() % n, x = 0, q = 1, g = 1, ys = 0;
    const u64 m = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline Integer random_below(const Integer& n, std::mt19937_64& rng) {
  // n > 0; uniform enough for base and seed selection
  Integer acc = 0;
  const std::size_t words = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 2;
  for (std::size_t i = 0; i < words; ++i) acc = (acc << 64) + from_u64(rng());
  return Integer(acc % n);
}

inline Integer rho_big(const Integer& n, std::mt19937_64& rng) {
  for (;;) {
    const Integer c = random_below(Integer(n - 1), rng) + 1;
    Integer y = random_below(n, rng), x, q = 1, g = 1, ys, diff;
    const unsigned long m = 128;
    for (unsigned long r = 1; g == 1; r <<= 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          diff = abs(x - y);
          q = (q * diff) % n;
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(Integer(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace detail

/// Primality: exact below 2^64; above, Miller-Rabin with base 2 plus
/// 24 bases drawn from a generator seeded with `seed`.
inline bool is_probable_prime(const Integer& n, std::uint64_t seed = kDefaultSeed) {
  if (n < 2) return false;
  if (detail::fits_u64(n)) return is_prime_u64(detail::to_u64(n));
  for (i64 q : detail::small_primes()) {
    if (q > 1000) break;
    if (divides(Integer(static_cast<long>(q)), n)) return false;
  }
  const Integer n_minus_1 = n - 1;
  Integer d = n_minus_1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 25; ++round) {
    const Integer a = round == 0 ? Integer(2) : Integer(detail::random_below(Integer(n - 3), rng) + 2);
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Full prime factorization of n >= 1.
inline Factorization factorize(const Integer& n, std::uint64_t seed = kDefaultSeed) {
  require(n >= 1, "factorize: argument must be positive");
  std::vector<Integer> primes;
  Integer rest = n;
  for (i64 q : detail::small_primes()) {
    const Integer Q(static_cast<long>(q));
    if (Q * Q > rest) break;
    while (divides(Q, rest)) {
      primes.push_back(Q);
      rest /= Q;
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<Integer> stack;
  if (rest > 1) stack.push_back(rest);
  while (!stack.empty()) {
    Integer m = std::move(stack.back());
    stack.pop_back();
    if (is_probable_prime(m, seed)) {
      primes.push_back(m);
      continue;
    }
    Integer d = detail::fits_u64(m) ? detail::from_u64(detail::rho_u64(detail::to_u64(m), rng))
                                    : detail::rho_big(m, rng);
    stack.push_back(Integer(m / d));
    stack.push_back(std::move(d));
  }
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> grouped;
  for (const auto& p : primes) {
    if (!grouped.empty() && grouped.back().prime == p) {
      ++grouped.back().exponent;
    } else {
      grouped.push_back({p, 1});
    }
  }
  return Factorization(std::move(grouped));
}

}  // namespace kcyc
