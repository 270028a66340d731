#pragma once

// Machine-word number theory for the small parameters (moduli, primes,
// exponents) that index the big-number computations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace kcyc {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Nonnegative residue of a modulo m (m > 0).
inline i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline i64 inverse_mod(i64 a, i64 m) {
  i64 old_r = mod_floor(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  ensure(old_r == 1, "inverse_mod: arguments are not coprime");
  return mod_floor(old_s, m);
}

inline i64 ipow(i64 base, unsigned exp) {
  i64 result = 1;
  while (exp-- != 0) result *= base;
  return result;
}

/// Largest v with p^v | n; n != 0, p >= 2.
inline int valuation(i64 n, i64 p) {
  int v = 0;
  if (n == 0) return v;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline bool is_prime(i64 n) { return n > 1 && is_prime_u64(static_cast<u64>(n)); }

inline bool is_odd_prime(i64 n) { return n > 2 && is_prime(n); }

/// Trial-division factorization of a small positive integer, ascending primes.
inline std::vector<std::pair<i64, int>> factor_small(i64 n) {
  require(n >= 1, "factor_small: argument must be positive");
  std::vector<std::pair<i64, int>> out;
  for (i64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q != 0) continue;
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline i64 euler_phi(i64 n) {
  i64 phi = n;
  for (auto [q, e] : factor_small(n)) phi = phi / q * (q - 1);
  return phi;
}

inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> out{1};
  for (auto [q, e] : factor_small(n)) {
    const std::size_t count = out.size();
    i64 power = 1;
    for (int i = 1; i <= e; ++i) {
      power *= q;
      for (std::size_t j = 0; j < count; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Multiplicative order of a modulo m, given the factorization of a
/// multiple `group_order` of it.
inline i64 multiplicative_order(i64 a, i64 m, i64 group_order) {
  i64 order = group_order;
  for (auto [q, e] : factor_small(group_order)) {
    for (int i = 0; i < e; ++i) {
      if (powmod(static_cast<u64>(a), static_cast<u64>(order / q), static_cast<u64>(m)) != 1) break;
      order /= q;
    }
  }
  return order;
}

/// Smallest primitive root modulo q^e for an odd prime q.
inline i64 smallest_primitive_root(i64 q, int e) {
  const i64 modulus = ipow(q, static_cast<unsigned>(e));
  const i64 phi = modulus / q * (q - 1);
  const auto factors = factor_small(phi);
  for (i64 g = 2; g < modulus; ++g) {
    if (g % q == 0) continue;
    bool primitive = true;
    for (auto [r, unused] : factors) {
      if (powmod(static_cast<u64>(g), static_cast<u64>(phi / r), static_cast<u64>(modulus)) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw computation_error("no primitive root found");
}

}  // namespace kcyc
