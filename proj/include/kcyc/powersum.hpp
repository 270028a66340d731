#pragma once

// Bernoulli numbers and polynomials, the power-sum polynomial
// S_n(x) = (B_{n+1}(x) - B_{n+1})/(n+1), its denominator d_n, and the
// integer quotient f_n(x) with d_n S_n(x) = (x - 1) f_n(x).

#include <mutex>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "numtheory.hpp"
#include "polynomial.hpp"

namespace kcyc {

/// Memoized B_0, B_1, ... (B_1 = -1/2). Populate-once: entries are only
/// appended, under a lock, and handed out by value.
class BernoulliCache {
 public:
  Rational get(long n) {
    require(n >= 0, "bernoulli_number: index must be nonnegative");
    std::lock_guard lock(mutex_);
    extend(n);
    return values_[static_cast<std::size_t>(n)];
  }

  /// lcm of the denominators of B_0..B_n.
  Integer denominator_lcm(long n) {
    require(n >= 0, "bernoulli denominator lcm: index must be nonnegative");
    std::lock_guard lock(mutex_);
    extend(n);
    Integer d = 1;
    for (long i = 0; i <= n; ++i) d = lcm(d, Integer(values_[static_cast<std::size_t>(i)].get_den()));
    return d;
  }

  static BernoulliCache& global() {
    static BernoulliCache cache;
    return cache;
  }

 private:
  // sum_{i=0}^{n} C(n+1, i) B_i = 0
  void extend(long n) {
    if (values_.empty()) values_.emplace_back(1);
    for (long m = static_cast<long>(values_.size()); m <= n; ++m) {
      if (m >= 3 && m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      Rational acc = 0;
      for (long i = 0; i < m; ++i) acc += binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(i)) * values_[static_cast<std::size_t>(i)];
      Rational b = -acc / (m + 1);
      b.canonicalize();
      values_.push_back(b);
    }
  }

  std::mutex mutex_;
  std::vector<Rational> values_;
};

inline Rational bernoulli_number(long n) { return BernoulliCache::global().get(n); }

/// B_n(x) = sum_i C(n, i) B_i x^{n-i}
inline RatPolynomial bernoulli_polynomial(long n) {
  require(n >= 0, "bernoulli_polynomial: degree must be nonnegative");
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(n - i)] = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)) * bernoulli_number(i);
  }
  return RatPolynomial(std::move(c));
}

/// S_n(x); S_n(m) = sum_{a=0}^{m-1} a^n for every positive integer m.
inline RatPolynomial s_polynomial(long n) {
  require(n >= 0, "s_polynomial: n must be nonnegative");
  RatPolynomial b = bernoulli_polynomial(n + 1) - RatPolynomial::constant(bernoulli_number(n + 1));
  return b * make_rational(Integer(1), Integer(n + 1));
}

/// d_n: the least positive integer with d_n S_n(x) in Z[x] (d_0 = 1).
inline Integer powersum_denominator(long n) { return denominator_lcm(s_polynomial(n)); }

/// f_n(x) with d_n S_n(x) = (x - 1) f_n(x). The division is checked exact.
inline IntPolynomial f_polynomial(long n) {
  require(n >= 1, "f_polynomial: n must be >= 1");
  const IntPolynomial scaled = to_integer_polynomial(s_polynomial(n), powersum_denominator(n));
  auto [quotient, remainder] = divmod(scaled, IntPolynomial::linear_root(Integer(1)));
  ensure(remainder.is_zero(), "f_polynomial: x - 1 does not divide d_n S_n(x)");
  return quotient;
}

/// prod of primes q with (q - 1) | n, for even n >= 2: the denominator
/// of B_n by von Staudt-Clausen.
inline Integer vsc_denominator(long n) {
  require(n >= 2 && n % 2 == 0, "vsc_denominator: n must be even and >= 2");
  Integer d = 1;
  for (i64 t : divisors(n)) {
    if (is_prime(t + 1)) d *= static_cast<long>(t + 1);
  }
  return d;
}

/// Literal sum_{a=0}^{m-1} a^n; an oracle for s_polynomial.
inline Integer brute_power_sum(long m, long n) {
  require(m >= 1 && n >= 0, "brute_power_sum: need m >= 1 and n >= 0");
  Integer total = 0;
  for (long a = 0; a < m; ++a) total += power(Integer(a), static_cast<unsigned long>(n));
  return total;
}

/// All of S_n, d_n, f_n and the prime bound M_n for one n >= 1.
struct PowerSumData {
  long n = 0;
  RatPolynomial s;
  Integer d;
  IntPolynomial f;
  /// (n+2)/2 for even n, (n+2)/3 for odd n
  Rational prime_bound;
};

inline PowerSumData power_sum_data(long n) {
  PowerSumData out;
  out.n = n;
  out.s = s_polynomial(n);
  out.d = powersum_denominator(n);
  out.f = f_polynomial(n);
  out.prime_bound = make_rational(Integer(n + 2), Integer(n % 2 == 0 ? 2 : 3));
  return out;
}

}  // namespace kcyc
