#pragma once

// Exact scalars. Integer and Rational are GMP's C++ classes; mpq_class is
// kept canonical (reduced, positive denominator) by every helper here.

#include <gmpxx.h>

#include <optional>
#include <string>

#include "errors.hpp"
#include "numtheory.hpp"

namespace kcyc {

using Integer = mpz_class;
using Rational = mpq_class;

/// A p-adic or pi-adic valuation. std::nullopt stands for +infinity
/// (the valuation of zero).
using Valuation = std::optional<long>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer to_integer(i64 v) { return Integer(static_cast<long>(v)); }

/// Largest v with p^v | n. Zero has infinite valuation.
inline Valuation p_valuation(const Integer& n, unsigned long p) {
  if (n == 0) return std::nullopt;
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), Integer(p).get_mpz_t()));
}

inline Valuation p_valuation(const Rational& q, unsigned long p) {
  if (q == 0) return std::nullopt;
  return *p_valuation(q.get_num(), p) - *p_valuation(q.get_den(), p);
}

inline Integer power(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Rational power(const Rational& base, unsigned long exp) {
  return make_rational(power(Integer(base.get_num()), exp), power(Integer(base.get_den()), exp));
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

/// Canonical "num/den" form, used for every serialized rational.
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Human form: "num/den", or just "num" when integral.
inline std::string to_string(const Rational& q) {
  return is_integral(q) ? q.get_num().get_str() : to_fraction_string(q);
}

}  // namespace kcyc
