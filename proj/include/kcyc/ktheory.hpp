#pragma once

// Orders of K_{2k} of rings of integers of totally real abelian fields,
// lower bounds for their p-parts, divisibility verdicts, and the density
// of primes l = 1 mod p^2 among primes l = 1 mod p.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "factorize.hpp"
#include "integer.hpp"
#include "lfun.hpp"
#include "numtheory.hpp"

namespace kcyc {

namespace detail {

// Every unit a mod M fixed by X_F (chi(a) = 1 for chi of conductor | M)
// satisfies a^j = 1 mod M.
inline bool image_killed_by(const AbelianField& field, i64 M, i64 j) {
  auto group = make_unit_group(M);
  std::vector<DirichletCharacter> local;
  for (const auto& chi : field.characters()) {
    if (M % chi.conductor() == 0 && !chi.is_trivial()) local.push_back(transport(chi, group));
  }
  bool ok = true;
  group->for_each_unit([&](i64 a, const std::vector<i64>& logs) {
    if (!ok) return;
    for (const auto& chi : local) {
      if (chi.value_exponent(logs) != 0) return;
    }
    if (powmod(static_cast<u64>(a), static_cast<u64>(j), static_cast<u64>(M)) != 1 % static_cast<u64>(M)) ok = false;
  });
  return ok;
}

}  // namespace detail

/// w_j(F): the largest w such that Gal(Qbar/F) acts trivially on
/// mu_w^{(x) j}, computed prime by prime from the image of the Galois
/// group in (Z/q^nu)^*.
inline Integer w_invariant(const AbelianField& field, long j) {
  require(j >= 1, "w_invariant: j must be >= 1");
  require(field.is_totally_real(), "w_invariant: field must be totally real");
  Integer w = 1;
  const i64 bound = static_cast<i64>(j) * field.degree() + 1;
  for (i64 q = 2; q <= std::max<i64>(bound, 2); ++q) {
    if (!is_prime(q)) continue;
    i64 M = 1;
    while (M <= kMaxCharacterModulus / q && detail::image_killed_by(field, M * q, j)) {
      M *= q;
      w *= static_cast<long>(q);
    }
  }
  return w;
}

inline Integer w_invariant(const FieldSpec& spec, long j) { return w_invariant(AbelianField(spec), j); }

struct KOrderReport {
  std::string field;
  long k = 0;
  long degree = 0;
  Integer order;
  Factorization factorization;
  Integer w;
  Rational zeta_value;
};

/// #K_{2k}(O_F) = (-1)^r w_{k+1}(F) zeta_F(-k) for k = 1 mod 4 and
/// w_{k+1}(F) zeta_F(-k) / 2^r for k = 3 mod 4, r = [F:Q].
/// Order and its ingredients without factoring; the factorization stays empty.
inline KOrderReport k_order_unfactored(const AbelianField& field, long k) {
  require(k >= 1 && k % 2 == 1, "k_order: k must be odd and >= 1");
  require(field.is_totally_real(), "k_order: field must be totally real");
  KOrderReport out;
  out.field = field.name();
  out.k = k;
  out.degree = static_cast<long>(field.degree());
  out.w = w_invariant(field, k + 1);
  out.zeta_value = zeta_value_negative(field, k);
  Rational value = out.zeta_value * out.w;
  if (k % 4 == 1) {
    if (out.degree % 2 == 1) value = -value;
  } else {
    value /= Rational(power(Integer(2), static_cast<unsigned long>(out.degree)));
  }
  value.canonicalize();
  ensure(is_integral(value), "k_order: order formula produced a non-integer " + to_string(value));
  ensure(value > 0, "k_order: order formula produced a non-positive value " + to_string(value));
  out.order = value.get_num();
  return out;
}

inline KOrderReport k_order(const AbelianField& field, long k, std::uint64_t seed = kDefaultSeed) {
  KOrderReport out = k_order_unfactored(field, k);
  out.factorization = factorize(out.order, seed);
  return out;
}

inline KOrderReport k_order_unfactored(const FieldSpec& spec, long k) { return k_order_unfactored(AbelianField(spec), k); }

inline KOrderReport k_order(const FieldSpec& spec, long k, std::uint64_t seed = kDefaultSeed) {
  return k_order(AbelianField(spec), k, seed);
}

/// s_j = #{primes l | m with v_p(l - 1) = j}, j >= 1.
struct SProfile {
  i64 p = 3;
  i64 m = 1;
  std::map<int, int> s;
  int theta = 0;

  int s_at(int j) const {
    auto it = s.find(j);
    return it == s.end() ? 0 : it->second;
  }
};

inline SProfile s_profile(i64 m, i64 p) {
  require(m > 1, "s_profile: m must be > 1");
  require(is_odd_prime(p), "s_profile: p must be an odd prime");
  SProfile out;
  out.p = p;
  out.m = m;
  for (auto [l, e] : factor_small(m)) {
    const int j = valuation(l - 1, p);
    if (j == 0) continue;
    ++out.s[j];
    out.theta = std::max(out.theta, j);
  }
  return out;
}

/// Number of characters of exact order p^j in the dual of
/// prod_i (Z/p^i)^{s_i}: p^{sum min(i,j) s_i} - p^{sum min(i,j-1) s_i}.
inline Integer ghat_count(const SProfile& profile, int j) {
  require(j >= 1, "ghat_count: j must be >= 1");
  unsigned long upper = 0, lower = 0;
  for (auto [i, s] : profile.s) {
    upper += static_cast<unsigned long>(std::min(i, j) * s);
    lower += static_cast<unsigned long>(std::min(i, j - 1) * s);
  }
  const Integer P(static_cast<long>(profile.p));
  return power(P, upper) - power(P, lower);
}

/// Guaranteed exponent of p in #K_{2k} of the ring of integers of
/// Q(zeta_m)^+ (and of Q(zeta_m)):
///   ceil( (G_1 - p^{delta s_1} + delta)/(p-1) + sum_{j=2}^{theta} G_j/(p^{j-1}(p-1)) )
/// with G_j = ghat_count(j) and delta = 1 exactly when p = k + 2.
inline Integer lower_bound_exponent(i64 p, long k, i64 m) {
  require(is_odd_prime(p), "lower_bound_exponent: p must be an odd prime");
  require(k >= 1 && k % 2 == 1, "lower_bound_exponent: k must be odd and >= 1");
  require(p >= k + 2, "lower_bound_exponent: requires p >= k + 2");
  const SProfile profile = s_profile(m, p);
  if (profile.theta == 0) return 0;
  const long delta = p == k + 2 ? 1 : 0;
  const Integer P(static_cast<long>(p));
  Rational total(ghat_count(profile, 1) - power(P, static_cast<unsigned long>(delta * profile.s_at(1))) + delta,
                 Integer(p - 1));
  total.canonicalize();
  for (int j = 2; j <= profile.theta; ++j) {
    total += Rational(ghat_count(profile, j), Integer(power(P, static_cast<unsigned long>(j - 1)) * (p - 1)));
    total.canonicalize();
  }
  return ceil(total);
}

enum class FieldVariant { plus, full };

inline std::string to_string(FieldVariant v) { return v == FieldVariant::plus ? "plus" : "full"; }

/// [Q(zeta_m)^+(zeta_p) : Q(zeta_m)^+] (plus) or [Q(zeta_m, zeta_p) : Q(zeta_m)] (full).
inline i64 degree_adjoin_zeta(FieldVariant variant, i64 m, i64 p) {
  require(m > 1, "degree_adjoin_zeta: m must be > 1");
  require(is_odd_prime(p), "degree_adjoin_zeta: p must be an odd prime");
  if (m % p != 0) return p - 1;
  return variant == FieldVariant::plus ? 2 : 1;
}

/// For the degree-p subfield F of Q(zeta_l): p | #K_{2(p-2)}(O_F) iff v_p(l - 1) >= 2.
inline bool browkin_divisible(i64 p, i64 l) {
  require(is_odd_prime(p), "browkin_divisible: p must be an odd prime");
  require(is_prime(l) && l % p == 1, "browkin_divisible: l must be a prime = 1 mod p");
  return valuation(l - 1, p) >= 2;
}

struct Verdict {
  enum class Kind { guaranteed_divisible, guaranteed_not_divisible, unknown };

  Kind kind = Kind::unknown;
  Integer exponent_lower_bound = 0;
  /// Which criteria fired, in the order they were applied.
  std::vector<std::string> justification;
};

inline std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::guaranteed_divisible:
      return "GuaranteedDivisible";
    case Verdict::Kind::guaranteed_not_divisible:
      return "GuaranteedNotDivisible";
    case Verdict::Kind::unknown:
      break;
  }
  return "Unknown";
}

inline constexpr const char* kTagBernoulliBound = "character-bernoulli-lower-bound";
inline constexpr const char* kTagPeriodicity = "p-rank-periodicity";
inline constexpr const char* kTagDivisibilityCriterion = "prime-divisor-criterion";
inline constexpr const char* kTagPrimeConductor = "prime-conductor-criterion";

/// Does p divide #K_{2k} of Z[zeta_m + zeta_m^{-1}] (plus) or Z[zeta_m] (full)?
inline Verdict divisibility_verdict(i64 p, i64 m, long k, FieldVariant variant) {
  require(is_odd_prime(p), "divisibility_verdict: p must be an odd prime");
  require(m > 1, "divisibility_verdict: m must be > 1");
  require(k >= 1 && k % 2 == 1, "divisibility_verdict: k must be odd and >= 1");
  Verdict v;
  if (k <= p - 2) {
    const Integer bound = lower_bound_exponent(p, k, m);
    if (bound >= 1) {
      v.kind = Verdict::Kind::guaranteed_divisible;
      v.exponent_lower_bound = bound;
      v.justification = {kTagBernoulliBound};
      return v;
    }
  }
  const i64 d = degree_adjoin_zeta(variant, m, p);
  const auto primes = factor_small(m);
  const bool has_1_mod_p = std::any_of(primes.begin(), primes.end(), [&](auto f) { return f.first % p == 1; });
  const bool has_1_mod_p2 = std::any_of(primes.begin(), primes.end(), [&](auto f) { return f.first % (p * p) == 1; });
  for (long k0 = 1; k0 <= p - 2; k0 += 2) {
    if (mod_floor(k - k0, d) != 0) continue;
    const bool fires = k0 < p - 2 ? has_1_mod_p : has_1_mod_p2;
    if (!fires) continue;
    v.kind = Verdict::Kind::guaranteed_divisible;
    v.exponent_lower_bound = 1;
    v.justification = {kTagDivisibilityCriterion, kTagPeriodicity};
    return v;
  }
  // Q(zeta_l)^+ is the degree-p subfield of Q(zeta_l) when (l - 1)/2 = p.
  if (variant == FieldVariant::plus) {
    const i64 l = m % 4 == 2 ? m / 2 : m;
    if (is_prime(l) && (l - 1) / 2 == p && mod_floor(k - (p - 2), p - 1) == 0 && valuation(l - 1, p) == 1) {
      v.kind = Verdict::Kind::guaranteed_not_divisible;
      v.justification = {kTagPrimeConductor, kTagPeriodicity};
      return v;
    }
  }
  return v;
}

struct DensityResult {
  i64 n_p = 0;
  i64 n_p2 = 0;
  Rational ratio;
};

/// Counts of primes l <= x with l = 1 mod p and with l = 1 mod p^2.
inline DensityResult browkin_density(i64 p, i64 x) {
  require(is_odd_prime(p), "browkin_density: p must be an odd prime");
  require(x >= p * p + 1, "browkin_density: x must be >= p^2 + 1");
  require(x <= (i64{1} << 32), "browkin_density: x too large");
  std::vector<bool> composite(static_cast<std::size_t>(x + 1), false);
  DensityResult out;
  for (i64 i = 2; i <= x; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    for (i64 j = i * i; j <= x; j += i) composite[static_cast<std::size_t>(j)] = true;
    if (i % p == 1) ++out.n_p;
    if (i % (p * p) == 1) ++out.n_p2;
  }
  out.ratio = out.n_p == 0 ? Rational(0) : make_rational(Integer(static_cast<long>(out.n_p2)), Integer(static_cast<long>(out.n_p)));
  return out;
}

}  // namespace kcyc
