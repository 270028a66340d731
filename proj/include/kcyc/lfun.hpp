#pragma once

// Generalized Bernoulli numbers B_{n,chi}, L(chi, -k), zeta_F(-k) through
// the factorization over characters, and pi-adic valuations of B_{n,chi}.

#include <set>
#include <vector>

#include "characters.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "numtheory.hpp"
#include "polynomial.hpp"
#include "powersum.hpp"

namespace kcyc {

/// B_{n,chi} = numerator(zeta_ord) / denominator, with the numerator
/// reduced modulo Phi_ord. Works for characters of any order.
struct GeneralizedBernoulli {
  i64 order = 1;
  IntPolynomial numerator;
  Integer denominator = 1;

  bool is_zero() const { return numerator.is_zero(); }
};

namespace detail {

// acc[t] = sum over units a in [1, f] with chi(a) = zeta_ord^t of
// sum_i C(n,i) (D B_i) a^{n-i} f^i; then B_{n,chi} = (sum_t acc[t] zeta^t) / (f D).
inline std::vector<Integer> bernoulli_character_sums(const DirichletCharacter& chi, long n, Integer& denominator) {
  require(chi.is_primitive(), "generalized_bernoulli: character must be primitive");
  require(n >= 2, "generalized_bernoulli: n must be >= 2");
  const i64 f = chi.modulus();
  const Integer D = BernoulliCache::global().denominator_lcm(n);
  const Integer F(static_cast<long>(f));
  // coefficient of a^j is C(n, n-j) D B_{n-j} f^{n-j}
  std::vector<Integer> poly(static_cast<std::size_t>(n + 1));
  for (long j = 0; j <= n; ++j) {
    const long i = n - j;
    const Rational scaled = bernoulli_number(i) * D;
    ensure(is_integral(scaled), "bernoulli denominator lcm does not clear B_i");
    poly[static_cast<std::size_t>(j)] = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)) *
                                        Integer(scaled.get_num()) * power(F, static_cast<unsigned long>(i));
  }
  std::vector<Integer> acc(static_cast<std::size_t>(chi.order()), Integer(0));
  Integer value;
  chi.group().for_each_unit([&](i64 a, const std::vector<i64>& logs) {
    const Integer A(static_cast<long>(a));
    value = poly.back();
    for (std::size_t j = poly.size() - 1; j-- > 0;) {
      value *= A;
      value += poly[j];
    }
    acc[static_cast<std::size_t>(chi.value_exponent(logs))] += value;
  });
  denominator = F * D;
  return acc;
}

}  // namespace detail

/// B_{n,chi} for a primitive character of any order, n >= 2.
inline GeneralizedBernoulli generalized_bernoulli_any(const DirichletCharacter& chi, long n) {
  GeneralizedBernoulli out;
  out.order = chi.order();
  auto acc = detail::bernoulli_character_sums(chi, n, out.denominator);
  out.numerator = reduce_mod(IntPolynomial(std::move(acc)), cyclotomic_polynomial_of_order(out.order));
  Integer g = out.denominator;
  for (const auto& c : out.numerator.coeffs()) g = gcd(g, c);
  if (g != 1) {
    std::vector<Integer> c = out.numerator.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    out.numerator = IntPolynomial(std::move(c));
    mpz_divexact(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

/// B_{n,chi} in Q(zeta_{p^N}) for a primitive chi whose order divides p^N.
inline CyclotomicRational generalized_bernoulli(const DirichletCharacter& chi, long n, const CyclotomicLevel& level) {
  require(level.root_order() % chi.order() == 0, "generalized_bernoulli: character order must divide p^N");
  Integer denominator;
  auto acc = detail::bernoulli_character_sums(chi, n, denominator);
  const i64 stride = level.root_order() / chi.order();
  std::vector<Integer> coeffs(static_cast<std::size_t>(level.root_order()), Integer(0));
  for (std::size_t t = 0; t < acc.size(); ++t) coeffs[t * static_cast<std::size_t>(stride)] = std::move(acc[t]);
  return CyclotomicRational(CyclotomicElement::from_polynomial(level, std::move(coeffs)), denominator);
}

/// The smallest level containing the values of a character of odd
/// prime-power order p^b > 1 (level p^1 for the trivial character needs p
/// from the caller).
inline CyclotomicLevel character_level(const DirichletCharacter& chi) {
  const auto f = factor_small(chi.order());
  require(f.size() == 1 && f[0].first != 2, "character_level: order must be a power of an odd prime");
  return CyclotomicLevel(f[0].first, f[0].second);
}

/// L(chi, -k) = -B_{k+1,chi}/(k+1), k odd >= 1.
inline CyclotomicRational l_value_negative(const DirichletCharacter& chi, long k, const CyclotomicLevel& level) {
  require(k >= 1 && k % 2 == 1, "l_value_negative: k must be odd and >= 1");
  return generalized_bernoulli(chi, k + 1, level) * make_rational(Integer(-1), Integer(k + 1));
}

/// v_pi(B_{k+1,chi}) at level p^N, pi = 1 - zeta_{p^N}; nullopt when the
/// value is zero.
inline Valuation char_bernoulli_pi_valuation(const DirichletCharacter& chi, long k, const CyclotomicLevel& level) {
  require(k >= 1, "char_bernoulli_pi_valuation: k must be >= 1");
  return pi_valuation(generalized_bernoulli(chi, k + 1, level));
}

inline Valuation char_bernoulli_pi_valuation(const DirichletCharacter& chi, long k, int N) {
  return char_bernoulli_pi_valuation(chi, k, CyclotomicLevel(character_level(chi).prime(), N));
}

/// Partition of a Galois-stable character set into orbits
/// {chi^a : gcd(a, ord chi) = 1}; each orbit starts with its smallest member.
inline std::vector<std::vector<DirichletCharacter>> galois_orbits(const std::vector<DirichletCharacter>& chars) {
  std::set<DirichletCharacter> pending(chars.begin(), chars.end());
  std::vector<std::vector<DirichletCharacter>> orbits;
  while (!pending.empty()) {
    const DirichletCharacter chi = *pending.begin();
    std::vector<DirichletCharacter> orbit;
    for (i64 a = 1; a <= chi.order(); ++a) {
      if (std::gcd(a, chi.order()) != 1) continue;
      auto conj = chi.pow(a);
      ensure(pending.erase(conj) == 1, "galois_orbits: character set is not Galois-stable");
      orbit.push_back(std::move(conj));
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

/// prod over the orbit of chi of B_{n,chi^a}, i.e. the norm of B_{n,chi}
/// from Q(zeta_ord) to Q.
inline Rational orbit_bernoulli_product(const DirichletCharacter& chi, long n) {
  const auto fac = factor_small(chi.order());
  if (fac.size() == 1 && fac[0].first != 2) {
    const CyclotomicLevel level(fac[0].first, fac[0].second);
    const CyclotomicRational b = generalized_bernoulli(chi, n, level);
    CyclotomicRational product = b;
    for (i64 a = 2; a < chi.order(); ++a) {
      if (a % level.prime() != 0) product = product * galois_apply(b, a);
    }
    return rational_part(product);
  }
  const GeneralizedBernoulli b = generalized_bernoulli_any(chi, n);
  if (b.order == 1) return make_rational(b.numerator.coeff(0), b.denominator);
  const IntPolynomial phi = cyclotomic_polynomial_of_order(b.order);
  return make_rational(quotient_norm(b.numerator, phi),
                       power(b.denominator, static_cast<unsigned long>(phi.degree())));
}

/// zeta_F(-k) = prod_{chi in X_F} L(chi, -k) for a totally real field.
inline Rational zeta_value_negative(const AbelianField& field, long k) {
  require(k >= 1 && k % 2 == 1, "zeta_value_negative: k must be odd and >= 1");
  require(field.is_totally_real(), "zeta_value_negative: field must be totally real");
  Rational product = power(make_rational(Integer(-1), Integer(k + 1)), static_cast<unsigned long>(field.degree()));
  for (const auto& orbit : galois_orbits(field.characters())) product *= orbit_bernoulli_product(orbit.front(), k + 1);
  return product;
}

inline Rational zeta_value_negative(const FieldSpec& spec, long k) { return zeta_value_negative(AbelianField(spec), k); }

/// sum over nontrivial chi of v_pi(B_{k+1,chi}) / phi(p^N). The ratio
/// does not depend on N, so the smallest level holding every character
/// value is used. Conjugate characters share a valuation, so one member
/// per orbit is evaluated.
inline Rational product_valuation(const AbelianField& field, i64 p, long k) {
  require(is_odd_prime(p), "product_valuation: p must be an odd prime");
  require(k >= 1 && k % 2 == 1, "product_valuation: k must be odd and >= 1");
  require(p >= k + 2, "product_valuation: requires p >= k + 2");
  int N = 1;
  for (const auto& chi : field.characters()) {
    const int b = valuation(chi.order(), p);
    require(chi.order() == ipow(p, static_cast<unsigned>(b)), "product_valuation: character group must be a p-group");
    N = std::max(N, b);
  }
  const CyclotomicLevel level(p, N);
  Rational total = 0;
  for (const auto& orbit : galois_orbits(field.characters())) {
    if (orbit.front().is_trivial()) continue;
    const Valuation v = char_bernoulli_pi_valuation(orbit.front(), k, level);
    ensure(v.has_value(), "product_valuation: B_{k+1,chi} vanishes for an even character");
    total += Rational(*v * static_cast<long>(orbit.size()));
  }
  total /= Rational(level.degree());
  total.canonicalize();
  return total;
}

inline Rational product_valuation(const FieldSpec& spec, i64 p, long k) {
  return product_valuation(AbelianField(spec), p, k);
}

}  // namespace kcyc
