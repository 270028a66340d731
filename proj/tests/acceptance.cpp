// One PASS/FAIL line per acceptance criterion. Exit status is the number
// of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kcyc/kcyc.hpp"

using namespace kcyc;

namespace {

// Tolerance for the prime-density criterion; every other check is exact.
constexpr double kDensityTolerance = 0.05;

struct Expected {
  long m;
  long k;
  const char* order;
  const char* factorization;
};

const std::vector<Expected> kPublishedOrders = {
    {7, 1, "8", "2^3"},
    {7, 3, "79", "79"},
    {7, 5, "59144", "2^3·7393"},
    {7, 7, "142490119", "142490119"},
    {7, 9, "913161859868", "2^2·228290464967"},
    {7, 11, "2101941875088322867", "691·10903·278995143079"},
    {11, 1, "160", "2^5·5"},
    {11, 3, "847811", "71·11941"},
    {11, 5, "407495402731360", "2^5·5·521·4888380551"},
    {11, 7, "3543010400763352360091", "13721·2520121·102462575851"},
    {13, 1, "1216", "2^6·19"},
    {13, 3, "316792259", "7·29·103·109·139"},
    {13, 5, "99222088525421989696", "2^6·73·109·307·2341·2953·91807"},
    {19, 1, "2244096", "2^9·3^2·487"},
    {19, 3, "540700931767472649", "3^2·61·67·883·16647509341"},
    {23, 1, "837613568", "2^11·11·37181"},
    {23, 3, "6952891386341432645005057", "11·1607·120263419·3270569157439"},
    {31, 1, "580922038681600", "2^17·5^2·7·11·2302381"},
};

std::vector<DirichletCharacter> primitive_of_order(i64 m, i64 order) {
  std::vector<DirichletCharacter> out;
  for (auto& c : all_characters(m)) {
    if (c.order() == order && c.is_primitive()) out.push_back(std::move(c));
  }
  return out;
}

// Each check returns an empty string on success, otherwise the reason.
std::string published_orders() {
  std::ostringstream problems;
  for (const auto& e : kPublishedOrders) {
    const KOrderReport r = k_order(RealCyclotomic{e.m}, e.k);
    if (to_string(r.order) != e.order || r.factorization.to_string() != e.factorization) {
      problems << "m=" << e.m << " k=" << e.k << " got " << r.order << " = " << r.factorization.to_string() << "; ";
    }
  }
  return problems.str();
}

std::string k2_of_integers() {
  const Integer order = k_order(RealCyclotomic{1}, 1).order;
  return order == 2 ? "" : "got " + to_string(order);
}

std::string prime_conductor_equivalence() {
  std::ostringstream problems;
  int checked = 0;
  for (i64 p : {3, 5, 7}) {
    for (i64 l = p + 1; l <= 500; l += p) {
      if (!is_prime(l)) continue;
      const AbelianField f(PrimeCyclicSubfield{l, p});
      const bool criterion = browkin_divisible(p, l);
      const bool order_divisible = divides(Integer(p), k_order_unfactored(f, p - 2).order);
      bool valuation_positive = true;
      for (const auto& chi : f.characters()) {
        if (chi.is_trivial()) continue;
        valuation_positive = valuation_positive && *char_bernoulli_pi_valuation(chi, p - 2, 1) >= 1;
      }
      if (criterion != order_divisible || criterion != valuation_positive) problems << "p=" << p << " l=" << l << "; ";
      ++checked;
    }
  }
  if (checked == 0) problems << "no primes checked";
  return problems.str();
}

std::string lower_bound_validation() {
  std::ostringstream problems;
  auto actual_v = [](long m, long k, unsigned long p) { return *p_valuation(k_order_unfactored(RealCyclotomic{m}, k).order, p); };
  if (lower_bound_exponent(3, 1, 19) != 2 || actual_v(19, 1, 3) != 2) problems << "p=3 m=19; ";
  if (lower_bound_exponent(5, 1, 11) != 1 || actual_v(11, 1, 5) != 1) problems << "p=5 m=11 k=1; ";
  if (lower_bound_exponent(5, 3, 11) != 0 || actual_v(11, 3, 5) != 0) problems << "p=5 m=11 k=3; ";
  const AbelianField f29(MaxPSubextension{29, 7});
  if (lower_bound_exponent(7, 3, 29) != 1 || f29.degree() != 7 || ceil(product_valuation(f29, 7, 3)) < 1) {
    problems << "p=7 m=29; ";
  }
  const AbelianField f133(MaxPSubextension{133, 3});
  if (lower_bound_exponent(3, 1, 133) != 6 || f133.degree() != 27 || ceil(product_valuation(f133, 3, 1)) < 6) {
    problems << "p=3 m=133; ";
  }
  return problems.str();
}

std::string closed_form_bounds() {
  std::ostringstream problems;
  // 7^{1+7+7^2} and 5^{1+5+5^2+5^3+5^4}
  if (lower_bound_exponent(7, 1, 29 * 43 * 71) != 1 + 7 + 49) problems << "7-part; ";
  if (lower_bound_exponent(5, 1, 11L * 31 * 41 * 61 * 71) != 1 + 5 + 25 + 125 + 625) problems << "5-part; ";
  const AbelianField f(MaxPSubextension{29 * 43, 7});
  const Integer bound = lower_bound_exponent(7, 1, 29 * 43);
  if (f.degree() != 49 || bound != 8 || ceil(product_valuation(f, 7, 1)) < bound) problems << "subfield check m=29*43; ";
  return problems.str();
}

std::string character_congruences() {
  std::ostringstream problems;
  for (i64 l : {11, 31, 41}) {
    for (const auto& chi : primitive_of_order(l, 5)) {
      if (*char_bernoulli_pi_valuation(chi, 1, 1) < 1) problems << chi.label() << "; ";
    }
  }
  for (i64 l : {19, 37}) {
    for (const auto& chi : primitive_of_order(l, 3)) {
      if (*char_bernoulli_pi_valuation(chi, 1, 1) < 1 || *char_bernoulli_pi_valuation(chi, 1, 2) < 3) {
        problems << chi.label() << "; ";
      }
    }
  }
  return problems.str();
}

bool squarefree_with_primes_at_most(const Integer& n, const Rational& bound) {
  for (const auto& pp : factorize(n).factors()) {
    if (pp.exponent > 1 || Rational(pp.prime) > bound) return false;
  }
  return true;
}

std::string power_sum_suites() {
  std::ostringstream problems;
  for (long n = 1; n <= 100; ++n) {
    const PowerSumData data = power_sum_data(n);
    for (long m = 1; m <= 50 && n <= 60; ++m) {
      if (data.s(Rational(m)) != Rational(brute_power_sum(m, n))) problems << "S_" << n << "(" << m << "); ";
    }
    if (n % 2 == 0) {
      const Integer den(bernoulli_number(n).get_den());
      if (den != vsc_denominator(n) || !squarefree_with_primes_at_most(den, Rational(n + 1))) problems << "B_" << n << "; ";
    }
    const Integer n1(n + 1);
    if (!divides(n1, data.d) || !squarefree_with_primes_at_most(Integer(data.d / n1), data.prime_bound)) {
      problems << "d_" << n << "; ";
    }
    for (const auto& pp : factorize(data.d).factors()) {
      if (pp.prime > n + 1) problems << "prime of d_" << n << "; ";
    }
    if (is_prime(n + 1) && p_valuation(data.d, static_cast<unsigned long>(n + 1)) != 1) problems << "v(d_" << n << "); ";
    const Integer f1 = data.f(Integer(1));
    // f_n(1) = d_n B_n(1); equals d_n B_n except at n = 1 where B_1(1) = -B_1
    if (Rational(f1) != Rational(data.d) * bernoulli_polynomial(n)(Rational(1)) ||
        (n >= 2 && Rational(f1) != Rational(data.d) * bernoulli_number(n))) {
      problems << "f_" << n << "(1); ";
    }
    if (n >= 3 && n % 2 == 1 && !divmod(data.f, IntPolynomial::linear_root(Integer(1))).second.is_zero()) {
      problems << "(x-1)|f_" << n << "; ";
    }
    if (is_odd_prime(n + 1) && divides(n1, f1)) problems << "(n+1)|f_" << n << "(1); ";
  }
  return problems.str();
}

std::string prime_density() {
  std::ostringstream problems;
  for (i64 p : {3, 5}) {
    const DensityResult d = browkin_density(p, 200000);
    const double deviation = std::abs(d.ratio.get_d() - 1.0 / static_cast<double>(p));
    if (!(deviation < kDensityTolerance)) problems << "p=" << p << " ratio " << to_string(d.ratio) << "; ";
    std::cout << "  density p=" << p << ": " << d.n_p2 << "/" << d.n_p << " = " << d.ratio.get_d() << '\n';
  }
  return problems.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"1 published K-group orders and factorizations", published_orders},
      {"2 K_2(Z) has order 2", k2_of_integers},
      {"3 prime-conductor criterion vs orders vs valuations, l <= 500", prime_conductor_equivalence},
      {"4 lower bound against actual valuations", lower_bound_validation},
      {"5 closed-form bounds 57 and 781, subfield m=29*43", closed_form_bounds},
      {"6 character Bernoulli congruences", character_congruences},
      {"7 power-sum and denominator suites, n <= 100", power_sum_suites},
      {"8 density of l = 1 mod p^2 at x = 200000", prime_density},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (problem.empty() ? "PASS " : "FAIL ") << name << " (" << seconds << " s)";
    if (!problem.empty()) {
      std::cout << ": " << problem;
      ++failures;
    }
    std::cout << std::endl;
  }
  return failures;
}
