#include <gtest/gtest.h>

#include "kcyc/ktheory.hpp"

using namespace kcyc;

namespace {

Rational q(long num, long den) { return make_rational(Integer(num), Integer(den)); }

// a^j = 1 mod w for every unit a mod lcm(w, conductor) fixed by X_F,
// evaluating characters directly on residues.
bool w_divides_invariant(const AbelianField& f, i64 w, long j) {
  const i64 L = std::lcm(w, f.conductor());
  for (i64 a = 1; a <= L; ++a) {
    if (std::gcd(a, L) != 1) continue;
    bool fixed = true;
    for (const auto& chi : f.characters()) {
      if (*chi.evaluate(a) != 0) {
        fixed = false;
        break;
      }
    }
    if (fixed && powmod(static_cast<u64>(a), static_cast<u64>(j), static_cast<u64>(w)) != 1 % static_cast<u64>(w)) return false;
  }
  return true;
}

bool trial_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// The commonly quoted closed form without the first-stratum correction, kept
// only to document that it disagrees with the computed orders.
Rational displayed_bound(i64 p, long k, i64 m) {
  const SProfile s = s_profile(m, p);
  const long delta = p == k + 2 ? 1 : 0;
  long total_s = 0;
  for (auto [j, c] : s.s) total_s += c;
  const Integer P(static_cast<long>(p));
  Rational value(power(P, static_cast<unsigned long>(total_s)) - power(P, static_cast<unsigned long>(delta * s.s_at(1))) + delta,
                 Integer(p - 1));
  value.canonicalize();
  for (int j = 2; j <= s.theta; ++j) value += Rational(ghat_count(s, j), Integer(power(P, static_cast<unsigned long>(j - 1)) * (p - 1)));
  value.canonicalize();
  return value;
}

}  // namespace

TEST(WInvariant, Examples) {
  EXPECT_EQ(w_invariant(RealCyclotomic{1}, 2), 24);
  EXPECT_EQ(w_invariant(RealCyclotomic{1}, 4), 240);
  EXPECT_EQ(w_invariant(RealCyclotomic{7}, 2), 168);
  EXPECT_THROW(w_invariant(RealCyclotomic{1}, 0), precondition_error);
}

TEST(WInvariant, RationalFieldMatchesBernoulliDenominators) {
  // w_{2i}(Q) is the denominator of B_{2i}/(4i)
  for (long i = 1; i <= 10; ++i) {
    const Rational ratio = bernoulli_number(2 * i) / Rational(4 * i);
    EXPECT_EQ(w_invariant(RealCyclotomic{1}, 2 * i), Integer(ratio.get_den())) << i;
  }
  for (long j = 1; j <= 9; j += 2) EXPECT_EQ(w_invariant(RealCyclotomic{1}, j), 2);
}

TEST(WInvariant, MaximalAgainstDirectEnumeration) {
  for (const FieldSpec& spec : std::vector<FieldSpec>{RealCyclotomic{5}, RealCyclotomic{7}, RealCyclotomic{9},
                                                      RealCyclotomic{12}, MaxPSubextension{19, 3}, PrimeCyclicSubfield{11, 5}}) {
    const AbelianField f(spec);
    for (long j : {2L, 4L, 6L}) {
      const Integer w = w_invariant(f, j);
      ASSERT_TRUE(w.fits_slong_p());
      const i64 wl = w.get_si();
      EXPECT_TRUE(w_divides_invariant(f, wl, j)) << f.name() << " j=" << j;
      for (i64 p = 2; p <= j * f.degree() + 1; ++p) {
        if (trial_prime(p)) {
          EXPECT_FALSE(w_divides_invariant(f, wl * p, j)) << f.name() << " j=" << j << " p=" << p;
        }
      }
    }
  }
}

TEST(WInvariant, PPartOfSubextensions) {
  for (auto [m, p] : std::vector<std::pair<i64, i64>>{{7, 3}, {19, 3}, {13, 3}, {11, 5}, {31, 5}, {29, 7}, {7 * 13, 3}}) {
    const AbelianField f(MaxPSubextension{m, p});
    for (long k = 1; k + 2 <= p; k += 2) {
      const auto v = p_valuation(w_invariant(f, k + 1), static_cast<unsigned long>(p));
      EXPECT_EQ(v, p == k + 2 ? 1 : 0) << m << ' ' << p << ' ' << k;
    }
  }
}

TEST(KOrder, Examples) {
  EXPECT_EQ(k_order(RealCyclotomic{7}, 1).order, 8);
  EXPECT_EQ(k_order(RealCyclotomic{1}, 1).order, 2);
  const auto r = k_order(RealCyclotomic{11}, 3);
  EXPECT_EQ(r.order, 847811);
  EXPECT_EQ(r.factorization.to_string(), "71·11941");
  EXPECT_EQ(r.factorization.value(), r.order);
  EXPECT_THROW(k_order(RealCyclotomic{7}, 2), precondition_error);
  const DirichletCharacter odd(make_unit_group(4), {1});
  EXPECT_THROW(k_order(ExplicitCharacterGroup{{DirichletCharacter::trivial(1), odd}}, 1), precondition_error);
}

TEST(KOrder, IntegralAndPositive) {
  for (i64 m : {5, 7, 8, 9, 11, 12, 13, 15, 16, 19, 20, 23}) {
    for (long k : {1L, 3L, 5L}) {
      KOrderReport r;
      ASSERT_NO_THROW(r = k_order(RealCyclotomic{m}, k)) << m << ' ' << k;
      EXPECT_GT(r.order, 0);
      EXPECT_EQ(r.factorization.value(), r.order);
    }
  }
}

TEST(SProfile, Examples) {
  const auto a = s_profile(19, 3);
  EXPECT_EQ(a.s_at(2), 1);
  EXPECT_EQ(a.theta, 2);
  const auto b = s_profile(29 * 43 * 71, 7);
  EXPECT_EQ(b.s_at(1), 3);
  EXPECT_EQ(b.theta, 1);
  const auto c = s_profile(8, 3);
  EXPECT_TRUE(c.s.empty());
  EXPECT_EQ(c.theta, 0);
  EXPECT_THROW(s_profile(1, 3), precondition_error);
  EXPECT_THROW(s_profile(7, 4), precondition_error);
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(lower_bound_exponent(7, 1, 29 * 43 * 71), 57);
  EXPECT_EQ(lower_bound_exponent(7, 3, 29 * 43 * 71), 57);
  EXPECT_EQ(lower_bound_exponent(5, 1, 11L * 31 * 41 * 61 * 71), 781);
  EXPECT_EQ(lower_bound_exponent(3, 1, 19), 2);
  EXPECT_EQ(lower_bound_exponent(5, 1, 11), 1);
  EXPECT_EQ(lower_bound_exponent(5, 3, 11), 0);
  EXPECT_EQ(lower_bound_exponent(7, 3, 29), 1);
  EXPECT_EQ(lower_bound_exponent(3, 1, 133), 6);
  EXPECT_EQ(lower_bound_exponent(7, 1, 29 * 43), 8);
  EXPECT_EQ(lower_bound_exponent(3, 1, 8), 0);
  EXPECT_THROW(lower_bound_exponent(3, 3, 19), precondition_error);
  EXPECT_THROW(lower_bound_exponent(3, 2, 19), precondition_error);
}

TEST(LowerBound, DisplayedClosedFormOvershoots) {
  // v_3(#K_2(Z[zeta_19]^+)) = v_3(2244096) = 2
  EXPECT_EQ(displayed_bound(3, 1, 19), q(5, 2));
  EXPECT_EQ(ceil(displayed_bound(3, 1, 19)), 3);
  EXPECT_EQ(p_valuation(k_order_unfactored(RealCyclotomic{19}, 1).order, 3), 2);
  EXPECT_EQ(lower_bound_exponent(3, 1, 19), 2);
}

TEST(LowerBound, ConsistentWithValuations) {
  for (i64 p : {3, 5, 7}) {
    for (i64 m = 7; m <= 400; ++m) {
      const SProfile s = s_profile(m, p);
      if (s.theta == 0 || m % p == 0) continue;
      const AbelianField f(MaxPSubextension{m, p});
      if (f.degree() > 30) continue;
      for (long k = 1; k + 2 <= p; k += 2) {
        const Integer bound = lower_bound_exponent(p, k, m);
        EXPECT_GE(ceil(product_valuation(f, p, k)), bound) << p << ' ' << m << ' ' << k;
        if (f.degree() <= 9 && m <= 100) {
          EXPECT_GE(Integer(*p_valuation(k_order_unfactored(f, k).order, static_cast<unsigned long>(p))), bound) << p << ' ' << m << ' ' << k;
        }
      }
    }
  }
}

TEST(DegreeAdjoinZeta, Examples) {
  EXPECT_EQ(degree_adjoin_zeta(FieldVariant::plus, 7, 3), 2);
  EXPECT_EQ(degree_adjoin_zeta(FieldVariant::full, 21, 3), 1);
  EXPECT_EQ(degree_adjoin_zeta(FieldVariant::full, 11, 5), 4);
  EXPECT_EQ(degree_adjoin_zeta(FieldVariant::plus, 15, 5), 2);
  EXPECT_THROW(degree_adjoin_zeta(FieldVariant::plus, 1, 3), precondition_error);
}

TEST(Browkin, Examples) {
  EXPECT_FALSE(browkin_divisible(3, 7));
  EXPECT_TRUE(browkin_divisible(3, 19));
  EXPECT_TRUE(browkin_divisible(5, 101));
  EXPECT_FALSE(browkin_divisible(5, 31));
  EXPECT_THROW(browkin_divisible(3, 11), precondition_error);
  EXPECT_THROW(browkin_divisible(3, 25), precondition_error);
}

TEST(Browkin, EquivalentToValuationAndOrder) {
  for (i64 p : {3, 5}) {
    for (i64 l = p + 1; l <= 200; l += p) {
      if (!trial_prime(l)) continue;
      const AbelianField f(PrimeCyclicSubfield{l, p});
      const bool criterion = browkin_divisible(p, l);
      const DirichletCharacter& chi = f.characters().back();
      ASSERT_EQ(chi.order(), p);
      EXPECT_EQ(criterion, *char_bernoulli_pi_valuation(chi, p - 2, 1) >= 1) << p << ' ' << l;
      EXPECT_EQ(criterion, divides(Integer(p), k_order_unfactored(f, p - 2).order)) << p << ' ' << l;
    }
  }
}

TEST(Periodicity, DivisibilityRepeatsWithPeriodPMinusOne) {
  for (auto [l, p] : std::vector<std::pair<i64, i64>>{{7, 3}, {13, 3}, {19, 3}, {37, 3}, {11, 5}, {31, 5}}) {
    const AbelianField f(PrimeCyclicSubfield{l, p});
    for (long k = 1; k <= 7; k += 2) {
      const bool here = divides(Integer(p), k_order_unfactored(f, k).order);
      const bool there = divides(Integer(p), k_order_unfactored(f, k + p - 1).order);
      EXPECT_EQ(here, there) << l << ' ' << p << ' ' << k;
    }
  }
}

TEST(Verdict, Examples) {
  const auto a = divisibility_verdict(7, 29 * 43 * 71, 3, FieldVariant::plus);
  EXPECT_EQ(a.kind, Verdict::Kind::guaranteed_divisible);
  EXPECT_EQ(a.exponent_lower_bound, 57);
  for (long k = 1; k <= 21; k += 2) {
    EXPECT_EQ(divisibility_verdict(3, 7, k, FieldVariant::plus).kind, Verdict::Kind::guaranteed_not_divisible) << k;
  }
  EXPECT_EQ(divisibility_verdict(5, 11, 3, FieldVariant::plus).kind, Verdict::Kind::guaranteed_not_divisible);
  EXPECT_EQ(divisibility_verdict(5, 11, 11, FieldVariant::plus).kind, Verdict::Kind::guaranteed_not_divisible);
  EXPECT_EQ(divisibility_verdict(5, 11, 1, FieldVariant::plus).kind, Verdict::Kind::guaranteed_divisible);
  EXPECT_EQ(divisibility_verdict(3, 8, 1, FieldVariant::plus).kind, Verdict::Kind::unknown);
  EXPECT_EQ(divisibility_verdict(3, 13, 1, FieldVariant::plus).kind, Verdict::Kind::unknown);
  EXPECT_EQ(divisibility_verdict(3, 7, 1, FieldVariant::full).kind, Verdict::Kind::unknown);
  const auto periodic = divisibility_verdict(7, 29 * 43 * 71, 9, FieldVariant::plus);
  EXPECT_EQ(periodic.kind, Verdict::Kind::guaranteed_divisible);
  EXPECT_EQ(periodic.exponent_lower_bound, 1);
  EXPECT_THROW(divisibility_verdict(4, 7, 1, FieldVariant::plus), precondition_error);
  EXPECT_THROW(divisibility_verdict(3, 7, 2, FieldVariant::plus), precondition_error);
}

TEST(Verdict, AgreesWithComputedOrders) {
  for (i64 m : {7, 9, 11, 13, 19, 20, 21, 31}) {
    for (i64 p : {3, 5, 7}) {
      for (long k : {1L, 3L, 5L}) {
        const Verdict v = divisibility_verdict(p, m, k, FieldVariant::plus);
        if (v.kind == Verdict::Kind::unknown) continue;
        const Integer order = k_order_unfactored(RealCyclotomic{m}, k).order;
        const long actual = *p_valuation(order, static_cast<unsigned long>(p));
        if (v.kind == Verdict::Kind::guaranteed_divisible) {
          EXPECT_GE(Integer(actual), v.exponent_lower_bound) << p << ' ' << m << ' ' << k;
        } else {
          EXPECT_EQ(actual, 0) << p << ' ' << m << ' ' << k;
        }
      }
    }
  }
}

TEST(Density, Examples) {
  const auto a = browkin_density(3, 100);
  EXPECT_EQ(a.n_p, 11);
  EXPECT_EQ(a.n_p2, 3);
  EXPECT_EQ(a.ratio, q(3, 11));
  const auto b = browkin_density(3, 10);
  EXPECT_EQ(b.n_p, 1);
  EXPECT_EQ(b.n_p2, 0);
  const auto c = browkin_density(5, 100);
  EXPECT_EQ(c.n_p, 5);
  EXPECT_EQ(c.n_p2, 0);
  EXPECT_THROW(browkin_density(5, 25), precondition_error);
}

TEST(Density, MatchesTrialDivisionCounts) {
  for (i64 p : {3, 5, 7}) {
    for (i64 x : {p * p + 1, 500L, 3000L}) {
      i64 n_p = 0, n_p2 = 0;
      for (i64 l = 2; l <= x; ++l) {
        if (!trial_prime(l)) continue;
        n_p += l % p == 1;
        n_p2 += l % (p * p) == 1;
      }
      const auto d = browkin_density(p, x);
      EXPECT_EQ(d.n_p, n_p);
      EXPECT_EQ(d.n_p2, n_p2);
    }
  }
}
