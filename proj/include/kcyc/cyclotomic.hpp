#pragma once

// Arithmetic in Z[zeta_{p^N}] (p odd prime) in the power basis
// 1, zeta, ..., zeta^{phi(p^N)-1}, plus the integer-denominator fractions
// that carry generalized Bernoulli numbers.

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "numtheory.hpp"
#include "polynomial.hpp"

namespace kcyc {

/// Phi_{p^N}(x) = sum_{j=0}^{p-1} x^{j p^{N-1}}.
inline IntPolynomial cyclotomic_polynomial(i64 p, int N) {
  require(is_odd_prime(p), "cyclotomic_polynomial: p must be an odd prime");
  require(N >= 1, "cyclotomic_polynomial: N must be >= 1");
  const i64 step = ipow(p, static_cast<unsigned>(N - 1));
  std::vector<Integer> c(static_cast<std::size_t>(step * (p - 1) + 1), Integer(0));
  for (i64 j = 0; j < p; ++j) c[static_cast<std::size_t>(j * step)] = 1;
  return IntPolynomial(std::move(c));
}

/// Phi_n(x) for arbitrary n >= 1, by dividing x^n - 1 by Phi_d for the
/// proper divisors d of n.
inline IntPolynomial cyclotomic_polynomial_of_order(i64 n) {
  require(n >= 1, "cyclotomic polynomial order must be positive");
  IntPolynomial f = IntPolynomial::monomial(Integer(1), static_cast<std::size_t>(n)) -
                    IntPolynomial::constant(Integer(1));
  for (i64 d : divisors(n)) {
    if (d == n) continue;
    auto [q, r] = divmod(f, cyclotomic_polynomial_of_order(d));
    ensure(r.is_zero(), "cyclotomic_polynomial_of_order: inexact division");
    f = std::move(q);
  }
  return f;
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline Integer determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Remainder of g modulo a monic polynomial.
inline IntPolynomial reduce_mod(const IntPolynomial& g, const IntPolynomial& monic) {
  require(!monic.is_zero() && monic.leading() == 1, "reduce_mod: modulus must be monic");
  return divmod(g, monic).second;
}

/// Norm of g(x) in Z[x]/(f) for monic f, i.e. Res(f, g): the determinant
/// of multiplication by g on the power basis.
inline Integer quotient_norm(const IntPolynomial& g, const IntPolynomial& monic) {
  const std::size_t n = static_cast<std::size_t>(monic.degree());
  IntPolynomial column = reduce_mod(g, monic);
  const IntPolynomial x = IntPolynomial::monomial(Integer(1), 1);
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = column.coeff(i);
    column = reduce_mod(column * x, monic);
  }
  return determinant(std::move(m));
}

/// The ring Z[zeta_{p^N}].
class CyclotomicLevel {
 public:
  CyclotomicLevel(i64 p, int N) : p_(p), n_(N) {
    require(is_odd_prime(p), "cyclotomic level: p must be an odd prime");
    require(N >= 1, "cyclotomic level: N must be >= 1");
    require(ipow(p, static_cast<unsigned>(N)) <= (i64{1} << 24), "cyclotomic level too large");
  }

  i64 prime() const { return p_; }
  int exponent() const { return n_; }
  /// p^N, the order of zeta.
  i64 root_order() const { return ipow(p_, static_cast<unsigned>(n_)); }
  /// phi(p^N), the rank of the power basis.
  i64 degree() const { return root_order() / p_ * (p_ - 1); }

  friend bool operator==(const CyclotomicLevel&, const CyclotomicLevel&) = default;

  std::string to_string() const {
    return std::to_string(p_) + "^" + std::to_string(n_);
  }

 private:
  i64 p_;
  int n_;
};

namespace detail {

/// Reduce a coefficient vector of any length modulo Phi_{p^N} using
/// x^{(p-1)q} = -(1 + x^q + ... + x^{(p-2)q}), q = p^{N-1}.
inline void reduce_cyclotomic(std::vector<Integer>& v, const CyclotomicLevel& level) {
  const std::size_t deg = static_cast<std::size_t>(level.degree());
  const std::size_t q = static_cast<std::size_t>(level.root_order() / level.prime());
  const std::size_t p = static_cast<std::size_t>(level.prime());
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    const Integer c = v[i];
    v[i] = 0;
    const std::size_t base = i - deg;
    for (std::size_t j = 0; j + 1 < p; ++j) v[base + j * q] -= c;
  }
  v.resize(deg, Integer(0));
}

}  // namespace detail

class CyclotomicElement {
 public:
  explicit CyclotomicElement(CyclotomicLevel level)
      : level_(level), c_(static_cast<std::size_t>(level.degree()), Integer(0)) {}

  /// Power-basis coordinates; the length must equal phi(p^N).
  CyclotomicElement(CyclotomicLevel level, std::vector<Integer> coeffs) : level_(level), c_(std::move(coeffs)) {
    require(c_.size() == static_cast<std::size_t>(level.degree()),
            "cyclotomic element: coordinate count must equal phi(p^N)");
  }

  /// The element sum_i coeffs[i] zeta^i for a coefficient list of any
  /// length, reduced modulo Phi_{p^N}.
  static CyclotomicElement from_polynomial(CyclotomicLevel level, std::vector<Integer> coeffs) {
    if (coeffs.size() < static_cast<std::size_t>(level.degree())) coeffs.resize(level.degree(), Integer(0));
    detail::reduce_cyclotomic(coeffs, level);
    return CyclotomicElement(level, std::move(coeffs));
  }

  static CyclotomicElement constant(CyclotomicLevel level, const Integer& c) {
    CyclotomicElement e(level);
    e.c_[0] = c;
    return e;
  }

  /// zeta^t for any integer t.
  static CyclotomicElement zeta_power(CyclotomicLevel level, i64 t) {
    std::vector<Integer> v(static_cast<std::size_t>(level.root_order()), Integer(0));
    v[static_cast<std::size_t>(mod_floor(t, level.root_order()))] = 1;
    return from_polynomial(level, std::move(v));
  }

  const CyclotomicLevel& level() const { return level_; }
  const std::vector<Integer>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x == 0; });
  }
  bool is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Integer& x) { return x == 0; });
  }

  /// gcd of the coordinates (0 for the zero element).
  Integer content() const {
    Integer g = 0;
    for (const auto& x : c_) g = gcd(g, x);
    return g;
  }

  CyclotomicElement& operator+=(const CyclotomicElement& o) {
    check_level(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CyclotomicElement& operator-=(const CyclotomicElement& o) {
    check_level(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CyclotomicElement& operator*=(const Integer& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const Integer& s) { return a *= s; }
  friend CyclotomicElement operator*(const Integer& s, CyclotomicElement a) { return a *= s; }

  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.check_level(b);
    const std::size_t n = a.c_.size();
    std::vector<Integer> out(2 * n - 1, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.c_[j] != 0) mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    return from_polynomial(a.level_, std::move(out));
  }

  CyclotomicElement& operator*=(const CyclotomicElement& o) { return *this = *this * o; }

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.level_ == b.level_ && a.c_ == b.c_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CyclotomicElement& e) {
    os << "[";
    for (std::size_t i = 0; i < e.c_.size(); ++i) os << (i ? ", " : "") << e.c_[i];
    return os << "] @ " << e.level_.to_string();
  }

 private:
  void check_level(const CyclotomicElement& o) const {
    if (!(level_ == o.level_)) {
      throw level_mismatch("cyclotomic level mismatch: " + level_.to_string() + " vs " + o.level_.to_string());
    }
  }

  CyclotomicLevel level_;
  std::vector<Integer> c_;
};

/// Image under zeta -> zeta^a; gcd(a, p) = 1.
inline CyclotomicElement galois_apply(const CyclotomicElement& alpha, i64 a) {
  const CyclotomicLevel& level = alpha.level();
  require(mod_floor(a, level.prime()) != 0, "galois_apply: a must be coprime to p");
  const i64 order = level.root_order();
  const i64 shift = mod_floor(a, order);
  std::vector<Integer> v(static_cast<std::size_t>(order), Integer(0));
  for (std::size_t i = 0; i < alpha.coeffs().size(); ++i) {
    if (alpha.coeffs()[i] == 0) continue;
    v[static_cast<std::size_t>(static_cast<i64>(i) * shift % order)] += alpha.coeffs()[i];
  }
  return CyclotomicElement::from_polynomial(level, std::move(v));
}

/// Image under zeta_{p^b} -> zeta_{p^N}^{p^{N-b}}.
inline CyclotomicElement embed(const CyclotomicElement& alpha, int N) {
  const CyclotomicLevel& from = alpha.level();
  require(N >= from.exponent(), "embed: target level below source level");
  const CyclotomicLevel to(from.prime(), N);
  const std::size_t stride = static_cast<std::size_t>(ipow(from.prime(), static_cast<unsigned>(N - from.exponent())));
  std::vector<Integer> v(static_cast<std::size_t>(to.degree()), Integer(0));
  for (std::size_t i = 0; i < alpha.coeffs().size(); ++i) v[i * stride] = alpha.coeffs()[i];
  return CyclotomicElement(to, std::move(v));
}

/// Absolute norm N_{Q(zeta)/Q}(alpha) = Res(Phi_{p^N}, alpha(x)), as the
/// determinant of multiplication by alpha.
inline Integer norm(const CyclotomicElement& alpha) {
  const CyclotomicLevel& level = alpha.level();
  const std::size_t n = static_cast<std::size_t>(level.degree());
  const std::size_t q = static_cast<std::size_t>(level.root_order() / level.prime());
  const std::size_t p = static_cast<std::size_t>(level.prime());
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  std::vector<Integer> column = alpha.coeffs();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = column[i];
    // multiply by zeta
    const Integer top = column[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) column[i] = column[i - 1];
    column[0] = 0;
    if (top != 0) {
      for (std::size_t k = 0; k + 1 < p; ++k) column[k * q] -= top;
    }
  }
  return determinant(std::move(m));
}

/// v_pi(alpha) for pi = 1 - zeta_{p^N}. Since p is totally ramified with
/// residue degree 1, this equals v_p(N(alpha)).
inline Valuation pi_valuation(const CyclotomicElement& alpha) {
  if (alpha.is_zero()) return std::nullopt;
  return p_valuation(norm(alpha), static_cast<unsigned long>(alpha.level().prime()));
}

/// numerator / denominator with a positive integer denominator. Kept
/// normalized: gcd(content(numerator), denominator) = 1 and zero is 0/1.
class CyclotomicRational {
 public:
  explicit CyclotomicRational(CyclotomicElement numerator, Integer denominator = 1)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    require(den_ != 0, "cyclotomic rational: zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      num_ *= Integer(-1);
    }
    normalize();
  }

  static CyclotomicRational from_rational(CyclotomicLevel level, const Rational& q) {
    return CyclotomicRational(CyclotomicElement::constant(level, q.get_num()), q.get_den());
  }

  const CyclotomicElement& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  const CyclotomicLevel& level() const { return num_.level(); }
  bool is_zero() const { return num_.is_zero(); }

  friend CyclotomicRational operator+(const CyclotomicRational& a, const CyclotomicRational& b) {
    return CyclotomicRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend CyclotomicRational operator-(const CyclotomicRational& a, const CyclotomicRational& b) {
    return CyclotomicRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend CyclotomicRational operator*(const CyclotomicRational& a, const CyclotomicRational& b) {
    return CyclotomicRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend CyclotomicRational operator*(const CyclotomicRational& a, const Rational& s) {
    return CyclotomicRational(a.num_ * Integer(s.get_num()), a.den_ * s.get_den());
  }
  friend CyclotomicRational operator*(const Rational& s, const CyclotomicRational& a) { return a * s; }

  friend bool operator==(const CyclotomicRational& a, const CyclotomicRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CyclotomicRational& x) {
    return os << x.num_ << " / " << x.den_;
  }

 private:
  void normalize() {
    const Integer g = gcd(num_.content(), den_);
    if (g == 0) {
      den_ = 1;
      return;
    }
    if (g != 1) {
      std::vector<Integer> c = num_.coeffs();
      for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      num_ = CyclotomicElement(num_.level(), std::move(c));
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  CyclotomicElement num_;
  Integer den_;
};

inline CyclotomicRational galois_apply(const CyclotomicRational& x, i64 a) {
  return CyclotomicRational(galois_apply(x.numerator(), a), x.denominator());
}

inline CyclotomicRational embed(const CyclotomicRational& x, int N) {
  return CyclotomicRational(embed(x.numerator(), N), x.denominator());
}

inline Valuation pi_valuation(const CyclotomicRational& x) {
  const Valuation top = pi_valuation(x.numerator());
  if (!top) return std::nullopt;
  return *top - x.level().degree() * *p_valuation(x.denominator(), static_cast<unsigned long>(x.level().prime()));
}

/// The value of a cyclotomic rational that lies in Q. A nonzero
/// coordinate beyond the constant term means an upstream bug, so this
/// throws rather than truncating.
inline Rational rational_part(const CyclotomicRational& x) {
  ensure(x.numerator().is_rational(), "rational_part: value is not rational");
  return make_rational(x.numerator().coeffs()[0], x.denominator());
}

}  // namespace kcyc
