#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace kcyc {

namespace detail {

inline Integer exact_quotient(const Integer& a, const Integer& b) {
  ensure(divides(b, a), "polynomial division is not exact over the integers");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rational exact_quotient(const Rational& a, const Rational& b) { return Rational(a / b); }

}  // namespace detail

/// Dense univariate polynomial, coefficients lowest degree first. The
/// coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has degree -1.
template <class T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  static Polynomial monomial(T c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// x - a
  static Polynomial linear_root(const T& a) { return Polynomial({T(-a), T(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = U(acc * x + U(*it));
    return acc;
  }
  T operator()(const T& x) const { return evaluate<T>(x); }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(T(c_[i] * static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder. Over the integers the leading coefficient of
  /// the divisor must divide every quotient coefficient; otherwise a
  /// computation_error is raised (we never silently leave the ring).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    require(!b.is_zero(), "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<T> rem = a.c_;
    std::vector<T> quot(a.c_.size() - b.c_.size() + 1, T(0));
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t i = rem.size(); i-- > db;) {
      if (rem[i] == 0) continue;
      T q = detail::exact_quotient(rem[i], b.c_.back());
      for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.c_[j];
      quot[i - db] = std::move(q);
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Human-readable form in the variable x, highest degree first.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      std::string mag = kcyc::to_string(T(abs(c_[i])));
      const bool negative = c_[i] < 0;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (i == 0) {
        out += mag;
        continue;
      }
      out += mag == "1" ? "x" : mag + "*x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// lcm of the coefficient denominators (1 for the zero polynomial).
inline Integer denominator_lcm(const RatPolynomial& f) {
  Integer d = 1;
  for (const auto& c : f.coeffs()) d = lcm(d, Integer(c.get_den()));
  return d;
}

/// Scale a rational polynomial by an integer that clears its
/// denominators; fails if the result is not integral.
inline IntPolynomial to_integer_polynomial(const RatPolynomial& f, const Integer& scale = 1) {
  std::vector<Integer> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    Rational v = c * scale;
    ensure(is_integral(v), "to_integer_polynomial: scaled coefficient is not integral");
    out.emplace_back(v.get_num());
  }
  return IntPolynomial(std::move(out));
}

inline RatPolynomial to_rational_polynomial(const IntPolynomial& f) {
  std::vector<Rational> out;
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return RatPolynomial(std::move(out));
}

}  // namespace kcyc
