#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace kleinc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A homogeneous polynomial of degree n in (u, v), stored as the coefficient
/// vector c[i] of u^(n-i) v^i. Arithmetic is exact for BigInt and Rational.
template <class T>
struct HomPoly {
  int n = 0;
  std::vector<T> c;

  HomPoly() : c(1) {}
  explicit HomPoly(int degree) : n(degree), c(static_cast<std::size_t>(degree) + 1) {}
  HomPoly(int degree, std::vector<T> coeffs) : n(degree), c(std::move(coeffs)) {
    if (c.size() != static_cast<std::size_t>(n) + 1) throw std::invalid_argument("HomPoly: coefficient count != degree + 1");
  }

  /// The linear form alpha*u + beta*v.
  static HomPoly linear(T alpha, T beta) { return HomPoly(1, {std::move(alpha), std::move(beta)}); }
  static HomPoly constant(T value) { return HomPoly(0, {std::move(value)}); }

  const T& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  T& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }

  friend HomPoly operator*(const HomPoly& x, const HomPoly& y) {
    HomPoly r(x.n + y.n);
    for (int i = 0; i <= x.n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j <= y.n; ++j) r[i + j] += x[i] * y[j];
    }
    return r;
  }
  HomPoly& operator+=(const HomPoly& o) {
    if (o.n != n) throw std::invalid_argument("HomPoly: adding different degrees");
    for (int i = 0; i <= n; ++i) (*this)[i] += o[i];
    return *this;
  }
  HomPoly& operator-=(const HomPoly& o) {
    if (o.n != n) throw std::invalid_argument("HomPoly: subtracting different degrees");
    for (int i = 0; i <= n; ++i) (*this)[i] -= o[i];
    return *this;
  }
  friend HomPoly operator+(HomPoly x, const HomPoly& y) { return x += y; }
  friend HomPoly operator-(HomPoly x, const HomPoly& y) { return x -= y; }
  HomPoly& operator*=(const T& s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  friend HomPoly operator*(HomPoly x, const T& s) { return x *= s; }
  friend bool operator==(const HomPoly&, const HomPoly&) = default;

  HomPoly pow(int e) const {
    HomPoly r = constant(T(1)), b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      if (e > 1) b = b * b;
    }
    return r;
  }

  /// P(U, V) where U and V are homogeneous polynomials of a common degree.
  HomPoly substitute(const HomPoly& U, const HomPoly& V) const {
    if (U.n != V.n) throw std::invalid_argument("HomPoly::substitute: degree mismatch");
    HomPoly r(n * U.n);
    std::vector<HomPoly> upow(static_cast<std::size_t>(n) + 1), vpow(static_cast<std::size_t>(n) + 1);
    upow[0] = vpow[0] = constant(T(1));
    for (int i = 1; i <= n; ++i) {
      upow[static_cast<std::size_t>(i)] = upow[static_cast<std::size_t>(i) - 1] * U;
      vpow[static_cast<std::size_t>(i)] = vpow[static_cast<std::size_t>(i) - 1] * V;
    }
    for (int i = 0; i <= n; ++i) {
      if ((*this)[i] == 0) continue;
      r += upow[static_cast<std::size_t>(n - i)] * vpow[static_cast<std::size_t>(i)] * (*this)[i];
    }
    return r;
  }
};

using IntPoly = HomPoly<BigInt>;
using RatPoly = HomPoly<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
  RatPoly r(p.n);
  for (int i = 0; i <= p.n; ++i) r[i] = Rational(p[i]);
  return r;
}

/// Converts to integers; throws std::domain_error if any coefficient is fractional.
inline IntPoly to_integer(const RatPoly& p) {
  IntPoly r(p.n);
  for (int i = 0; i <= p.n; ++i) {
    if (denominator(p[i]) != 1) throw std::domain_error("non-integral coefficient");
    r[i] = numerator(p[i]);
  }
  return r;
}

/// "num/den" or "num" for integral values.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace kleinc
