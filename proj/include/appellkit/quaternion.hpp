#pragma once

/// @file quaternion.hpp
/// @brief Quaternion arithmetic over exact rationals and binary64.
///
/// `Quaternion<T>` is a plain value type with components x0 + x1 i + x2 j + x3 k.
/// The exact instantiation uses GMP rationals; the floating one mirrors it.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>

#include "appellkit/errors.hpp"

namespace appellkit {

using Rational = mpq_class;

/// num/den in canonical form; mpq_class(num, den) alone does not reduce.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

template <class T>
struct Quaternion {
  T x0{0};
  T x1{0};
  T x2{0};
  T x3{0};

  Quaternion() = default;
  Quaternion(T real) : x0(std::move(real)) {}  // NOLINT: real scalars embed implicitly
  Quaternion(T a, T b, T c, T d)
      : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)), x3(std::move(d)) {}

  static Quaternion unit(int l) {
    switch (l) {
      case 0: return Quaternion(T(1), T(0), T(0), T(0));
      case 1: return Quaternion(T(0), T(1), T(0), T(0));
      case 2: return Quaternion(T(0), T(0), T(1), T(0));
      case 3: return Quaternion(T(0), T(0), T(0), T(1));
      default: throw IndexError("quaternion unit index must be 0..3");
    }
  }
  static Quaternion i() { return unit(1); }
  static Quaternion j() { return unit(2); }
  static Quaternion k() { return unit(3); }

  const T& operator[](int l) const {
    switch (l) {
      case 0: return x0;
      case 1: return x1;
      case 2: return x2;
      default: return x3;
    }
  }
  T& operator[](int l) {
    switch (l) {
      case 0: return x0;
      case 1: return x1;
      case 2: return x2;
      default: return x3;
    }
  }

  const T& real() const { return x0; }
  Quaternion vec() const { return Quaternion(T(0), x1, x2, x3); }
  bool is_zero() const { return x0 == 0 && x1 == 0 && x2 == 0 && x3 == 0; }

  Quaternion& operator+=(const Quaternion& o) {
    x0 += o.x0;
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    x0 -= o.x0;
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  Quaternion& operator*=(const T& s) {
    x0 *= s;
    x1 *= s;
    x2 *= s;
    x3 *= s;
    return *this;
  }
  Quaternion& operator/=(const T& s) {
    x0 /= s;
    x1 /= s;
    x2 /= s;
    x3 /= s;
    return *this;
  }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) { return Quaternion(-a.x0, -a.x1, -a.x2, -a.x3); }
  friend Quaternion operator*(Quaternion a, const T& s) { return a *= s; }
  friend Quaternion operator*(const T& s, Quaternion a) { return a *= s; }
  friend Quaternion operator/(Quaternion a, const T& s) { return a /= s; }

  /// Hamilton product; ij = k, jk = i, ki = j.
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return Quaternion(T(a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3),
                      T(a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2),
                      T(a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1),
                      T(a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0));
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

using QuaternionExact = Quaternion<Rational>;
using QuaternionFloat = Quaternion<double>;

template <class T>
Quaternion<T> conj(const Quaternion<T>& q) {
  return Quaternion<T>(q.x0, -q.x1, -q.x2, -q.x3);
}

/// |q|^2 = x0^2 + x1^2 + x2^2 + x3^2, exact for rationals.
template <class T>
T norm_sq(const Quaternion<T>& q) {
  return T(q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3);
}

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double r) { return r; }

template <class T>
double norm(const Quaternion<T>& q) {
  if constexpr (std::is_same_v<T, double>) {
    return std::sqrt(norm_sq(q));
  } else {
    return std::sqrt(to_double(norm_sq(q)));
  }
}

template <class T>
Quaternion<T> inverse(const Quaternion<T>& q) {
  T n = norm_sq(q);
  if (n == 0) {
    throw DomainError("inverse of the zero quaternion");
  }
  return conj(q) / n;
}

inline QuaternionFloat to_float(const QuaternionExact& q) {
  return {q.x0.get_d(), q.x1.get_d(), q.x2.get_d(), q.x3.get_d()};
}
inline QuaternionFloat to_float(const QuaternionFloat& q) { return q; }

/// Exact conversion of a binary64 quaternion (every double is a dyadic rational).
inline QuaternionExact to_exact(const QuaternionFloat& q) {
  return {Rational(q.x0), Rational(q.x1), Rational(q.x2), Rational(q.x3)};
}

/// Componentwise comparison relative to max(1, |a|, |b|).
inline bool approx_equal(const QuaternionFloat& a, const QuaternionFloat& b, double rel_tol) {
  double scale = std::max({1.0, norm(a), norm(b)});
  return norm(a - b) <= rel_tol * scale;
}

/// e^{x0} (cos|v| + v/|v| sin|v|), v = vec(q).
QuaternionFloat qexp(const QuaternionFloat& q);

/// A pure unit quaternion, i.e. a point of the sphere of imaginary units.
class ImaginaryUnit {
 public:
  /// Normalizes (a, b, c); throws DomainError on the zero vector.
  ImaginaryUnit(double a, double b, double c);

  static ImaginaryUnit i() { return {1.0, 0.0, 0.0}; }
  static ImaginaryUnit j() { return {0.0, 1.0, 0.0}; }
  static ImaginaryUnit k() { return {0.0, 0.0, 1.0}; }

  const QuaternionFloat& value() const { return value_; }
  operator const QuaternionFloat&() const { return value_; }  // NOLINT

  /// The point a + b*omega of the complex slice C_omega.
  QuaternionFloat slice_point(double a, double b) const {
    return {a, b * value_.x1, b * value_.x2, b * value_.x3};
  }

 private:
  QuaternionFloat value_;
};

/// Deterministic uniform sample from the sphere of imaginary units.
ImaginaryUnit sample_sphere(std::uint64_t seed);
ImaginaryUnit sample_sphere(std::mt19937_64& rng);

std::string to_string(const QuaternionExact& q);
std::string to_string(const QuaternionFloat& q);

template <class T>
std::ostream& operator<<(std::ostream& os, const Quaternion<T>& q) {
  return os << to_string(q);
}

}  // namespace appellkit
