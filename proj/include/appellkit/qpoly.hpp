#pragma once

/// @file qpoly.hpp
/// @brief Polynomials in the real variables x0..x3 with quaternion coefficients.
///
/// A term is stored as `c * x0^e0 x1^e1 x2^e2 x3^e3` with the quaternion `c`
/// on the left. Monomials are real, hence central, so products only need to
/// keep the order of coefficients. Zero coefficients are never stored, which
/// makes `operator==` a structural equality test.

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "appellkit/quaternion.hpp"

namespace appellkit {

using Monomial = std::array<unsigned, 4>;

inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();
inline constexpr int kDefaultDegreeCap = 24;

/// Degree cap in force on the calling thread.
int degree_cap();

/// Overrides the degree cap for the current thread until destruction.
class ScopedDegreeCap {
 public:
  explicit ScopedDegreeCap(int cap);
  ~ScopedDegreeCap();
  ScopedDegreeCap(const ScopedDegreeCap&) = delete;
  ScopedDegreeCap& operator=(const ScopedDegreeCap&) = delete;

 private:
  int previous_;
};

class QPoly {
 public:
  using TermMap = std::map<Monomial, QuaternionExact>;

  QPoly() = default;
  explicit QPoly(const QuaternionExact& constant);

  static QPoly monomial(const Monomial& m, const QuaternionExact& c);
  /// The coordinate x_l, l = 0..3.
  static QPoly variable(int l);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Maximal total degree, kZeroPolyDegree for the zero polynomial.
  int degree() const;
  QuaternionExact coeff(const Monomial& m) const;
  bool depends_on(int var) const;

  /// Adds c to the coefficient of m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const QuaternionExact& c);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(const QPoly& a);

  /// Product with coefficient order a-then-b. Throws DegreeCapExceeded.
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  /// Left multiplication of every coefficient.
  friend QPoly operator*(const QuaternionExact& c, const QPoly& p);
  /// Right multiplication of every coefficient.
  friend QPoly operator*(const QPoly& p, const QuaternionExact& c);
  friend QPoly operator*(const Rational& s, const QPoly& p);

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  /// Partial derivative with respect to x_var.
  QPoly partial(int var) const;

 private:
  TermMap terms_;
};

QPoly pow(const QPoly& p, unsigned n);

/// q = x0 + x1 i + x2 j + x3 k.
QPoly embed_q();
/// conj(q) = x0 - x1 i - x2 j - x3 k.
QPoly embed_qbar();
/// The vector part x1 i + x2 j + x3 k.
QPoly embed_vec();

/// Left Cauchy-Fueter operator d0 + i d1 + j d2 + k d3.
QPoly fueter_operator(const QPoly& f);
/// Hypercomplex derivative (d0 - i d1 - j d2 - k d3) / 2.
QPoly hyper_derivative(const QPoly& f);
/// Laplacian in R^4.
QPoly laplacian4(const QPoly& f);
/// D = i d1 + j d2 + k d3, the Dirac operator on the hyperplane x0 = 0.
QPoly vector_dirac(const QPoly& f);
/// Fueter regular extension of x0-free data: sum_j (-x0)^j / j! D^j h.
/// Throws NonRestrictedInput if h depends on x0.
QPoly ck_extension(const QPoly& h);
/// Sets x0 = 0.
QPoly restrict_x0(const QPoly& f);
/// Coefficients of t -> f(t) on the real axis, lowest degree first.
std::vector<QuaternionExact> slice_taylor_real(const QPoly& f);

QuaternionExact eval(const QPoly& f, const QuaternionExact& q);
QuaternionFloat eval(const QPoly& f, const QuaternionFloat& q);

/// Binary64 copy of a QPoly for repeated evaluation.
class FloatPoly {
 public:
  FloatPoly() = default;
  explicit FloatPoly(const QPoly& p);
  QuaternionFloat operator()(const QuaternionFloat& q) const;
  int degree() const { return degree_; }

 private:
  std::vector<std::pair<Monomial, QuaternionFloat>> terms_;
  int degree_ = 0;
};

/// JSON array of {"exponents": [e0,e1,e2,e3], "coeff": ["p/q", x4]}.
nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

std::string to_string(const QPoly& p);

}  // namespace appellkit
