#pragma once

/// @file appell.hpp
/// @brief The Clifford-Appell polynomials Q_k and the algebra around them.
///
/// Q_k(q) = sum_j T^k_j q^{k-j} conj(q)^j with T^k_j = 2(k-j+1)/((k+1)(k+2)).
/// The family is Fueter regular, satisfies (dbar/2) Q_k = k Q_{k-1}, restricts
/// to t^k on the real axis and to c_k v^k on the hyperplane x0 = 0.

#include <cstdint>
#include <span>
#include <vector>

#include "appellkit/qpoly.hpp"
#include "appellkit/quaternion.hpp"

namespace appellkit {

/// T^k_j in simplified form. Throws IndexError if j > k.
Rational tjk(unsigned k, unsigned j);
/// T^k_j through the Pochhammer ratio k!/(3)_k * (2)_{k-j} (1)_j / ((k-j)! j!).
Rational tjk_pochhammer(unsigned k, unsigned j);
/// (a)_n = a (a+1) ... (a+n-1).
Rational pochhammer(const Rational& a, unsigned n);
/// c_k = sum_j (-1)^j T^k_j, memoized.
Rational ck(unsigned k);

/// Symbolic Q_k, memoized. Throws DegreeCapExceeded above the current cap.
const QPoly& qk_symbolic(unsigned k);
QuaternionFloat qk_eval(unsigned k, const QuaternionFloat& q);
/// Q_0(q), ..., Q_n(q) in one pass over the powers of q and conj(q).
std::vector<QuaternionFloat> qk_eval_all(unsigned n, const QuaternionFloat& q);

/// P_k = Q_k / c_k, the family closed under the CK product.
QPoly pk_symbolic(unsigned k);

/// CK extension of the pointwise product of the restrictions to x0 = 0.
/// Throws NotRegular if an argument is not Fueter regular.
QPoly ck_product(const QPoly& f, const QPoly& g);

/// Result of fitting CK(v^n) against the Gegenbauer closed form
/// r^n (C^1_n(x0/r) + 2/(n+2) C^2_{n-1}(x0/r) v/r).
struct GegenbauerFit {
  unsigned n = 0;
  /// Fitted constant and max residual with r = |q|.
  double constant = 0.0;
  double residual = 0.0;
  /// Same fit with r = |vec(q)|, the other reading of r.
  double constant_vector_modulus = 0.0;
  double residual_vector_modulus = 0.0;
};

/// Gegenbauer polynomial C^nu_n(t) by the three-term recurrence.
double gegenbauer(unsigned n, double nu, double t);

/// Fits on the given non-real points.
GegenbauerFit gegenbauer_ck_check(unsigned n, std::span<const QuaternionFloat> grid);
/// Fits on `count` pseudo-random non-real points drawn from `seed`.
GegenbauerFit gegenbauer_ck_check(unsigned n, std::uint64_t seed = 7, unsigned count = 64);

/// A truncated sum together with an upper bound on the omitted tail.
struct TruncatedValue {
  QuaternionFloat value;
  double tail = 0.0;
};

/// sum_{k<=n} Q_k(q)/k!, tail bound sum_{k>n} |q|^k / k!.
TruncatedValue exp_truncated(const QuaternionFloat& q, unsigned n);

/// zeta_l = x_l - e_l x0, l = 1..3. Throws IndexError otherwise.
QPoly fueter_variable(unsigned l);

/// f(x0 + omega r) = A(x0, r) + omega B(x0, r). Both parts are stored as QPoly
/// in the slots (x0, r) = (x0, x1); A is even in r, B odd.
struct AxialParts {
  QPoly a;
  QPoly b;
};

QuaternionFloat eval_axial(const AxialParts& parts, double x0, double r, const QuaternionFloat& omega);

/// Throws NotAxial if f(x0 + omega r) is not affine in omega at sampled points.
AxialParts axial_decompose(const QPoly& f, std::uint64_t seed = 11);

/// sum_k Q_k alpha_k for the given coefficients.
QPoly synthesize_appell(std::span<const QuaternionExact> alpha);
/// sum_k q^k a_k for the given coefficients.
QPoly synthesize_slice(std::span<const QuaternionExact> a);

/// Coefficients alpha_k with g = sum_k Q_k alpha_k, read from the real axis
/// and re-verified symbolically. Throws NotRegular, NotAxial or ExpansionMismatch.
std::vector<QuaternionExact> appell_expand(const QPoly& g);

}  // namespace appellkit
