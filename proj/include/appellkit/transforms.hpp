#pragma once

/// @file transforms.hpp
/// @brief Hermite functions, the Segal-Bargmann kernels A^S and A^F, the
/// transforms B^F and (B^S)^{-1}, and the bridge Upsilon with its kernel L.
///
/// Functions on the line are given by orthonormal Hermite coefficients, so the
/// coefficient modes are exact diagonal maps. The quadrature modes compute the
/// same objects from the defining integrals and serve as independent checks.

#include <complex>
#include <vector>

#include "appellkit/appell.hpp"
#include "appellkit/quadrature.hpp"
#include "appellkit/spaces.hpp"

namespace appellkit {

/// Orthonormal Hermite functions eta_0..eta_K on the line.
class HermiteBasis {
 public:
  explicit HermiteBasis(unsigned kmax) : kmax_(kmax) {}

  unsigned max_index() const { return kmax_; }
  /// Throws IndexError if n > K.
  double eval(unsigned n, double x) const;
  /// eta_0(x), ..., eta_K(x).
  std::vector<double> eval_all(double x) const;

 private:
  unsigned kmax_;
};

/// eta_0(x), ..., eta_n(x) by the three-term recurrence.
std::vector<double> hermite_functions(unsigned n, double x);

/// phi = sum_j eta_j beta_j with quaternion coefficients.
struct L2Function {
  std::vector<QuaternionFloat> beta;

  double norm_sq() const;
  double norm() const;
  QuaternionFloat operator()(double x) const;
};

/// sum_{k<=K} q^k eta_k(x) / sqrt(k!), tail from |q^k| = |q|^k and |eta_k| <= 1.
TruncatedValue kernel_AS_series(const QuaternionFloat& q, double x, unsigned kmax);
/// qexp(-(q^2 + x^2)/2 + sqrt(2) q x), without any normalization constant.
QuaternionFloat kernel_AS_closed_raw(const QuaternionFloat& q, double x);
/// Ratio series/raw at (q, x) = (0, 0), measured once.
double kernel_AS_calibration();
/// The calibrated closed form.
QuaternionFloat kernel_AS_closed(const QuaternionFloat& q, double x);

/// sum_{k<=K} Q_k(q) eta_k(x) / sqrt(k!), tail as for A^S.
TruncatedValue kernel_AF(const QuaternionFloat& q, double x, unsigned kmax);

/// sum_{k > K} r^k / sqrt(k!).
double sqrt_factorial_tail(double r, unsigned kmax);

enum class TransformMode { coefficient, quadrature, composite };

/// alpha_k = beta_k / sqrt(k!), weight fock.
AppellSeries<double> bargmann_BF(const L2Function& phi);
/// alpha_k = (1/sqrt(k!)) int eta_k phi dx by Gauss-Hermite function weights.
AppellSeries<double> bargmann_BF_quadrature(const L2Function& phi, const QuadratureRule& hermite);
/// Coefficient mode, cross-checked against quadrature; throws QuadratureFailure
/// when they differ by more than tol.
AppellSeries<double> bargmann_BF_checked(const L2Function& phi, const QuadratureRule& hermite, double tol = 1e-8);

/// beta_k = sqrt(k!) a_k.
L2Function bargmann_BS_inverse(const SliceSeries<double>& f);
/// phi(x) = int A^S(conj z, x) f_i(z) dmu_i(z) on the plane rule, projected on
/// eta_0..eta_N with the Hermite rule.
L2Function bargmann_BS_inverse_quadrature(const SliceSeries<double>& f, const ImaginaryUnit& unit,
                                          const QuadratureRule& plane, const QuadratureRule& hermite);
L2Function bargmann_BS_inverse_checked(const SliceSeries<double>& f, const ImaginaryUnit& unit,
                                       const QuadratureRule& plane, const QuadratureRule& hermite,
                                       double tol = 1e-8);

/// Upsilon in one mode. direct copies a_k; integral takes
/// alpha_k = int conj(z)^k / k! f_i(z) dmu_i(z); composite is B^F o (B^S)^{-1}
/// through the quadrature forms of both.
AppellSeries<double> upsilon(const SliceSeries<double>& f, const ImaginaryUnit& unit, TransformMode mode,
                             const QuadratureRule& plane, const QuadratureRule& hermite);

struct UpsilonReport {
  AppellSeries<double> result;
  double mode_spread = 0.0;
  double unit_spread = 0.0;
};

/// Runs every mode on each unit; throws QuadratureFailure when modes differ and
/// UnitDependence when integral results differ across units, both beyond tol.
UpsilonReport upsilon_checked(const SliceSeries<double>& f, const std::vector<ImaginaryUnit>& units,
                              const QuadratureRule& plane, const QuadratureRule& hermite, double tol = 1e-8);

/// Upsilon(f)(q) = int L(q, z) f_i(z) dmu_i(z) evaluated pointwise.
QuaternionFloat upsilon_eval_integral(const SliceSeries<double>& f, const ImaginaryUnit& unit,
                                      const QuaternionFloat& q, const QuadratureRule& plane);

/// int conj(z)^k z^j dmu(z). Throws ExactnessExceeded if k + j is beyond the rule.
std::complex<double> gaussian_moment(unsigned k, unsigned j, const QuadratureRule& plane);

/// L(q, z) = sum_{k<=K} Q_k(q) conj(z)^k / k! with z a point of the slice.
QuaternionFloat kernel_L(const QuaternionFloat& q, const QuaternionFloat& z, unsigned kmax);

/// int L(q, z) conj(L(p, z)) dmu_i(z). Throws ExactnessExceeded if 2K is beyond the rule.
QuaternionFloat kernel_L_selfproduct(const QuaternionFloat& q, const QuaternionFloat& p, const ImaginaryUnit& unit,
                                     const QuadratureRule& plane, unsigned kmax);

/// int e^{x conj(z)} z^n dmu(z), expected x^n.
std::complex<double> exponential_monomial_integral(double x, unsigned n, const QuadratureRule& plane);
/// int e^{x conj(z) + y z} dmu(z), expected e^{xy}.
std::complex<double> exponential_pair_integral(double x, double y, const QuadratureRule& plane);

/// The slice point a + b*unit for a complex node.
inline QuaternionFloat slice_embed(const ImaginaryUnit& unit, std::complex<double> z) {
  return unit.slice_point(z.real(), z.imag());
}

}  // namespace appellkit
