#pragma once

/// @file quadrature.hpp
/// @brief Gauss rules on an interval, the line, the half line, and the
/// Gaussian measure (1/pi) e^{-|z|^2} dA on a complex plane.
///
/// Nodes start from the Golub-Welsch eigenvalues and are polished by Newton
/// steps on the three-term recurrence; weights come from the closed-form
/// derivative formulas, which keep full relative accuracy for tiny weights.

#include <complex>
#include <vector>

namespace appellkit {

enum class QuadratureKind { gauss_legendre_interval, gauss_hermite_line, gauss_laguerre, gaussian_plane_polar };

const char* to_string(QuadratureKind kind);

struct QuadratureRule {
  QuadratureKind kind = QuadratureKind::gauss_legendre_interval;
  std::vector<double> x;
  /// Imaginary parts of the nodes; plane rule only.
  std::vector<double> y;
  /// Weights against the rule's weight function (1, e^{-x^2}, e^{-x}, or
  /// the normalized Gaussian measure for the plane).
  std::vector<double> w;
  /// Hermite only: lambda_i = w_i e^{x_i^2}, so sum lambda_i g(x_i) ~ int g dx.
  std::vector<double> function_weights;
  /// Total polynomial degree integrated exactly.
  unsigned exactness = 0;

  std::size_t size() const { return w.size(); }
};

/// n-point Gauss-Legendre on [a, b]; exact through degree 2n-1.
QuadratureRule gauss_legendre(unsigned n, double a = 0.0, double b = 1.0);
/// n-point Gauss-Hermite for the weight e^{-x^2}; exact through degree 2n-1.
QuadratureRule gauss_hermite(unsigned n);
/// n-point Gauss-Laguerre for the weight e^{-x} on [0, inf); exact through 2n-1.
QuadratureRule gauss_laguerre(unsigned n);

/// Polar product rule for (1/pi) e^{-|z|^2} dA: Gauss-Laguerre in s = |z|^2
/// (n nodes) times the M-point trapezoid rule in angle. Integrates
/// conj(z)^k z^j exactly whenever k + j <= min(4n - 2, M - 1).
QuadratureRule gaussian_plane(unsigned radial = 64, unsigned angular = 128);

inline std::complex<double> plane_node(const QuadratureRule& r, std::size_t i) { return {r.x[i], r.y[i]}; }

}  // namespace appellkit
