#pragma once

/// @file fueter_map.hpp
/// @brief The Fueter map tau = Laplacian on slice series and the induced
/// transport of weights c -> b with b_k = c_{k+2} / ((k+1)^2 (k+2)^2).
///
/// On coefficients tau(sum q^k a_k) = sum Q_k alpha_k with
/// alpha_k = -2(k+1)(k+2) a_{k+2}, so tau kills a_0 + q a_1 and is otherwise
/// a weighted left shift by two.

#include <string>
#include <vector>

#include "appellkit/spaces.hpp"

namespace appellkit {

/// The weight b induced by c, named "fmr(<c>)".
WeightSequence b_from_c(const WeightSequence& c);

/// Coefficient mode; the result lives in b_from_c(f.weight()).
template <class T>
AppellSeries<T> tau_series(const SliceSeries<T>& f) {
  const std::size_t n = f.size() > 2 ? f.size() - 2 : 0;
  std::vector<Quaternion<T>> alpha(n);
  for (std::size_t k = 0; k < n; ++k) {
    alpha[k] = f.coeffs()[k + 2] * T(-2L * static_cast<long>((k + 1) * (k + 2)));
  }
  return AppellSeries<T>(b_from_c(f.weight()), std::move(alpha));
}

/// Symbolic mode: appell_expand(laplacian4(sum q^k a_k)).
AppellSeries<Rational> tau_series_symbolic(const SliceSeries<Rational>& f);
/// Both modes; throws ModeDisagreement unless they agree exactly.
AppellSeries<Rational> tau_series_checked(const SliceSeries<Rational>& f);

/// a_0 = a_1 = 0, a_{k+2} = -alpha_k / (2(k+1)(k+2)); tau of the result is g.
SliceSeries<Rational> tau_preimage(const AppellSeries<Rational>& g, const WeightSequence& c);

struct FmrNormIdentity {
  /// ||tau f||_b^2
  Rational lhs_sq;
  /// 4 (||f||_c^2 - |f(0)|^2 - c_1 |f'(0)|^2) with f(0) = a_0, f'(0) = a_1.
  Rational rhs_sq;
  double lhs = 0.0;
  double rhs = 0.0;
  bool equal = false;
};

FmrNormIdentity fmr_norm_identity(const SliceSeries<Rational>& f);

struct ConvergenceReport {
  std::vector<double> partial_sums;
  /// term_{k+1} / term_k for k < N.
  std::vector<double> ratios;
  /// Ratio limit extrapolated in h = 1/(k+1).
  double limit = 0.0;
  /// Geometric bound on the omitted tail after the last partial sum.
  double tail = 0.0;
  /// limit <= |q|^2 within 1e-6.
  bool converges = false;
};

/// Partial sums of sum_k (k+1)^2 (k+2)^2 / c_{k+2} |q|^{2k}.
/// Throws OutOfDomain unless 0 <= |q| < 1.
ConvergenceReport fmr_convergence_check(const WeightSequence& c, double q_modulus, unsigned n = 200);

struct FmrRow {
  std::string space;
  std::string c_formula;
  std::string b_formula;
  std::string norm_formula;
  WeightSequence c;
  /// The coefficient of |f'(0)|^2 in the norm deficit, i.e. c_1.
  Rational deficit;
  /// Printed value of that coefficient.
  Rational deficit_expected;
  /// b_from_c agrees with the closed form for every k <= checked_up_to.
  bool b_exact = false;
  unsigned checked_up_to = 0;
  std::string note;
};

/// The four rows hardy, fock, dirichlet, bergman, verified for k <= kmax.
std::vector<FmrRow> table1_report(unsigned kmax = 32);

std::string table1_markdown(const std::vector<FmrRow>& rows);
std::string table1_csv(const std::vector<FmrRow>& rows);

}  // namespace appellkit
