#pragma once

/// @file operators.hpp
/// @brief Shift, annihilation, weighted shift and the two backward shifts,
/// acting on Appell coefficient series.
///
/// On the basis: S Q_k = Q_{k+1}, (dbar/2) Q_k = k Q_{k-1}, T_gamma Q_k =
/// gamma_k Q_{k+1}, M Q_k = Q_{k-1} with M Q_0 = 0.

#include <functional>
#include <optional>
#include <vector>

#include "appellkit/check.hpp"
#include "appellkit/quadrature.hpp"
#include "appellkit/spaces.hpp"

namespace appellkit {

/// S: alpha'_{k+1} = alpha_k.
template <class T>
AppellSeries<T> shift_S(const AppellSeries<T>& f) {
  std::vector<Quaternion<T>> v(f.size() + 1);
  for (std::size_t k = 0; k < f.size(); ++k) {
    v[k + 1] = f.coeffs()[k];
  }
  return AppellSeries<T>(f.weight(), std::move(v));
}

/// dbar/2: alpha'_k = (k+1) alpha_{k+1}.
template <class T>
AppellSeries<T> annihilate(const AppellSeries<T>& f) {
  std::vector<Quaternion<T>> v(f.size() > 0 ? f.size() - 1 : 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = f.coeffs()[k + 1] * T(static_cast<long>(k + 1));
  }
  return AppellSeries<T>(f.weight(), std::move(v));
}

/// M: alpha'_k = alpha_{k+1}; the Q_0 coefficient is dropped.
template <class T>
AppellSeries<T> backward_M(const AppellSeries<T>& f) {
  std::vector<Quaternion<T>> v(f.size() > 0 ? f.size() - 1 : 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = f.coeffs()[k + 1];
  }
  return AppellSeries<T>(f.weight(), std::move(v));
}

/// f(t q) as a series: alpha_k t^k.
AppellSeries<double> dilate(const AppellSeries<double>& f, double t);

/// The weight gamma_k of T_gamma. gamma_0 must be 1.
class WeightedShiftSpec {
 public:
  using Gamma = std::function<double(unsigned)>;

  /// Throws DomainError unless gamma(0) == 1.
  explicit WeightedShiftSpec(Gamma gamma);

  static WeightedShiftSpec identity();
  /// gamma_k = values[k] for k < values.size(), 1 afterwards.
  static WeightedShiftSpec from_values(std::vector<double> values);

  double operator()(unsigned k) const { return gamma_(k); }

 private:
  Gamma gamma_;
};

/// T_gamma: alpha'_{k+1} = gamma_k alpha_k.
AppellSeries<double> weighted_shift(const WeightedShiftSpec& spec, const AppellSeries<double>& f);

struct GammaRecurrence {
  bool holds = true;
  /// First k with (k+1) gamma_k - k gamma_{k-1} != 1, if any.
  std::optional<unsigned> first_failure;
  double max_defect = 0.0;
};

/// Checks (k+1) gamma_k - k gamma_{k-1} = 1 for 1 <= k <= K within tol.
GammaRecurrence gamma_recurrence_check(const WeightedShiftSpec& spec, unsigned kmax, double tol = 1e-12);

/// (dbar/2) T_gamma f - T_gamma (dbar/2) f, the operator difference.
AppellSeries<double> commutator_difference(const WeightedShiftSpec& spec, const AppellSeries<double>& f);
/// [A, B] f = A(B f) - B(A f) with A = (dbar/2) T_gamma and B = T_gamma (dbar/2).
/// Both are diagonal on Q_k, so this reading is identically zero.
AppellSeries<double> commutator_of_composites(const WeightedShiftSpec& spec, const AppellSeries<double>& f);

/// |<(dbar/2) f, g> - <f, S g>|; zero in exact arithmetic under fock.
template <class T>
double adjoint_defect_S(const AppellSeries<T>& f, const AppellSeries<T>& g) {
  return norm(inner(annihilate(f), g) - inner(f, shift_S(g)));
}

/// |<M f, g> - <f, S g>|; zero in exact arithmetic under hardy.
template <class T>
double adjoint_defect_M(const AppellSeries<T>& f, const AppellSeries<T>& g) {
  return norm(inner(backward_M(f), g) - inner(f, shift_S(g)));
}

/// int_eps^1 (1/t) (dbar/2)[f(t .)] dt by the given rule on [0, 1], mapped to [eps, 1].
AppellSeries<double> backward_R_partial(const AppellSeries<double>& f, double eps, const QuadratureRule& rule);

/// The eps -> 0 limit. Throws QuadratureFailure if it differs from backward_M
/// by more than tol in any coefficient.
AppellSeries<double> backward_R_integral(const AppellSeries<double>& f, const QuadratureRule& rule,
                                         double tol = 1e-10);

struct BackwardInequality {
  /// ||R f||^2
  double lhs = 0.0;
  /// ||f||^2 - |f(0)|^2
  double rhs = 0.0;
  bool holds = false;
  /// lhs == rhs within tol; expected exactly when the weight is hardy.
  bool equality = false;
};

/// Throws DomainError when the weight is not non-decreasing.
BackwardInequality backward_inequality_check(const AppellSeries<double>& f, const QuadratureRule& rule,
                                             double tol = 1e-12);

/// (c_{k+1} / (c_1 c_k)) Q_1 (.) Q_k == Q_{k+1} symbolically for k <= kmax.
CheckResult shift_ck_check(unsigned kmax = 10);
/// ck_product(Q_1, Q_{k-1}) == (c_1 c_{k-1} / c_k) Q_k for 1 <= k <= kmax, so
/// M Q_k = (c_k / (c_1 c_{k-1})) Q_1^{-(.)} (.) Q_k reduces to Q_{k-1}.
CheckResult backward_M_ck_check(unsigned kmax = 8);

}  // namespace appellkit
