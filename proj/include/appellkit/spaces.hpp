#pragma once

/// @file spaces.hpp
/// @brief Weighted coefficient spaces over the Appell basis Q_k and the slice
/// monomials q^k: inner products, norms, pointwise bounds and truncated kernels.
///
/// Series are finite: coefficient k beyond the truncation reads as zero.
/// Everything is templated on the scalar field so identities that hold on
/// truncations can be checked in exact rational arithmetic.

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "appellkit/appell.hpp"
#include "appellkit/quaternion.hpp"

namespace appellkit {

enum class WeightKind { hardy, fock, dirichlet, bergman, custom };

/// A positive weight sequence b_k (or c_k). Immutable and cheap to copy.
class WeightSequence {
 public:
  using Generator = std::function<Rational(unsigned)>;

  static WeightSequence hardy();
  static WeightSequence fock();
  /// c_k = k, with c_0 overridden to 1 so the inner product stays definite.
  static WeightSequence dirichlet();
  static WeightSequence bergman();
  static WeightSequence custom(std::string name, Generator generator);
  /// One of "hardy", "fock", "dirichlet", "bergman"; DomainError otherwise.
  static WeightSequence named(std::string_view name);

  WeightKind kind() const { return impl_->kind; }
  const std::string& name() const { return impl_->name; }

  Rational value(unsigned k) const;
  double value_d(unsigned k) const;
  double log_value(unsigned k) const;

  /// Recorded from a scan of k <= 64, never enforced.
  bool non_decreasing() const { return impl_->non_decreasing; }
  bool c0_overridden() const { return impl_->c0_overridden; }

  /// Convergence radius of sum_k x^k / b_k (ratio test; +inf for fock).
  double radius() const { return impl_->radius; }

  /// Same name and equal values for k <= upto.
  bool same_as(const WeightSequence& o, unsigned upto = 64) const;

 private:
  struct Impl {
    WeightKind kind = WeightKind::custom;
    std::string name;
    Generator generator;
    std::vector<Rational> cached;
    std::vector<double> cached_d;
    bool non_decreasing = false;
    bool c0_overridden = false;
    double radius = 1.0;
  };
  static WeightSequence build(WeightKind kind, std::string name, Generator generator, bool c0_overridden);
  explicit WeightSequence(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Ratio-test limit of value(k+1)/value(k), extrapolated in h = 1/(k+1) from 64 <= k <= 128.
double ratio_limit(const WeightSequence& w);

/// Value at h = 0 of the polynomial interpolating (h_i, y_i) (Neville).
double extrapolate_at_zero(std::vector<double> h, std::vector<double> y);

template <class T>
T weight_value(const WeightSequence& w, unsigned k) {
  if constexpr (std::is_same_v<T, double>) {
    return w.value_d(k);
  } else {
    return w.value(k);
  }
}

struct AppellBasisTag {};
struct SliceBasisTag {};

/// Coefficients x_0..x_N together with the weight of the ambient space.
template <class T, class Basis>
class Series {
 public:
  using Scalar = T;
  using Coefficient = Quaternion<T>;

  explicit Series(WeightSequence weight, std::vector<Coefficient> coeffs = {})
      : weight_(std::move(weight)), coeffs_(std::move(coeffs)) {}

  /// The series with a single coefficient c at index k.
  static Series unit(WeightSequence weight, unsigned k, Coefficient c = Coefficient(T(1))) {
    std::vector<Coefficient> v(k + 1);
    v[k] = std::move(c);
    return Series(std::move(weight), std::move(v));
  }

  const WeightSequence& weight() const { return weight_; }
  const std::vector<Coefficient>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  /// Highest stored index; -1 when empty.
  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }

  Coefficient coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coefficient(); }
  void set(std::size_t k, Coefficient c) {
    if (k >= coeffs_.size()) {
      coeffs_.resize(k + 1);
    }
    coeffs_[k] = std::move(c);
  }

  Series& operator+=(const Series& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
      coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      coeffs_[k] += o.coeffs_[k];
    }
    return *this;
  }
  Series& operator-=(const Series& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
      coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  /// Right multiplication of every coefficient, the scalar action of the space.
  friend Series operator*(Series a, const Coefficient& lambda) {
    for (auto& c : a.coeffs_) {
      c = c * lambda;
    }
    return a;
  }
  friend Series operator*(const T& s, Series a) {
    for (auto& c : a.coeffs_) {
      c *= s;
    }
    return a;
  }

  /// Coefficientwise; trailing zeros are ignored, weights are not compared.
  friend bool operator==(const Series& a, const Series& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (a.coeff(k) != b.coeff(k)) {
        return false;
      }
    }
    return true;
  }

 private:
  WeightSequence weight_;
  std::vector<Coefficient> coeffs_;
};

template <class T>
using AppellSeries = Series<T, AppellBasisTag>;
template <class T>
using SliceSeries = Series<T, SliceBasisTag>;

template <class Basis>
Series<double, Basis> to_float(const Series<Rational, Basis>& s) {
  std::vector<QuaternionFloat> v;
  v.reserve(s.size());
  for (const auto& c : s.coeffs()) {
    v.push_back(to_float(c));
  }
  return Series<double, Basis>(s.weight(), std::move(v));
}

/// sum_k b_k conj(alpha_k) beta_k. Throws WeightMismatch.
template <class T, class Basis>
Quaternion<T> inner(const Series<T, Basis>& f, const Series<T, Basis>& g) {
  const unsigned n = static_cast<unsigned>(std::max(f.size(), g.size()));
  if (!f.weight().same_as(g.weight(), std::max(n, 64u))) {
    throw WeightMismatch("inner product across weights " + f.weight().name() + " and " + g.weight().name());
  }
  Quaternion<T> acc;
  const std::size_t m = std::min(f.size(), g.size());
  for (std::size_t k = 0; k < m; ++k) {
    acc += (conj(f.coeffs()[k]) * g.coeffs()[k]) * weight_value<T>(f.weight(), static_cast<unsigned>(k));
  }
  return acc;
}

/// sum_k b_k |alpha_k|^2, exact for rational series.
template <class T, class Basis>
T norm_sq(const Series<T, Basis>& f) {
  T acc(0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    acc += norm_sq(f.coeffs()[k]) * weight_value<T>(f.weight(), static_cast<unsigned>(k));
  }
  return acc;
}

template <class T, class Basis>
double norm(const Series<T, Basis>& f) {
  return std::sqrt(to_double(norm_sq(f)));
}

/// sum_k Q_k(q) alpha_k.
template <class T>
QuaternionFloat eval_series(const AppellSeries<T>& f, const QuaternionFloat& q) {
  if (f.size() == 0) {
    return {};
  }
  const auto qk = qk_eval_all(static_cast<unsigned>(f.size() - 1), q);
  QuaternionFloat acc;
  for (std::size_t k = 0; k < f.size(); ++k) {
    acc += qk[k] * to_float(f.coeffs()[k]);
  }
  return acc;
}

/// sum_k q^k a_k.
template <class T>
QuaternionFloat eval_series(const SliceSeries<T>& f, const QuaternionFloat& q) {
  QuaternionFloat acc;
  QuaternionFloat power(1.0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    acc += power * to_float(f.coeffs()[k]);
    power = power * q;
  }
  return acc;
}

/// sum_{k >= start} x^k / b_k, summed until the remainder is below double
/// resolution. Throws OutOfDomain when x is at or beyond the radius.
double weight_power_sum(const WeightSequence& w, double x, unsigned start = 0);

/// (sum_k |q|^{2k}/b_k)^{1/2} ||f||, in closed form for fock and hardy.
/// Throws OutOfDomain when |q|^2 reaches the convergence radius.
double pointwise_bound(const AppellSeries<double>& f, const QuaternionFloat& q);
double pointwise_bound(const AppellSeries<Rational>& f, const QuaternionFloat& q);

/// sum_{k<=N} Q_k(q) conj(Q_k(p)) / b_k with tail bound sum_{k>N} (|q||p|)^k / b_k.
/// Throws OutOfDomain if |q|^2 or |p|^2 reaches the radius.
TruncatedValue kernel_eval(const WeightSequence& w, const QuaternionFloat& q, const QuaternionFloat& p,
                           unsigned n);

/// K_p as a series: alpha_k = conj(Q_k(p)) / b_k for k <= N.
AppellSeries<double> kernel_section(const WeightSequence& w, const QuaternionFloat& p, unsigned n);

/// |<K_p, f> - f(p)| with the section truncated at f's truncation.
double reproducing_check(const QuaternionFloat& p, const AppellSeries<double>& f);

/// Uniform random quaternion with components in [-scale, scale] and the
/// matching exact rational with denominator `den`.
QuaternionExact random_exact(std::mt19937_64& rng, long range = 9, long den = 7);
QuaternionFloat random_float(std::mt19937_64& rng, double scale = 1.0);

/// Random truncated series with N+1 coefficients.
AppellSeries<Rational> random_appell_exact(std::mt19937_64& rng, const WeightSequence& w, unsigned n);
SliceSeries<Rational> random_slice_exact(std::mt19937_64& rng, const WeightSequence& w, unsigned n);
AppellSeries<double> random_appell(std::mt19937_64& rng, const WeightSequence& w, unsigned n);
SliceSeries<double> random_slice(std::mt19937_64& rng, const WeightSequence& w, unsigned n);

/// A point with |q| = radius and uniformly random direction.
QuaternionFloat random_point(std::mt19937_64& rng, double radius);

}  // namespace appellkit
