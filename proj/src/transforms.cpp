#include "appellkit/transforms.hpp"

#include <cmath>
#include <numbers>

namespace appellkit {

namespace {

double inv_sqrt_factorial(unsigned k) { return std::exp(-0.5 * std::lgamma(k + 1.0)); }
double inv_factorial(unsigned k) { return std::exp(-std::lgamma(k + 1.0)); }

void require_exact(unsigned degree, const QuadratureRule& rule, const char* what) {
  if (degree > rule.exactness) {
    throw ExactnessExceeded(std::string(what) + " needs degree " + std::to_string(degree) +
                            " but the rule is exact only through " + std::to_string(rule.exactness));
  }
}

void require_kind(const QuadratureRule& rule, QuadratureKind kind) {
  if (rule.kind != kind) {
    throw QuadratureFailure(std::string("expected a ") + to_string(kind) + " rule, got " + to_string(rule.kind));
  }
}

// f at every plane node, embedded in the slice of `unit`.
std::vector<QuaternionFloat> slice_values(const SliceSeries<double>& f, const ImaginaryUnit& unit,
                                          const QuadratureRule& plane) {
  std::vector<QuaternionFloat> out(plane.size());
  for (std::size_t m = 0; m < plane.size(); ++m) {
    out[m] = eval_series(f, slice_embed(unit, plane_node(plane, m)));
  }
  return out;
}

double max_coeff_gap(const AppellSeries<double>& a, const AppellSeries<double>& b) {
  double gap = 0.0;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    gap = std::max(gap, norm(a.coeff(k) - b.coeff(k)));
  }
  return gap;
}

}  // namespace

std::vector<double> hermite_functions(unsigned n, double x) {
  std::vector<double> eta(n + 1);
  eta[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n >= 1) {
    eta[1] = std::sqrt(2.0) * x * eta[0];
  }
  for (unsigned k = 1; k < n; ++k) {
    eta[k + 1] = std::sqrt(2.0 / (k + 1.0)) * x * eta[k] - std::sqrt(k / (k + 1.0)) * eta[k - 1];
  }
  return eta;
}

double HermiteBasis::eval(unsigned n, double x) const {
  if (n > kmax_) {
    throw IndexError("Hermite index " + std::to_string(n) + " above " + std::to_string(kmax_));
  }
  return hermite_functions(n, x)[n];
}

std::vector<double> HermiteBasis::eval_all(double x) const { return hermite_functions(kmax_, x); }

double L2Function::norm_sq() const {
  double acc = 0.0;
  for (const auto& b : beta) {
    acc += appellkit::norm_sq(b);
  }
  return acc;
}

double L2Function::norm() const { return std::sqrt(norm_sq()); }

QuaternionFloat L2Function::operator()(double x) const {
  if (beta.empty()) {
    return {};
  }
  const auto eta = hermite_functions(static_cast<unsigned>(beta.size() - 1), x);
  QuaternionFloat acc;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    acc += beta[j] * eta[j];
  }
  return acc;
}

double sqrt_factorial_tail(double r, unsigned kmax) {
  if (r == 0.0) {
    return 0.0;
  }
  const double log_r = std::log(r);
  double sum = 0.0;
  for (unsigned k = kmax + 1;; ++k) {
    const double term = std::exp(k * log_r - 0.5 * std::lgamma(k + 1.0));
    sum += term;
    // successive ratios r / sqrt(k+1) decrease from here on
    const double rho = r / std::sqrt(k + 1.0);
    if (rho < 1.0) {
      const double remainder = term * rho / (1.0 - rho);
      if (remainder <= 1e-17 * sum || remainder < 1e-300) {
        return sum + remainder;
      }
    }
  }
}

TruncatedValue kernel_AS_series(const QuaternionFloat& q, double x, unsigned kmax) {
  const auto eta = hermite_functions(kmax, x);
  TruncatedValue out;
  QuaternionFloat power(1.0);
  for (unsigned k = 0; k <= kmax; ++k) {
    out.value += power * (eta[k] * inv_sqrt_factorial(k));
    power = power * q;
  }
  out.tail = sqrt_factorial_tail(norm(q), kmax);
  return out;
}

QuaternionFloat kernel_AS_closed_raw(const QuaternionFloat& q, double x) {
  const QuaternionFloat exponent = (q * q + QuaternionFloat(x * x)) * -0.5 + q * (std::sqrt(2.0) * x);
  return qexp(exponent);
}

double kernel_AS_calibration() {
  static const double c = [] {
    const QuaternionFloat zero;
    return kernel_AS_series(zero, 0.0, 0).value.x0 / kernel_AS_closed_raw(zero, 0.0).x0;
  }();
  return c;
}

QuaternionFloat kernel_AS_closed(const QuaternionFloat& q, double x) {
  return kernel_AS_closed_raw(q, x) * kernel_AS_calibration();
}

TruncatedValue kernel_AF(const QuaternionFloat& q, double x, unsigned kmax) {
  const auto eta = hermite_functions(kmax, x);
  const auto qk = qk_eval_all(kmax, q);
  TruncatedValue out;
  for (unsigned k = 0; k <= kmax; ++k) {
    out.value += qk[k] * (eta[k] * inv_sqrt_factorial(k));
  }
  out.tail = sqrt_factorial_tail(norm(q), kmax);
  return out;
}

AppellSeries<double> bargmann_BF(const L2Function& phi) {
  std::vector<QuaternionFloat> alpha(phi.beta.size());
  for (unsigned k = 0; k < alpha.size(); ++k) {
    alpha[k] = phi.beta[k] * inv_sqrt_factorial(k);
  }
  return AppellSeries<double>(WeightSequence::fock(), std::move(alpha));
}

AppellSeries<double> bargmann_BF_quadrature(const L2Function& phi, const QuadratureRule& hermite) {
  require_kind(hermite, QuadratureKind::gauss_hermite_line);
  const std::size_t n = phi.beta.size();
  if (n == 0) {
    return AppellSeries<double>(WeightSequence::fock());
  }
  require_exact(static_cast<unsigned>(2 * (n - 1)), hermite, "B^F quadrature");
  std::vector<QuaternionFloat> alpha(n);
  for (std::size_t i = 0; i < hermite.size(); ++i) {
    const auto eta = hermite_functions(static_cast<unsigned>(n - 1), hermite.x[i]);
    QuaternionFloat value;
    for (std::size_t j = 0; j < n; ++j) {
      value += phi.beta[j] * eta[j];
    }
    for (std::size_t k = 0; k < n; ++k) {
      alpha[k] += value * (hermite.function_weights[i] * eta[k]);
    }
  }
  for (unsigned k = 0; k < n; ++k) {
    alpha[k] *= inv_sqrt_factorial(k);
  }
  return AppellSeries<double>(WeightSequence::fock(), std::move(alpha));
}

AppellSeries<double> bargmann_BF_checked(const L2Function& phi, const QuadratureRule& hermite, double tol) {
  AppellSeries<double> exact = bargmann_BF(phi);
  const double gap = max_coeff_gap(exact, bargmann_BF_quadrature(phi, hermite));
  if (gap > tol) {
    throw QuadratureFailure("B^F modes differ by " + std::to_string(gap));
  }
  return exact;
}

L2Function bargmann_BS_inverse(const SliceSeries<double>& f) {
  L2Function phi;
  phi.beta.resize(f.size());
  for (unsigned k = 0; k < f.size(); ++k) {
    phi.beta[k] = f.coeffs()[k] / inv_sqrt_factorial(k);
  }
  return phi;
}

L2Function bargmann_BS_inverse_quadrature(const SliceSeries<double>& f, const ImaginaryUnit& unit,
                                          const QuadratureRule& plane, const QuadratureRule& hermite) {
  require_kind(plane, QuadratureKind::gaussian_plane_polar);
  require_kind(hermite, QuadratureKind::gauss_hermite_line);
  L2Function phi;
  const std::size_t n = f.size();
  if (n == 0) {
    return phi;
  }
  require_exact(static_cast<unsigned>(2 * (n - 1)), hermite, "(B^S)^{-1} projection");
  const auto fz = slice_values(f, unit, plane);
  std::vector<QuaternionFloat> zbar(plane.size());
  for (std::size_t m = 0; m < plane.size(); ++m) {
    zbar[m] = slice_embed(unit, std::conj(plane_node(plane, m)));
  }
  phi.beta.assign(n, QuaternionFloat());
  for (std::size_t i = 0; i < hermite.size(); ++i) {
    const double x = hermite.x[i];
    QuaternionFloat value;
    for (std::size_t m = 0; m < plane.size(); ++m) {
      value += (kernel_AS_closed(zbar[m], x) * fz[m]) * plane.w[m];
    }
    const auto eta = hermite_functions(static_cast<unsigned>(n - 1), x);
    for (std::size_t k = 0; k < n; ++k) {
      phi.beta[k] += value * (hermite.function_weights[i] * eta[k]);
    }
  }
  return phi;
}

L2Function bargmann_BS_inverse_checked(const SliceSeries<double>& f, const ImaginaryUnit& unit,
                                       const QuadratureRule& plane, const QuadratureRule& hermite, double tol) {
  L2Function exact = bargmann_BS_inverse(f);
  const L2Function quad = bargmann_BS_inverse_quadrature(f, unit, plane, hermite);
  for (std::size_t k = 0; k < exact.beta.size(); ++k) {
    const double gap = norm(exact.beta[k] - quad.beta[k]);
    if (gap > tol * std::max(1.0, norm(exact.beta[k]))) {
      throw QuadratureFailure("(B^S)^{-1} modes differ by " + std::to_string(gap) + " at k=" + std::to_string(k));
    }
  }
  return exact;
}

AppellSeries<double> upsilon(const SliceSeries<double>& f, const ImaginaryUnit& unit, TransformMode mode,
                             const QuadratureRule& plane, const QuadratureRule& hermite) {
  const WeightSequence fock = WeightSequence::fock();
  switch (mode) {
    case TransformMode::coefficient:
      return AppellSeries<double>(fock, f.coeffs());
    case TransformMode::composite:
      return bargmann_BF_quadrature(bargmann_BS_inverse_quadrature(f, unit, plane, hermite), hermite);
    case TransformMode::quadrature:
      break;
  }
  require_kind(plane, QuadratureKind::gaussian_plane_polar);
  const std::size_t n = f.size();
  if (n == 0) {
    return AppellSeries<double>(fock);
  }
  require_exact(static_cast<unsigned>(2 * (n - 1)), plane, "Upsilon integral");
  const auto fz = slice_values(f, unit, plane);
  std::vector<QuaternionFloat> alpha(n);
  for (std::size_t m = 0; m < plane.size(); ++m) {
    const std::complex<double> zbar = std::conj(plane_node(plane, m));
    std::complex<double> power(plane.w[m], 0.0);
    for (unsigned k = 0; k < n; ++k) {
      alpha[k] += slice_embed(unit, power) * fz[m];
      power *= zbar;
    }
  }
  for (unsigned k = 0; k < n; ++k) {
    alpha[k] *= inv_factorial(k);
  }
  return AppellSeries<double>(fock, std::move(alpha));
}

UpsilonReport upsilon_checked(const SliceSeries<double>& f, const std::vector<ImaginaryUnit>& units,
                              const QuadratureRule& plane, const QuadratureRule& hermite, double tol) {
  if (units.empty()) {
    throw DomainError("Upsilon check needs at least one imaginary unit");
  }
  UpsilonReport rep{upsilon(f, units.front(), TransformMode::coefficient, plane, hermite)};
  const AppellSeries<double> first = upsilon(f, units.front(), TransformMode::quadrature, plane, hermite);
  const AppellSeries<double> composite = upsilon(f, units.front(), TransformMode::composite, plane, hermite);
  rep.mode_spread = std::max(max_coeff_gap(rep.result, first), max_coeff_gap(rep.result, composite));
  for (std::size_t u = 1; u < units.size(); ++u) {
    rep.unit_spread = std::max(rep.unit_spread,
                               max_coeff_gap(first, upsilon(f, units[u], TransformMode::quadrature, plane, hermite)));
  }
  if (rep.mode_spread > tol) {
    throw QuadratureFailure("Upsilon modes differ by " + std::to_string(rep.mode_spread));
  }
  if (rep.unit_spread > tol) {
    throw UnitDependence("Upsilon differs across imaginary units by " + std::to_string(rep.unit_spread));
  }
  return rep;
}

QuaternionFloat upsilon_eval_integral(const SliceSeries<double>& f, const ImaginaryUnit& unit,
                                      const QuaternionFloat& q, const QuadratureRule& plane) {
  require_kind(plane, QuadratureKind::gaussian_plane_polar);
  if (f.size() == 0) {
    return {};
  }
  const unsigned kmax = static_cast<unsigned>(f.size() - 1);
  require_exact(2 * kmax, plane, "Upsilon integral");
  const auto fz = slice_values(f, unit, plane);
  QuaternionFloat acc;
  for (std::size_t m = 0; m < plane.size(); ++m) {
    acc += (kernel_L(q, slice_embed(unit, plane_node(plane, m)), kmax) * fz[m]) * plane.w[m];
  }
  return acc;
}

std::complex<double> gaussian_moment(unsigned k, unsigned j, const QuadratureRule& plane) {
  require_kind(plane, QuadratureKind::gaussian_plane_polar);
  require_exact(k + j, plane, "Gaussian moment");
  std::complex<double> acc;
  for (std::size_t m = 0; m < plane.size(); ++m) {
    const std::complex<double> z = plane_node(plane, m);
    std::complex<double> term(plane.w[m], 0.0);
    for (unsigned a = 0; a < k; ++a) {
      term *= std::conj(z);
    }
    for (unsigned b = 0; b < j; ++b) {
      term *= z;
    }
    acc += term;
  }
  return acc;
}

QuaternionFloat kernel_L(const QuaternionFloat& q, const QuaternionFloat& z, unsigned kmax) {
  const auto qk = qk_eval_all(kmax, q);
  const QuaternionFloat zbar = conj(z);
  QuaternionFloat power(1.0);
  QuaternionFloat acc;
  for (unsigned k = 0; k <= kmax; ++k) {
    acc += qk[k] * power * inv_factorial(k);
    power = power * zbar;
  }
  return acc;
}

QuaternionFloat kernel_L_selfproduct(const QuaternionFloat& q, const QuaternionFloat& p, const ImaginaryUnit& unit,
                                     const QuadratureRule& plane, unsigned kmax) {
  require_kind(plane, QuadratureKind::gaussian_plane_polar);
  require_exact(2 * kmax, plane, "L self-product");
  QuaternionFloat acc;
  for (std::size_t m = 0; m < plane.size(); ++m) {
    const QuaternionFloat z = slice_embed(unit, plane_node(plane, m));
    acc += (kernel_L(q, z, kmax) * conj(kernel_L(p, z, kmax))) * plane.w[m];
  }
  return acc;
}

std::complex<double> exponential_monomial_integral(double x, unsigned n, const QuadratureRule& plane) {
  require_kind(plane, QuadratureKind::gaussian_plane_polar);
  std::complex<double> acc;
  for (std::size_t m = 0; m < plane.size(); ++m) {
    const std::complex<double> z = plane_node(plane, m);
    acc += plane.w[m] * std::exp(x * std::conj(z)) * std::pow(z, static_cast<int>(n));
  }
  return acc;
}

std::complex<double> exponential_pair_integral(double x, double y, const QuadratureRule& plane) {
  require_kind(plane, QuadratureKind::gaussian_plane_polar);
  std::complex<double> acc;
  for (std::size_t m = 0; m < plane.size(); ++m) {
    const std::complex<double> z = plane_node(plane, m);
    acc += plane.w[m] * std::exp(x * std::conj(z) + y * z);
  }
  return acc;
}

}  // namespace appellkit
