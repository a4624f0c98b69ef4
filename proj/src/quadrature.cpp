#include "appellkit/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

#include "appellkit/errors.hpp"

namespace appellkit {

namespace {

// Eigenvalues of the symmetric Jacobi matrix, ascending.
std::vector<double> jacobi_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& off) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw QuadratureFailure("Jacobi eigenvalue solve did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Newton polish of a root of p, where step(x) returns p(x)/p'(x).
template <class Step>
double polish(double x, Step step) {
  for (int it = 0; it < 8; ++it) {
    const double dx = step(x);
    x -= dx;
    if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) {
      break;
    }
  }
  return x;
}

struct LegendreValues {
  double pn;
  double pn1;
};

LegendreValues legendre(unsigned n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (unsigned k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

// eta_n and eta_{n-1} of the orthonormal Hermite functions.
std::pair<double, double> hermite_pair(unsigned n, double x) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  for (unsigned k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1.0)) * x * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

// L_n(x) and L_{n-1}(x).
std::pair<double, double> laguerre(unsigned n, double x) {
  double l0 = 1.0;
  double l1 = 1.0 - x;
  if (n == 0) {
    return {1.0, 0.0};
  }
  for (unsigned k = 1; k < n; ++k) {
    const double l2 = ((2.0 * k + 1.0 - x) * l1 - k * l0) / (k + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return {l1, l0};
}

void require_nodes(unsigned n) {
  if (n == 0) {
    throw QuadratureFailure("a quadrature rule needs at least one node");
  }
}

}  // namespace

const char* to_string(QuadratureKind kind) {
  switch (kind) {
    case QuadratureKind::gauss_legendre_interval: return "gauss-legendre-interval";
    case QuadratureKind::gauss_hermite_line: return "gauss-hermite-line";
    case QuadratureKind::gauss_laguerre: return "gauss-laguerre";
    case QuadratureKind::gaussian_plane_polar: return "gaussian-plane-polar";
  }
  return "unknown";
}

QuadratureRule gauss_legendre(unsigned n, double a, double b) {
  require_nodes(n);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);
  for (unsigned k = 1; k < n; ++k) {
    off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  }
  QuadratureRule rule;
  rule.kind = QuadratureKind::gauss_legendre_interval;
  rule.exactness = 2 * n - 1;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (double x : jacobi_eigenvalues(diag, off)) {
    x = polish(x, [n](double t) {
      const auto [pn, pn1] = legendre(n, t);
      const double dp = n * (t * pn - pn1) / (t * t - 1.0);
      return pn / dp;
    });
    const auto [pn, pn1] = legendre(n, x);
    const double dp = n * (x * pn - pn1) / (x * x - 1.0);
    rule.x.push_back(mid + half * x);
    rule.w.push_back(half * 2.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

QuadratureRule gauss_hermite(unsigned n) {
  require_nodes(n);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);
  for (unsigned k = 1; k < n; ++k) {
    off[k - 1] = std::sqrt(k / 2.0);
  }
  QuadratureRule rule;
  rule.kind = QuadratureKind::gauss_hermite_line;
  rule.exactness = 2 * n - 1;
  for (double x : jacobi_eigenvalues(diag, off)) {
    x = polish(x, [n](double t) {
      const auto [en, en1] = hermite_pair(n, t);
      return en / (std::sqrt(2.0 * n) * en1 - t * en);
    });
    const double en1 = hermite_pair(n, x).second;
    const double lambda = 1.0 / (n * en1 * en1);
    rule.x.push_back(x);
    rule.function_weights.push_back(lambda);
    rule.w.push_back(lambda * std::exp(-x * x));
  }
  return rule;
}

QuadratureRule gauss_laguerre(unsigned n) {
  require_nodes(n);
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);
  for (unsigned k = 0; k < n; ++k) {
    diag[k] = 2.0 * k + 1.0;
  }
  for (unsigned k = 1; k < n; ++k) {
    off[k - 1] = k;
  }
  QuadratureRule rule;
  rule.kind = QuadratureKind::gauss_laguerre;
  rule.exactness = 2 * n - 1;
  for (double x : jacobi_eigenvalues(diag, off)) {
    x = polish(x, [n](double t) {
      const auto [ln, ln1] = laguerre(n, t);
      return ln / (n * (ln - ln1) / t);
    });
    const double ln_next = laguerre(n + 1, x).first;
    rule.x.push_back(x);
    rule.w.push_back(x / ((n + 1.0) * (n + 1.0) * ln_next * ln_next));
  }
  return rule;
}

QuadratureRule gaussian_plane(unsigned radial, unsigned angular) {
  if (angular == 0) {
    throw QuadratureFailure("the angular rule needs at least one node");
  }
  const QuadratureRule lag = gauss_laguerre(radial);
  QuadratureRule rule;
  rule.kind = QuadratureKind::gaussian_plane_polar;
  rule.exactness = std::min(4 * radial - 2, angular - 1);
  rule.x.reserve(lag.size() * angular);
  for (std::size_t a = 0; a < lag.size(); ++a) {
    const double r = std::sqrt(lag.x[a]);
    for (unsigned m = 0; m < angular; ++m) {
      const double theta = 2.0 * std::numbers::pi * m / angular;
      rule.x.push_back(r * std::cos(theta));
      rule.y.push_back(r * std::sin(theta));
      rule.w.push_back(lag.w[a] / angular);
    }
  }
  return rule;
}

}  // namespace appellkit
