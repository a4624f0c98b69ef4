#include "appellkit/operators.hpp"

#include <cmath>

namespace appellkit {

AppellSeries<double> dilate(const AppellSeries<double>& f, double t) {
  std::vector<QuaternionFloat> v(f.coeffs());
  double power = 1.0;
  for (auto& c : v) {
    c *= power;
    power *= t;
  }
  return AppellSeries<double>(f.weight(), std::move(v));
}

WeightedShiftSpec::WeightedShiftSpec(Gamma gamma) : gamma_(std::move(gamma)) {
  if (gamma_(0) != 1.0) {
    throw DomainError("weighted shift needs gamma_0 = 1");
  }
}

WeightedShiftSpec WeightedShiftSpec::identity() {
  return WeightedShiftSpec([](unsigned) { return 1.0; });
}

WeightedShiftSpec WeightedShiftSpec::from_values(std::vector<double> values) {
  return WeightedShiftSpec([v = std::move(values)](unsigned k) { return k < v.size() ? v[k] : 1.0; });
}

AppellSeries<double> weighted_shift(const WeightedShiftSpec& spec, const AppellSeries<double>& f) {
  std::vector<QuaternionFloat> v(f.size() + 1);
  for (std::size_t k = 0; k < f.size(); ++k) {
    v[k + 1] = f.coeffs()[k] * spec(static_cast<unsigned>(k));
  }
  return AppellSeries<double>(f.weight(), std::move(v));
}

GammaRecurrence gamma_recurrence_check(const WeightedShiftSpec& spec, unsigned kmax, double tol) {
  GammaRecurrence out;
  for (unsigned k = 1; k <= kmax; ++k) {
    const double defect = std::abs((k + 1.0) * spec(k) - k * spec(k - 1) - 1.0);
    out.max_defect = std::max(out.max_defect, defect);
    if (defect > tol && out.holds) {
      out.holds = false;
      out.first_failure = k;
    }
  }
  return out;
}

AppellSeries<double> commutator_difference(const WeightedShiftSpec& spec, const AppellSeries<double>& f) {
  return annihilate(weighted_shift(spec, f)) - weighted_shift(spec, annihilate(f));
}

AppellSeries<double> commutator_of_composites(const WeightedShiftSpec& spec, const AppellSeries<double>& f) {
  auto a = [&](const AppellSeries<double>& g) { return annihilate(weighted_shift(spec, g)); };
  auto b = [&](const AppellSeries<double>& g) { return weighted_shift(spec, annihilate(g)); };
  return a(b(f)) - b(a(f));
}

AppellSeries<double> backward_R_partial(const AppellSeries<double>& f, double eps, const QuadratureRule& rule) {
  if (rule.kind != QuadratureKind::gauss_legendre_interval) {
    throw QuadratureFailure("the R integral needs a Gauss-Legendre rule");
  }
  if (eps < 0.0 || eps >= 1.0) {
    throw DomainError("the R integral needs 0 <= eps < 1");
  }
  // the rule lives on [0, 1]; map it onto [eps, 1]
  AppellSeries<double> acc(f.weight(), std::vector<QuaternionFloat>(f.size() > 0 ? f.size() - 1 : 0));
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double t = eps + (1.0 - eps) * rule.x[i];
    const double w = (1.0 - eps) * rule.w[i];
    acc += (w / t) * annihilate(dilate(f, t));
  }
  return acc;
}

AppellSeries<double> backward_R_integral(const AppellSeries<double>& f, const QuadratureRule& rule, double tol) {
  AppellSeries<double> r = backward_R_partial(f, 0.0, rule);
  const AppellSeries<double> m = backward_M(f);
  for (std::size_t k = 0; k < std::max(r.size(), m.size()); ++k) {
    const double defect = norm(r.coeff(k) - m.coeff(k));
    if (defect > tol * std::max(1.0, norm(m.coeff(k)))) {
      throw QuadratureFailure("R and M differ by " + std::to_string(defect) + " at k=" + std::to_string(k));
    }
  }
  return r;
}

BackwardInequality backward_inequality_check(const AppellSeries<double>& f, const QuadratureRule& rule, double tol) {
  if (!f.weight().non_decreasing()) {
    throw DomainError("the backward shift inequality needs a non-decreasing weight");
  }
  BackwardInequality out;
  out.lhs = norm_sq(backward_R_integral(f, rule));
  const QuaternionFloat f0 = eval_series(f, QuaternionFloat());
  out.rhs = norm_sq(f) - norm_sq(f0);
  const double scale = std::max(1.0, std::abs(out.rhs));
  out.holds = out.lhs <= out.rhs + tol * scale;
  out.equality = std::abs(out.lhs - out.rhs) <= tol * scale;
  return out;
}

CheckResult shift_ck_check(unsigned kmax) {
  CheckResult res;
  res.identity = "shift_S_ck_product";
  res.reference = "S Q_k = (c_{k+1}/(c_1 c_k)) Q_1 (.) Q_k = Q_{k+1}";
  const QPoly& q1 = qk_symbolic(1);
  for (unsigned k = 0; k <= kmax; ++k) {
    const Rational factor = ck(k + 1) / (ck(1) * ck(k));
    res.record_exact(factor * ck_product(q1, qk_symbolic(k)) == qk_symbolic(k + 1));
  }
  return res;
}

CheckResult backward_M_ck_check(unsigned kmax) {
  CheckResult res;
  res.identity = "backward_M_ck_inverse";
  res.reference = "Q_1^{-(.)} (.) Q_k = (c_k/(c_1 c_{k-1})) Q_{k-1}";
  const QPoly& q1 = qk_symbolic(1);
  for (unsigned k = 1; k <= kmax; ++k) {
    const Rational factor = ck(1) * ck(k - 1) / ck(k);
    res.record_exact(ck_product(q1, qk_symbolic(k - 1)) == factor * qk_symbolic(k));
  }
  return res;
}

}  // namespace appellkit
