#include "appellkit/quaternion.hpp"

#include <cstdio>

namespace appellkit {

QuaternionFloat qexp(const QuaternionFloat& q) {
  const double scale = std::exp(q.x0);
  const double v = std::sqrt(q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3);
  // sin|v|/|v| has a removable singularity at v = 0
  if (v < 1e-300) {
    return {scale, 0.0, 0.0, 0.0};
  }
  const double s = scale * std::sin(v) / v;
  return {scale * std::cos(v), s * q.x1, s * q.x2, s * q.x3};
}

ImaginaryUnit::ImaginaryUnit(double a, double b, double c) {
  const double n = std::sqrt(a * a + b * b + c * c);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("imaginary unit needs a nonzero finite direction");
  }
  value_ = {0.0, a / n, b / n, c / n};
}

ImaginaryUnit sample_sphere(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const double a = gauss(rng);
    const double b = gauss(rng);
    const double c = gauss(rng);
    if (a * a + b * b + c * c > 1e-12) {
      return {a, b, c};
    }
  }
}

ImaginaryUnit sample_sphere(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_sphere(rng);
}

std::string to_string(const QuaternionExact& q) {
  return "(" + q.x0.get_str() + ", " + q.x1.get_str() + ", " + q.x2.get_str() + ", " +
         q.x3.get_str() + ")";
}

std::string to_string(const QuaternionFloat& q) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g, %.17g)", q.x0, q.x1, q.x2, q.x3);
  return buf;
}

}  // namespace appellkit
