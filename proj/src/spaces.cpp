#include "appellkit/spaces.hpp"

#include <gmp.h>

#include <cmath>
#include <limits>

namespace appellkit {

namespace {

constexpr unsigned kCachedWeights = 65;
constexpr double kInf = std::numeric_limits<double>::infinity();

double log_rational(const Rational& r) {
  long num_exp = 0;
  long den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, r.get_num_mpz_t());
  const double den = mpz_get_d_2exp(&den_exp, r.get_den_mpz_t());
  return std::log(num / den) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

}  // namespace

WeightSequence WeightSequence::build(WeightKind kind, std::string name, Generator generator,
                                     bool c0_overridden) {
  auto impl = std::make_shared<Impl>();
  impl->kind = kind;
  impl->name = std::move(name);
  impl->generator = std::move(generator);
  impl->c0_overridden = c0_overridden;
  for (unsigned k = 0; k < kCachedWeights; ++k) {
    Rational v = impl->generator(k);
    v.canonicalize();
    if (v <= 0) {
      throw DomainError("weight " + impl->name + " is not positive at k=" + std::to_string(k));
    }
    impl->cached_d.push_back(v.get_d());
    impl->cached.push_back(std::move(v));
  }
  impl->non_decreasing = true;
  for (unsigned k = 0; k + 1 < kCachedWeights; ++k) {
    if (impl->cached[k + 1] < impl->cached[k]) {
      impl->non_decreasing = false;
      break;
    }
  }
  WeightSequence w(impl);
  switch (kind) {
    case WeightKind::fock:
      impl->radius = kInf;
      break;
    case WeightKind::custom:
      impl->radius = ratio_limit(w);
      break;
    default:
      impl->radius = 1.0;
  }
  return w;
}

WeightSequence WeightSequence::hardy() {
  static const WeightSequence w = build(WeightKind::hardy, "hardy", [](unsigned) { return Rational(1); }, false);
  return w;
}

WeightSequence WeightSequence::fock() {
  static const WeightSequence w = build(WeightKind::fock, "fock", factorial, false);
  return w;
}

WeightSequence WeightSequence::dirichlet() {
  static const WeightSequence w = build(
      WeightKind::dirichlet, "dirichlet", [](unsigned k) { return Rational(k == 0 ? 1u : k); }, true);
  return w;
}

WeightSequence WeightSequence::bergman() {
  static const WeightSequence w = build(
      WeightKind::bergman, "bergman", [](unsigned k) { return make_rational(1, static_cast<long>(k) + 1); },
      false);
  return w;
}

WeightSequence WeightSequence::custom(std::string name, Generator generator) {
  return build(WeightKind::custom, std::move(name), std::move(generator), false);
}

WeightSequence WeightSequence::named(std::string_view name) {
  if (name == "hardy") {
    return hardy();
  }
  if (name == "fock") {
    return fock();
  }
  if (name == "dirichlet") {
    return dirichlet();
  }
  if (name == "bergman") {
    return bergman();
  }
  throw DomainError("unknown weight '" + std::string(name) + "'");
}

Rational WeightSequence::value(unsigned k) const {
  if (k < impl_->cached.size()) {
    return impl_->cached[k];
  }
  Rational v = impl_->generator(k);
  v.canonicalize();
  return v;
}

double WeightSequence::value_d(unsigned k) const {
  if (k < impl_->cached_d.size()) {
    return impl_->cached_d[k];
  }
  if (impl_->kind == WeightKind::fock) {
    return std::exp(std::lgamma(static_cast<double>(k) + 1.0));
  }
  return value(k).get_d();
}

double WeightSequence::log_value(unsigned k) const {
  switch (impl_->kind) {
    case WeightKind::hardy:
      return 0.0;
    case WeightKind::fock:
      return std::lgamma(static_cast<double>(k) + 1.0);
    case WeightKind::dirichlet:
      return k == 0 ? 0.0 : std::log(static_cast<double>(k));
    case WeightKind::bergman:
      return -std::log(static_cast<double>(k) + 1.0);
    case WeightKind::custom:
      break;
  }
  return log_rational(value(k));
}

bool WeightSequence::same_as(const WeightSequence& o, unsigned upto) const {
  if (impl_ == o.impl_) {
    return true;
  }
  if (impl_->name != o.impl_->name || impl_->kind != o.impl_->kind) {
    return false;
  }
  if (impl_->kind != WeightKind::custom) {
    return true;
  }
  for (unsigned k = 0; k <= upto; ++k) {
    if (value(k) != o.value(k)) {
      return false;
    }
  }
  return true;
}

double extrapolate_at_zero(std::vector<double> h, std::vector<double> y) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      y[i] = (h[i + m] * y[i] - h[i] * y[i + 1]) / (h[i + m] - h[i]);
    }
  }
  return y.empty() ? 0.0 : y[0];
}

double ratio_limit(const WeightSequence& w) {
  auto ratio = [&](unsigned k) { return std::exp(w.log_value(k + 1) - w.log_value(k)); };
  // factorial-type growth: ratios keep doubling with k
  if (ratio(128) > 1.5 * ratio(64) && ratio(64) > 1.5 * ratio(32)) {
    return kInf;
  }
  std::vector<double> h;
  std::vector<double> y;
  for (unsigned k = 64; k <= 128; k += 16) {
    h.push_back(1.0 / (k + 1.0));
    y.push_back(ratio(k));
  }
  return std::max(0.0, extrapolate_at_zero(std::move(h), std::move(y)));
}

double weight_power_sum(const WeightSequence& w, double x, unsigned start) {
  if (x < 0.0) {
    throw DomainError("weight power sum needs x >= 0");
  }
  if (x >= w.radius()) {
    throw OutOfDomain("x = " + std::to_string(x) + " outside the convergence radius of " + w.name());
  }
  if (x == 0.0) {
    return start == 0 ? 1.0 / w.value_d(0) : 0.0;
  }
  if (w.kind() == WeightKind::hardy) {
    return std::pow(x, start) / (1.0 - x);
  }
  const double log_x = std::log(x);
  const double limit_ratio = std::isinf(w.radius()) ? 0.0 : x / w.radius();
  double sum = 0.0;
  double term = std::exp(start * log_x - w.log_value(start));
  for (unsigned k = start; k < start + 50'000'000u; ++k) {
    sum += term;
    const double next = std::exp((k + 1) * log_x - w.log_value(k + 1));
    const double rho = std::max(next / term, limit_ratio);
    if (k > start && rho < 1.0) {
      const double remainder = next / (1.0 - rho);
      if (remainder <= 1e-17 * sum) {
        return sum + remainder;
      }
    }
    term = next;
  }
  throw OutOfDomain("weight power sum for " + w.name() + " did not settle at x = " + std::to_string(x));
}

double pointwise_bound(const AppellSeries<double>& f, const QuaternionFloat& q) {
  const double r2 = norm_sq(q);
  const WeightSequence& w = f.weight();
  const double fn = norm(f);
  switch (w.kind()) {
    case WeightKind::fock:
      return std::exp(r2 / 2.0) * fn;
    case WeightKind::hardy:
      if (r2 >= 1.0) {
        throw OutOfDomain("Hardy bound needs |q| < 1");
      }
      return fn / std::sqrt(1.0 - r2);
    default:
      return std::sqrt(weight_power_sum(w, r2)) * fn;
  }
}

double pointwise_bound(const AppellSeries<Rational>& f, const QuaternionFloat& q) {
  return pointwise_bound(to_float(f), q);
}

TruncatedValue kernel_eval(const WeightSequence& w, const QuaternionFloat& q, const QuaternionFloat& p,
                           unsigned n) {
  const double nq = norm(q);
  const double np = norm(p);
  if (nq * nq >= w.radius() || np * np >= w.radius()) {
    throw OutOfDomain("kernel of " + w.name() + " needs |q|^2, |p|^2 below " + std::to_string(w.radius()));
  }
  const auto qq = qk_eval_all(n, q);
  const auto qp = qk_eval_all(n, p);
  TruncatedValue out;
  for (unsigned k = 0; k <= n; ++k) {
    out.value += (qq[k] * conj(qp[k])) * std::exp(-w.log_value(k));
  }
  out.tail = weight_power_sum(w, nq * np, n + 1);
  return out;
}

AppellSeries<double> kernel_section(const WeightSequence& w, const QuaternionFloat& p, unsigned n) {
  const auto qp = qk_eval_all(n, p);
  std::vector<QuaternionFloat> alpha(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    alpha[k] = conj(qp[k]) * std::exp(-w.log_value(k));
  }
  return AppellSeries<double>(w, std::move(alpha));
}

double reproducing_check(const QuaternionFloat& p, const AppellSeries<double>& f) {
  if (f.size() == 0) {
    return 0.0;
  }
  const auto section = kernel_section(f.weight(), p, static_cast<unsigned>(f.size() - 1));
  return norm(inner(section, f) - eval_series(f, p));
}

QuaternionExact random_exact(std::mt19937_64& rng, long range, long den) {
  std::uniform_int_distribution<long> d(-range, range);
  return {make_rational(d(rng), den), make_rational(d(rng), den), make_rational(d(rng), den),
          make_rational(d(rng), den)};
}

QuaternionFloat random_float(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  const double a = d(rng);
  const double b = d(rng);
  const double c = d(rng);
  return {a, b, c, d(rng)};
}

namespace {

template <class S>
S random_exact_series(std::mt19937_64& rng, const WeightSequence& w, unsigned n) {
  std::vector<QuaternionExact> v;
  v.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    v.push_back(random_exact(rng));
  }
  return S(w, std::move(v));
}

template <class S>
S random_float_series(std::mt19937_64& rng, const WeightSequence& w, unsigned n) {
  std::vector<QuaternionFloat> v;
  v.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    v.push_back(random_float(rng));
  }
  return S(w, std::move(v));
}

}  // namespace

AppellSeries<Rational> random_appell_exact(std::mt19937_64& rng, const WeightSequence& w, unsigned n) {
  return random_exact_series<AppellSeries<Rational>>(rng, w, n);
}
SliceSeries<Rational> random_slice_exact(std::mt19937_64& rng, const WeightSequence& w, unsigned n) {
  return random_exact_series<SliceSeries<Rational>>(rng, w, n);
}
AppellSeries<double> random_appell(std::mt19937_64& rng, const WeightSequence& w, unsigned n) {
  return random_float_series<AppellSeries<double>>(rng, w, n);
}
SliceSeries<double> random_slice(std::mt19937_64& rng, const WeightSequence& w, unsigned n) {
  return random_float_series<SliceSeries<double>>(rng, w, n);
}

QuaternionFloat random_point(std::mt19937_64& rng, double radius) {
  std::normal_distribution<double> g;
  QuaternionFloat v;
  do {
    v = {g(rng), g(rng), g(rng), g(rng)};
  } while (norm(v) < 1e-12);
  return v * (radius / norm(v));
}

}  // namespace appellkit
