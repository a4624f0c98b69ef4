#include "appellkit/appell.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>

namespace appellkit {

namespace {

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

// Powers of q and conj(q), grown on demand; caller holds table_mutex().
const QPoly& cached_power(std::vector<QPoly>& cache, const QPoly& base, unsigned n) {
  if (cache.empty()) {
    cache.emplace_back(QuaternionExact(Rational(1)));
  }
  while (cache.size() <= n) {
    cache.push_back(cache.back() * base);
  }
  return cache[n];
}

double tjk_float(unsigned k, unsigned j) {
  return 2.0 * static_cast<double>(k - j + 1) /
         (static_cast<double>(k + 1) * static_cast<double>(k + 2));
}

double dot4(const QuaternionFloat& a, const QuaternionFloat& b) {
  return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

}  // namespace

Rational tjk(unsigned k, unsigned j) {
  if (j > k) {
    throw IndexError("T^k_j needs j <= k (k=" + std::to_string(k) + ", j=" + std::to_string(j) + ")");
  }
  return make_rational(2 * static_cast<long>(k - j + 1), static_cast<long>(k + 1) * (k + 2));
}

Rational pochhammer(const Rational& a, unsigned n) {
  Rational r(1);
  for (unsigned i = 0; i < n; ++i) {
    r *= a + Rational(i);
  }
  return r;
}

Rational tjk_pochhammer(unsigned k, unsigned j) {
  if (j > k) {
    throw IndexError("T^k_j needs j <= k");
  }
  // k!/(k-j)!/j! written as Pochhammer quotients with (1)_n = n!
  const Rational k_fact = pochhammer(Rational(1), k);
  return k_fact / pochhammer(Rational(3), k) * pochhammer(Rational(2), k - j) *
         pochhammer(Rational(1), j) / (pochhammer(Rational(1), k - j) * pochhammer(Rational(1), j));
}

Rational ck(unsigned k) {
  static std::map<unsigned, Rational> cache;
  std::lock_guard lock(table_mutex());
  if (auto it = cache.find(k); it != cache.end()) {
    return it->second;
  }
  Rational sum(0);
  for (unsigned j = 0; j <= k; ++j) {
    if (j % 2 == 0) {
      sum += tjk(k, j);
    } else {
      sum -= tjk(k, j);
    }
  }
  cache.emplace(k, sum);
  return sum;
}

const QPoly& qk_symbolic(unsigned k) {
  if (static_cast<int>(k) > degree_cap()) {
    throw DegreeCapExceeded("Q_" + std::to_string(k) + " exceeds degree cap " +
                            std::to_string(degree_cap()));
  }
  static std::map<unsigned, QPoly> cache;
  static std::vector<QPoly> q_powers;
  static std::vector<QPoly> qbar_powers;
  std::lock_guard lock(table_mutex());
  if (auto it = cache.find(k); it != cache.end()) {
    return it->second;
  }
  // the cached tables may exceed a thread-local cap set elsewhere
  ScopedDegreeCap cap(std::max(degree_cap(), static_cast<int>(k)));
  static const QPoly q = embed_q();
  static const QPoly qbar = embed_qbar();
  QPoly sum;
  for (unsigned j = 0; j <= k; ++j) {
    const QPoly& a = cached_power(q_powers, q, k - j);
    const QPoly& b = cached_power(qbar_powers, qbar, j);
    sum += tjk(k, j) * (a * b);
  }
  return cache.emplace(k, std::move(sum)).first->second;
}

std::vector<QuaternionFloat> qk_eval_all(unsigned n, const QuaternionFloat& q) {
  std::vector<QuaternionFloat> qp(n + 1);
  std::vector<QuaternionFloat> qbp(n + 1);
  qp[0] = QuaternionFloat(1.0);
  qbp[0] = QuaternionFloat(1.0);
  const QuaternionFloat qb = conj(q);
  for (unsigned m = 1; m <= n; ++m) {
    qp[m] = qp[m - 1] * q;
    qbp[m] = qbp[m - 1] * qb;
  }
  std::vector<QuaternionFloat> out(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    QuaternionFloat acc;
    for (unsigned j = 0; j <= k; ++j) {
      acc += (qp[k - j] * qbp[j]) * tjk_float(k, j);
    }
    out[k] = acc;
  }
  return out;
}

QuaternionFloat qk_eval(unsigned k, const QuaternionFloat& q) { return qk_eval_all(k, q)[k]; }

QPoly pk_symbolic(unsigned k) {
  const Rational c = ck(k);
  return Rational(1 / c) * qk_symbolic(k);
}

QPoly ck_product(const QPoly& f, const QPoly& g) {
  if (!fueter_operator(f).is_zero()) {
    throw NotRegular("left factor of the CK product is not Fueter regular");
  }
  if (!fueter_operator(g).is_zero()) {
    throw NotRegular("right factor of the CK product is not Fueter regular");
  }
  return ck_extension(restrict_x0(f) * restrict_x0(g));
}

double gegenbauer(unsigned n, double nu, double t) {
  if (n == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double cur = 2.0 * nu * t;
  for (unsigned m = 2; m <= n; ++m) {
    const double md = static_cast<double>(m);
    const double next = (2.0 * t * (md + nu - 1.0) * cur - (md + 2.0 * nu - 2.0) * prev) / md;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

QuaternionFloat gegenbauer_form(unsigned n, const QuaternionFloat& q, double r) {
  const double t = q.x0 / r;
  const double scalar = std::pow(r, n) * gegenbauer(n, 1.0, t);
  const double vec_scale = std::pow(r, n) * 2.0 / (static_cast<double>(n) + 2.0) *
                           gegenbauer(n - 1, 2.0, t) / r;
  return QuaternionFloat(scalar) + q.vec() * vec_scale;
}

std::pair<double, double> fit_constant(const std::vector<QuaternionFloat>& model,
                                       const std::vector<QuaternionFloat>& target) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    num += dot4(model[i], target[i]);
    den += dot4(model[i], model[i]);
  }
  const double c = den > 0.0 ? num / den : 0.0;
  double residual = 0.0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    residual = std::max(residual, norm(target[i] - model[i] * c));
  }
  return {c, residual};
}

}  // namespace

GegenbauerFit gegenbauer_ck_check(unsigned n, std::span<const QuaternionFloat> grid) {
  if (n == 0) {
    throw DomainError("Gegenbauer check needs n >= 1");
  }
  const FloatPoly extension(ck_extension(pow(embed_vec(), n)));
  std::vector<QuaternionFloat> target;
  std::vector<QuaternionFloat> model_q;
  std::vector<QuaternionFloat> model_v;
  for (const auto& q : grid) {
    const double vmod = norm(q.vec());
    if (vmod == 0.0) {
      throw DomainError("Gegenbauer check needs non-real points");
    }
    target.push_back(extension(q));
    model_q.push_back(gegenbauer_form(n, q, norm(q)));
    model_v.push_back(gegenbauer_form(n, q, vmod));
  }
  GegenbauerFit fit;
  fit.n = n;
  std::tie(fit.constant, fit.residual) = fit_constant(model_q, target);
  std::tie(fit.constant_vector_modulus, fit.residual_vector_modulus) = fit_constant(model_v, target);
  return fit;
}

GegenbauerFit gegenbauer_ck_check(unsigned n, std::uint64_t seed, unsigned count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<QuaternionFloat> grid;
  while (grid.size() < count) {
    QuaternionFloat q(u(rng), u(rng), u(rng), u(rng));
    if (norm(q.vec()) > 0.1) {
      grid.push_back(q);
    }
  }
  return gegenbauer_ck_check(n, grid);
}

TruncatedValue exp_truncated(const QuaternionFloat& q, unsigned n) {
  const auto values = qk_eval_all(n, q);
  TruncatedValue out;
  double factorial = 1.0;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      factorial *= static_cast<double>(k);
    }
    out.value += values[k] / factorial;
  }
  const double r = norm(q);
  if (r == 0.0) {
    return out;
  }
  const double log_r = std::log(r);
  double tail = 0.0;
  for (unsigned k = n + 1;; ++k) {
    const double term = std::exp(static_cast<double>(k) * log_r - std::lgamma(k + 1.0));
    tail += term;
    if (static_cast<double>(k) > r && term <= 1e-18 * std::max(tail, 1e-300)) {
      break;
    }
    if (k > n + 100000) {
      break;
    }
  }
  out.tail = tail;
  return out;
}

QPoly fueter_variable(unsigned l) {
  if (l < 1 || l > 3) {
    throw IndexError("Fueter variables are indexed by l = 1, 2, 3");
  }
  const int li = static_cast<int>(l);
  return QPoly::variable(li) - QuaternionExact::unit(li) * QPoly::variable(0);
}

QuaternionFloat eval_axial(const AxialParts& parts, double x0, double r, const QuaternionFloat& omega) {
  const QuaternionFloat point(x0, r, 0.0, 0.0);
  return eval(parts.a, point) + omega * eval(parts.b, point);
}

AxialParts axial_decompose(const QPoly& f, std::uint64_t seed) {
  // restrict to the slice x0 + i r, then split by parity in r
  QPoly even;
  QPoly odd;
  for (const auto& [m, c] : f.terms()) {
    if (m[2] != 0 || m[3] != 0) {
      continue;
    }
    (m[1] % 2 == 0 ? even : odd).add_term(m, c);
  }
  AxialParts parts{even, -QuaternionExact::i() * odd};

  const FloatPoly ff(f);
  const FloatPoly fa(parts.a);
  const FloatPoly fb(parts.b);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  constexpr int kPoints = 100;
  constexpr int kOmegas = 8;
  for (int p = 0; p < kPoints; ++p) {
    const double x0 = u(rng);
    const double r = ur(rng);
    const QuaternionFloat slot(x0, r, 0.0, 0.0);
    const QuaternionFloat a = fa(slot);
    const QuaternionFloat b = fb(slot);
    for (int s = 0; s < kOmegas; ++s) {
      const ImaginaryUnit omega = sample_sphere(rng);
      const QuaternionFloat value = ff(QuaternionFloat(x0) + omega.value() * r);
      const QuaternionFloat model = a + omega.value() * b;
      const double scale = std::max({1.0, norm(value), norm(model)});
      if (norm(value - model) > 1e-10 * scale) {
        throw NotAxial("f(x0 + omega r) is not of the form A + omega B");
      }
    }
  }
  return parts;
}

QPoly synthesize_appell(std::span<const QuaternionExact> alpha) {
  QPoly sum;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (!alpha[k].is_zero()) {
      sum += qk_symbolic(static_cast<unsigned>(k)) * alpha[k];
    }
  }
  return sum;
}

QPoly synthesize_slice(std::span<const QuaternionExact> a) {
  const QPoly q = embed_q();
  QPoly power(QuaternionExact(Rational(1)));
  QPoly sum;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k > 0) {
      power = power * q;
    }
    sum += power * a[k];
  }
  return sum;
}

std::vector<QuaternionExact> appell_expand(const QPoly& g) {
  if (!fueter_operator(g).is_zero()) {
    throw NotRegular("appell_expand needs a Fueter regular polynomial");
  }
  (void)axial_decompose(g);
  auto alpha = slice_taylor_real(g);
  if (synthesize_appell(alpha) != g) {
    throw ExpansionMismatch("sum Q_k alpha_k does not reproduce the input");
  }
  return alpha;
}

}  // namespace appellkit
