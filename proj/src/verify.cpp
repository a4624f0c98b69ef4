#include "appellkit/verify.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <sstream>

#include "appellkit/appell.hpp"
#include "appellkit/fueter_map.hpp"
#include "appellkit/operators.hpp"
#include "appellkit/quadrature.hpp"
#include "appellkit/spaces.hpp"
#include "appellkit/transforms.hpp"

namespace appellkit {

namespace {

using Json = nlohmann::json;

// FNV-1a, stable across standard libraries unlike std::hash.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::mt19937_64 stream(const RunConfig& cfg, const std::string& name) {
  return std::mt19937_64(cfg.seed ^ fnv1a(name));
}

CheckResult start(std::string name, std::string reference) {
  CheckResult r;
  r.identity = std::move(name);
  r.reference = std::move(reference);
  return r;
}

double rel_gap(const QuaternionFloat& a, const QuaternionFloat& b) { return norm(a - b) / std::max(1.0, norm(b)); }

const std::vector<WeightSequence>& named_weights() {
  static const std::vector<WeightSequence> w = {WeightSequence::hardy(), WeightSequence::fock(),
                                                WeightSequence::dirichlet(), WeightSequence::bergman()};
  return w;
}

// Largest |q| used for random points: the ball for hardy-type weights.
double sample_radius(const WeightSequence& w) { return std::isinf(w.radius()) ? 2.0 : 0.9; }

std::vector<double> linspace(double a, double b, unsigned n) {
  std::vector<double> v(n);
  for (unsigned i = 0; i < n; ++i) {
    v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  }
  return v;
}

WeightedShiftSpec configured_gamma(const RunConfig& cfg) {
  if (cfg.gamma_fault) {
    return WeightedShiftSpec::from_values({1.0, *cfg.gamma_fault});
  }
  return WeightedShiftSpec::identity();
}

Rational rational_t(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return make_rational(num(rng), den(rng));
}

// Random polynomial with `terms` terms of degree <= deg; x0 excluded when x0_free.
QPoly random_poly(std::mt19937_64& rng, unsigned terms, unsigned deg, bool x0_free) {
  std::uniform_int_distribution<unsigned> e(0, deg);
  QPoly p;
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m{0, 0, 0, 0};
    unsigned budget = e(rng);
    for (int v = x0_free ? 1 : 0; v < 4 && budget > 0; ++v) {
      std::uniform_int_distribution<unsigned> take(0, budget);
      m[v] = v == 3 ? budget : take(rng);
      budget -= m[v];
    }
    p.add_term(m, random_exact(rng, 5, 3));
  }
  return p;
}

std::vector<QuaternionExact> random_coeffs(std::mt19937_64& rng, unsigned len) {
  std::vector<QuaternionExact> v;
  for (unsigned k = 0; k < len; ++k) {
    v.push_back(random_exact(rng));
  }
  return v;
}

// ---------------------------------------------------------------- appell

CheckResult fueter_regularity(const RunConfig& cfg) {
  auto r = start("fueter_regularity", "fueter_operator(Q_k) = 0, k <= N");
  for (unsigned k = 0; k <= cfg.degree_cap; ++k) {
    r.record_exact(fueter_operator(qk_symbolic(k)).is_zero());
  }
  return r;
}

CheckResult appell_property(const RunConfig& cfg) {
  auto r = start("appell_property", "(dbar/2) Q_k = k Q_{k-1}, 1 <= k <= N");
  for (unsigned k = 1; k <= cfg.degree_cap; ++k) {
    r.record_exact(hyper_derivative(qk_symbolic(k)) == Rational(k) * qk_symbolic(k - 1));
  }
  return r;
}

CheckResult ck_product_identity(const RunConfig& cfg) {
  auto r = start("ck_product", "Q_k (.) Q_s = (c_k c_s / c_{k+s}) Q_{k+s}, k + s <= N");
  for (unsigned k = 0; k <= cfg.degree_cap; ++k) {
    for (unsigned s = 0; k + s <= cfg.degree_cap; ++s) {
      const Rational factor = ck(k) * ck(s) / ck(k + s);
      r.record_exact(ck_product(qk_symbolic(k), qk_symbolic(s)) == factor * qk_symbolic(k + s));
    }
  }
  return r;
}

CheckResult pk_closure(const RunConfig& cfg) {
  auto r = start("pk_ck_closure", "P_k (.) P_s = P_{k+s}, k + s <= N");
  for (unsigned k = 0; k <= cfg.degree_cap; ++k) {
    for (unsigned s = 0; k + s <= cfg.degree_cap; ++s) {
      r.record_exact(ck_product(pk_symbolic(k), pk_symbolic(s)) == pk_symbolic(k + s));
    }
  }
  return r;
}

CheckResult fueter_image_monomials(const RunConfig& cfg) {
  auto r = start("fueter_image_monomials", "laplacian4(q^k) = -2(k-1)k Q_{k-2}, 2 <= k <= N+2");
  ScopedDegreeCap cap(static_cast<int>(cfg.degree_cap) + 2);
  const QPoly q = embed_q();
  QPoly power = pow(q, 1);
  for (unsigned k = 2; k <= cfg.degree_cap + 2; ++k) {
    power = power * q;
    const long factor = -2L * static_cast<long>((k - 1) * k);
    r.record_exact(laplacian4(power) == Rational(factor) * qk_symbolic(k - 2));
  }
  return r;
}

CheckResult tjk_row_sums(const RunConfig&) {
  auto r = start("tjk_row_sums", "sum_j T^k_j = 1, k <= 64");
  for (unsigned k = 0; k <= 64; ++k) {
    Rational s(0);
    for (unsigned j = 0; j <= k; ++j) {
      s += tjk(k, j);
    }
    r.record_exact(s == 1);
  }
  return r;
}

CheckResult tjk_pochhammer_form(const RunConfig&) {
  auto r = start("tjk_pochhammer", "T^k_j equals its Pochhammer form, k <= 64");
  for (unsigned k = 0; k <= 64; ++k) {
    for (unsigned j = 0; j <= k; ++j) {
      r.record_exact(tjk(k, j) == tjk_pochhammer(k, j));
    }
  }
  return r;
}

CheckResult ck_pairs(const RunConfig&) {
  auto r = start("ck_pairs", "c_{2m} = c_{2m-1}, 1 <= m <= 32");
  for (unsigned m = 1; m <= 32; ++m) {
    r.record_exact(ck(2 * m) == ck(2 * m - 1));
  }
  return r;
}

CheckResult qk_modulus_bound(const RunConfig& cfg) {
  auto r = start("qk_modulus_bound", "|Q_k(q)| <= |q|^k, k <= 20, 1000 random q");
  auto rng = stream(cfg, r.identity);
  for (int i = 0; i < 1000; ++i) {
    const QuaternionFloat q = random_float(rng, 2.0);
    const auto values = qk_eval_all(20, q);
    double bound = 1.0;
    for (unsigned k = 0; k <= 20; ++k) {
      r.record(std::max(0.0, norm(values[k]) - bound) / std::max(bound, 1e-300), 1e-12);
      bound *= norm(q);
    }
  }
  return r;
}

CheckResult qk_restrictions(const RunConfig& cfg) {
  auto r = start("qk_restrictions", "Q_k(t) = t^k on the real axis, Q_k = c_k v^k on x0 = 0");
  auto rng = stream(cfg, r.identity);
  const QPoly v = embed_vec();
  QPoly vk(QuaternionExact(Rational(1)));
  for (unsigned k = 0; k <= cfg.degree_cap; ++k) {
    const Rational t = rational_t(rng);
    Rational tk(1);
    for (unsigned m = 0; m < k; ++m) {
      tk *= t;
    }
    r.record_exact(eval(qk_symbolic(k), QuaternionExact(t)) == QuaternionExact(tk));
    r.record_exact(restrict_x0(qk_symbolic(k)) == ck(k) * vk);
    vk = vk * v;
  }
  return r;
}

CheckResult ck_extension_roundtrip(const RunConfig& cfg) {
  auto r = start("ck_extension_roundtrip", "restrict_x0(CK(h)) = h and CK(h) regular, deg h <= 8");
  auto rng = stream(cfg, r.identity);
  for (int i = 0; i < 30; ++i) {
    const QPoly h = random_poly(rng, 6, 8, true);
    const QPoly ext = ck_extension(h);
    r.record_exact(restrict_x0(ext) == h && fueter_operator(ext).is_zero());
  }
  return r;
}

CheckResult eval_ring_real(const RunConfig& cfg) {
  auto r = start("eval_ring_real", "eval(a b, t) = eval(a, t) eval(b, t) at real t");
  auto rng = stream(cfg, r.identity);
  for (int i = 0; i < 50; ++i) {
    const QPoly a = random_poly(rng, 5, 4, false);
    const QPoly b = random_poly(rng, 5, 4, false);
    const QuaternionExact t(rational_t(rng));
    r.record_exact(eval(a * b, t) == eval(a, t) * eval(b, t));
  }
  return r;
}

CheckResult appell_expand_roundtrip(const RunConfig& cfg) {
  auto r = start("appell_expand_roundtrip", "appell_expand(sum Q_k alpha_k) = alpha, length <= N+1");
  auto rng = stream(cfg, r.identity);
  for (unsigned len = 1; len <= cfg.degree_cap + 1; len += 3) {
    const auto alpha = random_coeffs(rng, len);
    auto got = appell_expand(synthesize_appell(alpha));
    got.resize(std::max(got.size(), alpha.size()));
    bool ok = true;
    for (std::size_t k = 0; k < got.size(); ++k) {
      ok = ok && got[k] == (k < alpha.size() ? alpha[k] : QuaternionExact());
    }
    r.record_exact(ok);
  }
  return r;
}

CheckResult gegenbauer_fit(const RunConfig&) {
  auto r = start("gegenbauer_fit", "CK(v^n) = lambda_n r^n (C^1_n + 2/(n+2) C^2_{n-1} v/r), fitted lambda_n");
  std::ostringstream note;
  note << "r = |q|; lambda_n:";
  double worst_vec = 0.0;
  for (unsigned n = 1; n <= 8; ++n) {
    const auto fit = gegenbauer_ck_check(n);
    r.record(fit.residual / std::max(1.0, std::abs(fit.constant)), 1e-10);
    note << ' ' << fit.constant;
    worst_vec = std::max(worst_vec, fit.residual_vector_modulus);
  }
  note << "; r = |vec q| reading leaves residual " << worst_vec;
  r.note = note.str();
  return r;
}

CheckResult exp_truncated_real(const RunConfig& cfg) {
  auto r = start("exp_truncated_real", "sum Q_k(t)/k! = e^t within the tail bound");
  for (double t : {-1.5, -0.25, 0.5, 2.0}) {
    const auto v = exp_truncated(QuaternionFloat(t), cfg.degree_cap);
    r.record(std::max(0.0, norm(v.value - QuaternionFloat(std::exp(t))) - v.tail), 1e-12);
  }
  return r;
}

CheckResult fueter_variables(const RunConfig&) {
  auto r = start("fueter_variables", "zeta_l = x_l - e_l x0 is regular, l = 1..3");
  for (unsigned l = 1; l <= 3; ++l) {
    r.record_exact(fueter_operator(fueter_variable(l)).is_zero());
  }
  return r;
}

// ---------------------------------------------------------------- spaces

CheckResult orthonormal_basis(const RunConfig&) {
  auto r = start("orthonormal_basis", "<Q_k, Q_j>_b = b_k delta_kj exactly, k, j <= 20");
  for (const auto& w : named_weights()) {
    for (unsigned k = 0; k <= 20; ++k) {
      const auto ek = AppellSeries<Rational>::unit(w, k);
      for (unsigned j = 0; j <= 20; ++j) {
        const auto ej = AppellSeries<Rational>::unit(w, j);
        r.record_exact(inner(ek, ej) == QuaternionExact(k == j ? w.value(k) : Rational(0)));
      }
    }
  }
  return r;
}

CheckResult pointwise_bound_check(const RunConfig& cfg) {
  auto r = start("pointwise_bound", "|f(q)| <= (sum |q|^{2k}/b_k)^{1/2} ||f||, 500 pairs per weight");
  auto rng = stream(cfg, r.identity);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& w : named_weights()) {
    const double rmax = std::isinf(w.radius()) ? 2.5 : 0.95;
    for (int i = 0; i < 500; ++i) {
      const auto f = random_appell(rng, w, cfg.degree_cap);
      const QuaternionFloat q = random_point(rng, rmax * u(rng));
      const double bound = pointwise_bound(f, q);
      r.record(std::max(0.0, norm(eval_series(f, q)) - bound) / std::max(1.0, bound), 1e-12);
    }
  }
  return r;
}

CheckResult kernel_tail_honesty(const RunConfig& cfg) {
  auto r = start("kernel_tail_honesty", "|K_{N+10} - K_N| <= reported tail, 100 pairs per weight");
  auto rng = stream(cfg, r.identity);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& w : named_weights()) {
    for (int i = 0; i < 100; ++i) {
      const QuaternionFloat q = random_point(rng, sample_radius(w) * u(rng));
      const QuaternionFloat p = random_point(rng, sample_radius(w) * u(rng));
      const auto k0 = kernel_eval(w, q, p, cfg.degree_cap);
      const auto k1 = kernel_eval(w, q, p, cfg.degree_cap + 10);
      r.record(std::max(0.0, norm(k1.value - k0.value) - k0.tail), 1e-13);
    }
  }
  return r;
}

CheckResult kernel_closed_forms(const RunConfig& cfg) {
  auto r = start("kernel_closed_forms", "K_fock(x, y) = e^{xy}, K_hardy(x, y) = 1/(1 - xy), 20x20 grids");
  for (unsigned n : {cfg.degree_cap, 64u}) {
    for (double x : linspace(-2.0, 2.0, 20)) {
      for (double y : linspace(-2.0, 2.0, 20)) {
        const auto k = kernel_eval(WeightSequence::fock(), QuaternionFloat(x), QuaternionFloat(y), n);
        r.record(norm(k.value - QuaternionFloat(std::exp(x * y))) - k.tail, cfg.tolerance);
      }
    }
    for (double x : linspace(-0.9, 0.9, 20)) {
      for (double y : linspace(-0.9, 0.9, 20)) {
        const auto k = kernel_eval(WeightSequence::hardy(), QuaternionFloat(x), QuaternionFloat(y), n);
        r.record(norm(k.value - QuaternionFloat(1.0 / (1.0 - x * y))) - k.tail, cfg.tolerance);
      }
    }
  }
  return r;
}

CheckResult kernel_hermitian(const RunConfig& cfg) {
  auto r = start("kernel_hermitian", "K(q, p) = conj(K(p, q))");
  auto rng = stream(cfg, r.identity);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& w : named_weights()) {
    for (int i = 0; i < 100; ++i) {
      const QuaternionFloat q = random_point(rng, sample_radius(w) * u(rng));
      const QuaternionFloat p = random_point(rng, sample_radius(w) * u(rng));
      r.record(rel_gap(kernel_eval(w, q, p, cfg.degree_cap).value, conj(kernel_eval(w, p, q, cfg.degree_cap).value)),
               1e-13);
    }
  }
  return r;
}

CheckResult reproducing_property(const RunConfig& cfg) {
  auto r = start("reproducing_property", "<K_p, f> = f(p), 100 random (f, p) per weight");
  auto rng = stream(cfg, r.identity);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& w : named_weights()) {
    const double rmax = std::isinf(w.radius()) ? 1.5 : 0.9;
    for (int i = 0; i < 100; ++i) {
      const auto f = random_appell(rng, w, cfg.degree_cap);
      r.record(reproducing_check(random_point(rng, rmax * u(rng)), f), 1e-12);
    }
  }
  return r;
}

CheckResult inner_product_axioms(const RunConfig& cfg) {
  auto r = start("inner_product_axioms", "<f, g> = conj<g, f>, <f, g lambda> = <f, g> lambda, <f, f> >= 0");
  auto rng = stream(cfg, r.identity);
  for (const auto& w : named_weights()) {
    for (int i = 0; i < 25; ++i) {
      const auto f = random_appell_exact(rng, w, cfg.degree_cap);
      const auto g = random_appell_exact(rng, w, cfg.degree_cap / 2);
      const QuaternionExact lambda = random_exact(rng);
      const QuaternionExact ff = inner(f, f);
      r.record_exact(inner(f, g) == conj(inner(g, f)) && inner(f, g * lambda) == inner(f, g) * lambda &&
                     ff.vec().is_zero() && ff.x0 >= 0);
    }
  }
  return r;
}

CheckResult series_real_axis(const RunConfig& cfg) {
  auto r = start("series_real_axis", "sum Q_k(t) a_k = sum t^k a_k at real t");
  auto rng = stream(cfg, r.identity);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_appell(rng, WeightSequence::hardy(), cfg.degree_cap);
    const SliceSeries<double> g(f.weight(), f.coeffs());
    const QuaternionFloat t(u(rng));
    r.record(rel_gap(eval_series(f, t), eval_series(g, t)), 1e-13);
  }
  return r;
}

CheckResult weight_guards(const RunConfig&) {
  auto r = start("weight_guards", "inner products across weights are rejected; dirichlet c_0 overridden to 1");
  bool threw = false;
  try {
    (void)inner(AppellSeries<double>::unit(WeightSequence::hardy(), 1),
                AppellSeries<double>::unit(WeightSequence::fock(), 1));
  } catch (const WeightMismatch&) {
    threw = true;
  }
  r.record_exact(threw);
  const auto d = WeightSequence::dirichlet();
  r.record_exact(d.c0_overridden() && d.value(0) == 1 && d.value(1) == 1 && d.value(5) == 5);
  r.note = "dirichlet weight uses c_0 = 1 in place of 0";
  return r;
}

// ---------------------------------------------------------------- operators

CheckResult commutator_difference_identity(const RunConfig& cfg) {
  auto r = start("commutator_difference", "(dbar/2) S f - S (dbar/2) f = f, exact, N <= 64");
  auto rng = stream(cfg, r.identity);
  for (unsigned n = 0; n <= 64; ++n) {
    const auto f = random_appell_exact(rng, WeightSequence::fock(), n);
    r.record_exact(annihilate(shift_S(f)) - shift_S(annihilate(f)) == f);
  }
  r.note = "bracket read as the operator difference";
  return r;
}

CheckResult commutator_composites_reading(const RunConfig& cfg) {
  auto r = start("commutator_composites_reading",
                 "[(dbar/2) T_gamma, T_gamma (dbar/2)] as a bracket of the two composites vanishes");
  auto rng = stream(cfg, r.identity);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  for (int i = 0; i < 20; ++i) {
    std::vector<double> gamma{1.0};
    for (int k = 0; k < 20; ++k) {
      gamma.push_back(i == 0 ? 1.0 : u(rng));
    }
    const auto spec = WeightedShiftSpec::from_values(gamma);
    const auto f = random_appell(rng, WeightSequence::fock(), cfg.degree_cap);
    const auto c = commutator_of_composites(spec, f);
    double worst = 0.0;
    for (const auto& x : c.coeffs()) {
      worst = std::max(worst, norm(x));
    }
    r.record(worst, 1e-9);
  }
  r.note = "this reading gives 0, not the identity; the difference reading is the one verified";
  return r;
}

CheckResult gamma_recurrence(const RunConfig& cfg) {
  auto r = start("gamma_recurrence", "(k+1) gamma_k - k gamma_{k-1} = 1, k <= 64");
  const auto res = gamma_recurrence_check(configured_gamma(cfg), 64);
  r.instances = 64;
  r.max_defect = res.max_defect;
  r.pass = res.holds;
  if (res.first_failure) {
    r.note = "first failure at k = " + std::to_string(*res.first_failure);
  }
  return r;
}

CheckResult weighted_commutator_identity(const RunConfig& cfg) {
  auto r = start("weighted_commutator_identity", "(dbar/2) T_gamma f - T_gamma (dbar/2) f = f for the configured gamma");
  auto rng = stream(cfg, r.identity);
  const auto spec = configured_gamma(cfg);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_appell(rng, WeightSequence::fock(), cfg.degree_cap);
    const auto c = commutator_difference(spec, f);
    double worst = 0.0;
    for (std::size_t k = 0; k < std::max(c.size(), f.size()); ++k) {
      worst = std::max(worst, rel_gap(c.coeff(k), f.coeff(k)));
    }
    r.record(worst, 1e-12);
  }
  return r;
}

CheckResult weighted_commutator_iff(const RunConfig& cfg) {
  auto r = start("weighted_commutator_iff", "commutator = identity on test series iff the gamma recurrence holds");
  auto rng = stream(cfg, r.identity);
  std::uniform_real_distribution<double> u(-0.2, 0.2);
  std::uniform_int_distribution<unsigned> where(1, 10);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> gamma(12, 1.0);
    if (i % 2 == 1) {
      gamma[where(rng)] += u(rng);
    }
    const auto spec = WeightedShiftSpec::from_values(gamma);
    const bool recurrence = gamma_recurrence_check(spec, 11).holds;
    bool identity = true;
    for (int t = 0; t < 3; ++t) {
      const auto f = random_appell(rng, WeightSequence::fock(), 11);
      const auto c = commutator_difference(spec, f);
      for (std::size_t k = 0; k < f.size(); ++k) {
        identity = identity && rel_gap(c.coeff(k), f.coeff(k)) <= 1e-12;
      }
    }
    r.record_exact(identity == recurrence);
  }
  return r;
}

CheckResult adjoint_S_fock(const RunConfig& cfg) {
  auto r = start("adjoint_S_fock", "<(dbar/2) f, g>_fock = <f, S g>_fock, exact");
  auto rng = stream(cfg, r.identity);
  std::uniform_int_distribution<unsigned> len(0, cfg.degree_cap);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_appell_exact(rng, WeightSequence::fock(), len(rng));
    const auto g = random_appell_exact(rng, WeightSequence::fock(), len(rng));
    r.record(adjoint_defect_S(f, g), 0.0);
  }
  return r;
}

CheckResult adjoint_M_hardy(const RunConfig& cfg) {
  auto r = start("adjoint_M_hardy", "<M f, g>_hardy = <f, S g>_hardy, exact");
  auto rng = stream(cfg, r.identity);
  std::uniform_int_distribution<unsigned> len(0, cfg.degree_cap);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_appell_exact(rng, WeightSequence::hardy(), len(rng));
    const auto g = random_appell_exact(rng, WeightSequence::hardy(), len(rng));
    r.record(adjoint_defect_M(f, g), 0.0);
  }
  return r;
}

CheckResult shift_isometry_hardy(const RunConfig& cfg) {
  auto r = start("shift_isometry_hardy", "||S f||_hardy = ||f||_hardy, exact");
  auto rng = stream(cfg, r.identity);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_appell_exact(rng, WeightSequence::hardy(), cfg.degree_cap);
    r.record_exact(norm_sq(shift_S(f)) == norm_sq(f));
  }
  return r;
}

CheckResult norm_identity_fock(const RunConfig& cfg) {
  auto r = start("norm_identity_fock", "||S f||^2 = ||(dbar/2) f||^2 + ||f||^2 under fock, exact");
  auto rng = stream(cfg, r.identity);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_appell_exact(rng, WeightSequence::fock(), cfg.degree_cap);
    r.record_exact(norm_sq(shift_S(f)) == norm_sq(annihilate(f)) + norm_sq(f));
  }
  return r;
}

CheckResult number_operator(const RunConfig&) {
  auto r = start("number_operator", "S (dbar/2) Q_k = k Q_k, k <= 20");
  for (unsigned k = 0; k <= 20; ++k) {
    const auto e = AppellSeries<Rational>::unit(WeightSequence::fock(), k);
    r.record_exact(shift_S(annihilate(e)) == Rational(k) * e);
  }
  return r;
}

CheckResult annihilate_symbolic(const RunConfig& cfg) {
  auto r = start("annihilate_symbolic", "coefficient dbar/2 matches hyper_derivative of the synthesized polynomial");
  auto rng = stream(cfg, r.identity);
  for (int i = 0; i < 5; ++i) {
    const auto f = random_appell_exact(rng, WeightSequence::fock(), cfg.degree_cap);
    r.record_exact(synthesize_appell(annihilate(f).coeffs()) == hyper_derivative(synthesize_appell(f.coeffs())));
  }
  return r;
}

CheckResult shift_ck(const RunConfig&) { return shift_ck_check(10); }
CheckResult backward_M_ck(const RunConfig&) { return backward_M_ck_check(8); }

CheckResult backward_M_basis(const RunConfig&) {
  auto r = start("backward_M_basis", "M Q_k = Q_{k-1}, M Q_0 = 0");
  r.record_exact(backward_M(AppellSeries<Rational>::unit(WeightSequence::hardy(), 0)) ==
                 AppellSeries<Rational>(WeightSequence::hardy()));
  for (unsigned k = 1; k <= 20; ++k) {
    r.record_exact(backward_M(AppellSeries<Rational>::unit(WeightSequence::hardy(), k)) ==
                   AppellSeries<Rational>::unit(WeightSequence::hardy(), k - 1));
  }
  return r;
}

CheckResult backward_R_equals_M(const RunConfig& cfg) {
  auto r = start("backward_R_equals_M", "R f (Gauss-Legendre, eps = 0) = M f, 100 random series");
  auto rng = stream(cfg, r.identity);
  const auto rule = gauss_legendre(cfg.legendre_nodes);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_appell(rng, WeightSequence::hardy(), cfg.degree_cap);
    const auto R = backward_R_partial(f, 0.0, rule);
    const auto M = backward_M(f);
    double worst = 0.0;
    for (std::size_t k = 0; k < std::max(R.size(), M.size()); ++k) {
      worst = std::max(worst, rel_gap(R.coeff(k), M.coeff(k)));
    }
    r.record(worst, cfg.tolerance);
  }
  return r;
}

CheckResult backward_R_partial_eps(const RunConfig& cfg) {
  auto r = start("backward_R_partial", "int_eps^1 of Q_k gives (1 - eps^k) Q_{k-1}, eps in {1e-2, 1e-4, 1e-6}");
  const auto rule = gauss_legendre(cfg.legendre_nodes);
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    for (unsigned k = 1; k <= 10; ++k) {
      const auto R = backward_R_partial(AppellSeries<double>::unit(WeightSequence::hardy(), k), eps, rule);
      const double expected = 1.0 - std::pow(eps, k);
      double worst = std::abs(R.coeff(k - 1).x0 - expected);
      for (std::size_t m = 0; m < R.size(); ++m) {
        if (m != k - 1) {
          worst = std::max(worst, norm(R.coeff(m)));
        }
      }
      r.record(worst, 1e-12);
    }
  }
  return r;
}

CheckResult backward_inequality(const RunConfig& cfg) {
  auto r = start("backward_inequality", "||R f||^2 <= ||f||^2 - |f(0)|^2, equality under hardy");
  auto rng = stream(cfg, r.identity);
  const auto rule = gauss_legendre(cfg.legendre_nodes);
  for (const auto& w : {WeightSequence::hardy(), WeightSequence::fock(), WeightSequence::dirichlet()}) {
    for (int i = 0; i < 50; ++i) {
      const auto f = random_appell(rng, w, cfg.degree_cap);
      const auto b = backward_inequality_check(f, rule);
      const bool ok = w.kind() == WeightKind::hardy ? b.equality : (b.holds && b.lhs < b.rhs);
      r.record(ok ? 0.0 : std::abs(b.lhs - b.rhs), 0.0);
    }
  }
  const auto c = backward_inequality_check(AppellSeries<double>::unit(WeightSequence::fock(), 0), rule);
  r.record(std::abs(c.lhs) + std::abs(c.rhs), 1e-15);
  return r;
}

// ---------------------------------------------------------------- transforms

CheckResult hermite_orthonormality(const RunConfig& cfg) {
  auto r = start("hermite_orthonormality", "int eta_m eta_n dx = delta_mn, m, n <= 60");
  const auto rule = gauss_hermite(cfg.hermite_nodes);
  const unsigned kmax = std::min(60u, rule.exactness / 2);
  std::vector<std::vector<double>> eta;
  for (double x : rule.x) {
    eta.push_back(hermite_functions(kmax, x));
  }
  for (unsigned m = 0; m <= kmax; ++m) {
    for (unsigned n = 0; n <= kmax; ++n) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        s += rule.function_weights[i] * eta[i][m] * eta[i][n];
      }
      r.record(std::abs(s - (m == n ? 1.0 : 0.0)), cfg.tolerance);
    }
  }
  return r;
}

CheckResult gaussian_moments(const RunConfig& cfg) {
  auto r = start("gaussian_moments", "int conj(z)^k z^j dmu = k! delta_kj, k, j <= 12, relative to sqrt(k! j!)");
  const auto plane = gaussian_plane(cfg.plane_radial, cfg.plane_angular);
  for (unsigned k = 0; k <= 12; ++k) {
    for (unsigned j = 0; j <= 12; ++j) {
      const double scale = std::exp(0.5 * (std::lgamma(k + 1.0) + std::lgamma(j + 1.0)));
      const double expected = k == j ? std::tgamma(k + 1.0) : 0.0;
      r.record(std::abs(gaussian_moment(k, j, plane) - expected) / scale, cfg.tolerance);
    }
  }
  return r;
}

L2Function random_l2(std::mt19937_64& rng, unsigned kmax) {
  L2Function phi;
  for (unsigned k = 0; k <= kmax; ++k) {
    phi.beta.push_back(random_float(rng));
  }
  return phi;
}

CheckResult bf_isometry_coefficient(const RunConfig& cfg) {
  auto r = start("bf_isometry_coefficient", "||B^F phi||_fock = ||phi||, coefficient mode, K = 16");
  auto rng = stream(cfg, r.identity);
  for (int i = 0; i < 200; ++i) {
    const auto phi = random_l2(rng, 16);
    r.record(std::abs(norm_sq(bargmann_BF(phi)) - phi.norm_sq()) / std::max(1.0, phi.norm_sq()), 1e-14);
  }
  return r;
}

CheckResult bf_isometry_quadrature(const RunConfig& cfg) {
  auto r = start("bf_isometry_quadrature", "||B^F phi||_fock = ||phi||, Gauss-Hermite mode, K = 16");
  auto rng = stream(cfg, r.identity);
  const auto rule = gauss_hermite(cfg.hermite_nodes);
  for (int i = 0; i < 200; ++i) {
    const auto phi = random_l2(rng, 16);
    const auto quad = bargmann_BF_quadrature(phi, rule);
    const auto exact = bargmann_BF(phi);
    double gap = std::abs(norm_sq(quad) - phi.norm_sq()) / std::max(1.0, phi.norm_sq());
    for (std::size_t k = 0; k < exact.size(); ++k) {
      gap = std::max(gap, rel_gap(quad.coeff(k), exact.coeff(k)));
    }
    r.record(gap, 1e-8);
  }
  return r;
}

CheckResult bf_hermite_units(const RunConfig&) {
  auto r = start("bf_hermite_units", "B^F(eta_k) = Q_k / sqrt(k!)");
  for (unsigned k = 0; k <= 16; ++k) {
    L2Function phi;
    phi.beta.assign(k + 1, QuaternionFloat());
    phi.beta[k] = QuaternionFloat(1.0);
    const auto f = bargmann_BF(phi);
    r.record(std::abs(f.coeff(k).x0 - 1.0 / std::sqrt(std::tgamma(k + 1.0))), 1e-15);
  }
  return r;
}

CheckResult bs_inverse_modes(const RunConfig& cfg) {
  auto r = start("bs_inverse_modes", "(B^S)^{-1}: beta_k = sqrt(k!) a_k agrees with the plane integral");
  auto rng = stream(cfg, r.identity);
  const auto plane = gaussian_plane(cfg.plane_radial, cfg.plane_angular);
  const auto hermite = gauss_hermite(cfg.hermite_nodes);
  for (int i = 0; i < 10; ++i) {
    const auto f = random_slice(rng, WeightSequence::fock(), cfg.degree_cap);
    const auto quad = bargmann_BS_inverse_quadrature(f, sample_sphere(rng), plane, hermite);
    const auto exact = bargmann_BS_inverse(f);
    double worst = 0.0;
    for (std::size_t k = 0; k < exact.beta.size(); ++k) {
      worst = std::max(worst, rel_gap(quad.beta[k], exact.beta[k]));
    }
    r.record(worst, 1e-8);
  }
  return r;
}

CheckResult bs_inverse_isometry(const RunConfig& cfg) {
  auto r = start("bs_inverse_isometry", "||(B^S)^{-1} f|| = ||f||_fock on slice series");
  auto rng = stream(cfg, r.identity);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_slice(rng, WeightSequence::fock(), cfg.degree_cap);
    const double n2 = norm_sq(f);
    r.record(std::abs(bargmann_BS_inverse(f).norm_sq() - n2) / std::max(1.0, n2), 1e-13);
  }
  return r;
}

CheckResult upsilon_modes(const RunConfig& cfg) {
  auto r = start("upsilon_modes", "Upsilon direct = integral = B^F o (B^S)^{-1}");
  auto rng = stream(cfg, r.identity);
  const auto plane = gaussian_plane(cfg.plane_radial, cfg.plane_angular);
  const auto hermite = gauss_hermite(cfg.hermite_nodes);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_slice(rng, WeightSequence::fock(), cfg.degree_cap);
    const auto unit = sample_sphere(rng);
    const auto direct = upsilon(f, unit, TransformMode::coefficient, plane, hermite);
    const auto integral = upsilon(f, unit, TransformMode::quadrature, plane, hermite);
    const auto composite = upsilon(f, unit, TransformMode::composite, plane, hermite);
    double worst = 0.0;
    for (std::size_t k = 0; k < direct.size(); ++k) {
      worst = std::max({worst, rel_gap(integral.coeff(k), direct.coeff(k)), rel_gap(composite.coeff(k), direct.coeff(k))});
    }
    r.record(worst, 1e-8);
  }
  return r;
}

CheckResult upsilon_unit_independence(const RunConfig& cfg) {
  auto r = start("upsilon_unit_independence", "Upsilon integral mode agrees across 5 imaginary units");
  auto rng = stream(cfg, r.identity);
  const auto plane = gaussian_plane(cfg.plane_radial, cfg.plane_angular);
  const auto hermite = gauss_hermite(cfg.hermite_nodes);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_slice(rng, WeightSequence::fock(), cfg.degree_cap);
    std::vector<AppellSeries<double>> results;
    for (int u = 0; u < 5; ++u) {
      results.push_back(upsilon(f, sample_sphere(rng), TransformMode::quadrature, plane, hermite));
    }
    double spread = 0.0;
    for (std::size_t u = 1; u < results.size(); ++u) {
      for (std::size_t k = 0; k < results[0].size(); ++k) {
        spread = std::max(spread, rel_gap(results[u].coeff(k), results[0].coeff(k)));
      }
    }
    r.record(spread, 1e-8);
  }
  return r;
}

CheckResult upsilon_monomials(const RunConfig& cfg) {
  auto r = start("upsilon_monomials", "Upsilon(q^n / sqrt(n!)) = Q_n / sqrt(n!), integral mode");
  const auto plane = gaussian_plane(cfg.plane_radial, cfg.plane_angular);
  const auto hermite = gauss_hermite(cfg.hermite_nodes);
  for (unsigned n = 0; n <= cfg.degree_cap; ++n) {
    const double s = 1.0 / std::sqrt(std::tgamma(n + 1.0));
    const auto f = SliceSeries<double>::unit(WeightSequence::fock(), n, QuaternionFloat(s));
    const auto g = upsilon(f, ImaginaryUnit::j(), TransformMode::quadrature, plane, hermite);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      worst = std::max(worst, norm(g.coeff(k) - QuaternionFloat(k == n ? s : 0.0)));
    }
    r.record(worst, 1e-8);
  }
  return r;
}

CheckResult upsilon_pointwise(const RunConfig& cfg) {
  auto r = start("upsilon_pointwise", "int L(q, z) f_i(z) dmu_i(z) = sum Q_k(q) a_k");
  auto rng = stream(cfg, r.identity);
  const auto plane = gaussian_plane(cfg.plane_radial, cfg.plane_angular);
  for (int i = 0; i < 10; ++i) {
    const auto f = random_slice(rng, WeightSequence::fock(), cfg.degree_cap);
    const QuaternionFloat q = random_point(rng, 1.0);
    const AppellSeries<double> direct(WeightSequence::fock(), f.coeffs());
    r.record(rel_gap(upsilon_eval_integral(f, sample_sphere(rng), q, plane), eval_series(direct, q)), 1e-8);
  }
  return r;
}

CheckResult kernel_AS_closed_form(const RunConfig& cfg) {
  auto r = start("kernel_AS_closed_form", "sum q^k eta_k(x)/sqrt(k!) = C exp(-(q^2 + x^2)/2 + sqrt(2) q x), K = 60");
  const auto unit = sample_sphere(cfg.seed);
  for (double a : linspace(-2.0, 2.0, 20)) {
    for (double x : linspace(-3.0, 3.0, 20)) {
      const double b = std::sqrt(std::max(0.0, 4.0 - a * a)) * (x + 3.0) / 6.0;
      const QuaternionFloat q = unit.slice_point(a, b);
      const auto s = kernel_AS_series(q, x, 60);
      r.record(std::max(0.0, norm(s.value - kernel_AS_closed(q, x)) - s.tail), 1e-8);
    }
  }
  std::ostringstream note;
  note.precision(17);
  note << "calibration constant " << kernel_AS_calibration() << " (pi^{-1/4} = " << std::pow(std::numbers::pi, -0.25)
       << ")";
  r.note = note.str();
  return r;
}

CheckResult kernel_AF_real_axis(const RunConfig& cfg) {
  auto r = start("kernel_AF_real_axis", "A^F(t, x) = A^S(t, x) for real t");
  for (double t : linspace(-2.0, 2.0, 20)) {
    for (double x : linspace(-3.0, 3.0, 20)) {
      r.record(rel_gap(kernel_AF(QuaternionFloat(t), x, 40).value, kernel_AS_series(QuaternionFloat(t), x, 40).value),
               cfg.tolerance);
    }
  }
  return r;
}

CheckResult kernel_AF_tail(const RunConfig& cfg) {
  auto r = start("kernel_AF_tail", "|A^F_{K+10} - A^F_K| <= reported tail");
  auto rng = stream(cfg, r.identity);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const QuaternionFloat q = random_point(rng, 2.0 * u(rng));
    const double x = 6.0 * u(rng) - 3.0;
    const auto a = kernel_AF(q, x, cfg.degree_cap);
    const auto b = kernel_AF(q, x, cfg.degree_cap + 10);
    r.record(std::max(0.0, norm(b.value - a.value) - a.tail), 1e-14);
  }
  return r;
}

CheckResult kernel_L_selfproduct_identity(const RunConfig& cfg) {
  auto r = start("kernel_L_selfproduct", "int L(q, z) conj(L(p, z)) dmu = K_fock(q, p)");
  auto rng = stream(cfg, r.identity);
  const auto plane = gaussian_plane(cfg.plane_radial, cfg.plane_angular);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const QuaternionFloat q = i == 0 ? QuaternionFloat() : random_point(rng, u(rng));
    const QuaternionFloat p = i == 0 ? QuaternionFloat() : random_point(rng, u(rng));
    const auto k = kernel_eval(WeightSequence::fock(), q, p, cfg.degree_cap);
    const auto l = kernel_L_selfproduct(q, p, sample_sphere(rng), plane, cfg.degree_cap);
    r.record(rel_gap(l, k.value), 1e-8);
  }
  return r;
}

CheckResult exponential_integrals(const RunConfig& cfg) {
  auto r = start("exponential_integrals", "int e^{x conj z} z^n dmu = x^n, int e^{x conj z + y z} dmu = e^{xy}");
  const auto plane = gaussian_plane(cfg.plane_radial, cfg.plane_angular);
  for (double x : {-1.0, 0.5, 1.5}) {
    for (unsigned n = 0; n <= 6; ++n) {
      const double expected = std::pow(x, n);
      r.record(std::abs(exponential_monomial_integral(x, n, plane) - expected) / std::max(1.0, std::abs(expected)), 1e-8);
    }
  }
  for (double x : linspace(-1.5, 1.5, 7)) {
    for (double y : linspace(-1.5, 1.5, 7)) {
      const double expected = std::exp(x * y);
      r.record(std::abs(exponential_pair_integral(x, y, plane) - expected) / std::max(1.0, expected), 1e-8);
    }
  }
  return r;
}

// ---------------------------------------------------------------- fmr

CheckResult tau_commuting_square(const RunConfig& cfg) {
  auto r = start("tau_commuting_square", "tau by coefficients = appell_expand(laplacian4(sum q^k a_k)), N <= 12");
  auto rng = stream(cfg, r.identity);
  const unsigned n = std::min(cfg.degree_cap, 12u);
  auto check = [&](const SliceSeries<Rational>& f) {
    try {
      (void)tau_series_checked(f);
      r.record_exact(true);
    } catch (const ModeDisagreement&) {
      r.record_exact(false);
    }
  };
  for (unsigned k = 0; k <= n; ++k) {
    check(SliceSeries<Rational>::unit(WeightSequence::hardy(), k));
  }
  for (int i = 0; i < 4; ++i) {
    check(random_slice_exact(rng, named_weights()[i % 4], n));
  }
  return r;
}

CheckResult fmr_norm_identity_check(const RunConfig& cfg) {
  auto r = start("fmr_norm_identity", "||tau f||_b = 2 sqrt(||f||_c^2 - |f(0)|^2 - c_1 |f'(0)|^2), exact, 500 per weight");
  auto rng = stream(cfg, r.identity);
  for (const auto& w : named_weights()) {
    for (int i = 0; i < 500; ++i) {
      r.record_exact(fmr_norm_identity(random_slice_exact(rng, w, cfg.degree_cap)).equal);
    }
  }
  return r;
}

CheckResult fmr_isometry_corollary(const RunConfig& cfg) {
  auto r = start("fmr_isometry_corollary", "||tau f||_b = 2 ||f||_c when a_0 = a_1 = 0, exact");
  auto rng = stream(cfg, r.identity);
  for (const auto& w : named_weights()) {
    for (int i = 0; i < 100; ++i) {
      auto f = random_slice_exact(rng, w, cfg.degree_cap);
      f.set(0, QuaternionExact());
      f.set(1, QuaternionExact());
      r.record_exact(norm_sq(tau_series(f)) == 4 * norm_sq(f));
    }
  }
  return r;
}

CheckResult fmr_range_preimage(const RunConfig& cfg) {
  auto r = start("fmr_range_preimage", "tau(tau_preimage(g)) = g for Appell series of truncation <= N");
  auto rng = stream(cfg, r.identity);
  std::uniform_int_distribution<unsigned> len(0, cfg.degree_cap);
  for (int i = 0; i < 100; ++i) {
    const auto& c = named_weights()[static_cast<std::size_t>(i) % 4];
    const auto g = random_appell_exact(rng, b_from_c(c), len(rng));
    r.record_exact(tau_series(tau_preimage(g, c)) == g);
  }
  return r;
}

CheckResult table1(const RunConfig&) {
  auto r = start("table1", "b_k columns and |f'(0)|^2 coefficients of the four weight rows, k <= 32");
  std::ostringstream note;
  for (const auto& row : table1_report(32)) {
    r.record_exact(row.b_exact && row.deficit == row.deficit_expected);
    note << row.space << ": " << (row.b_exact ? "exact" : "mismatch") << ", deficit " << row.deficit.get_str()
         << (row.note.empty() ? "" : " (" + row.note + ")") << "; ";
  }
  r.note = note.str();
  return r;
}

CheckResult b_from_c_transport(const RunConfig&) {
  auto r = start("b_from_c", "b_k = c_{k+2} / ((k+1)^2 (k+2)^2) exactly, positive for k <= 64");
  std::ostringstream note;
  note << "non_decreasing:";
  for (const auto& c : named_weights()) {
    const auto b = b_from_c(c);
    for (unsigned k = 0; k <= 64; ++k) {
      const Rational d = Rational((k + 1) * (k + 2));
      r.record_exact(b.value(k) == Rational(c.value(k + 2) / (d * d)) && b.value(k) > 0);
    }
    note << ' ' << b.name() << '=' << (b.non_decreasing() ? "true" : "false");
  }
  r.note = note.str();
  return r;
}

CheckResult fmr_convergence(const RunConfig&) {
  auto r = start("fmr_convergence", "ratios of sum (k+1)^2 (k+2)^2 / c_{k+2} |q|^{2k} tend to at most |q|^2");
  for (const auto& c : named_weights()) {
    for (double q : {0.0, 0.5, 0.9}) {
      const auto rep = fmr_convergence_check(c, q);
      r.record(rep.converges ? 0.0 : rep.limit - q * q, 1e-6);
      if (q == 0.0) {
        const double expected = 1.0 / b_from_c(c).value_d(0);
        r.record(std::abs(rep.partial_sums.back() - expected) / expected, 1e-15);
      }
    }
  }
  const auto hardy = fmr_convergence_check(WeightSequence::hardy(), 0.5);
  r.record(std::abs(hardy.limit - 0.25), 1e-6);
  bool threw = false;
  try {
    (void)fmr_convergence_check(WeightSequence::hardy(), 1.0);
  } catch (const OutOfDomain&) {
    threw = true;
  }
  r.record_exact(threw);
  return r;
}

struct Entry {
  const char* suite;
  CheckResult (*run)(const RunConfig&);
  const char* name;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {"appell", fueter_regularity, "fueter_regularity"},
      {"appell", appell_property, "appell_property"},
      {"appell", ck_product_identity, "ck_product"},
      {"appell", pk_closure, "pk_ck_closure"},
      {"appell", fueter_image_monomials, "fueter_image_monomials"},
      {"appell", tjk_row_sums, "tjk_row_sums"},
      {"appell", tjk_pochhammer_form, "tjk_pochhammer"},
      {"appell", ck_pairs, "ck_pairs"},
      {"appell", qk_modulus_bound, "qk_modulus_bound"},
      {"appell", qk_restrictions, "qk_restrictions"},
      {"appell", ck_extension_roundtrip, "ck_extension_roundtrip"},
      {"appell", eval_ring_real, "eval_ring_real"},
      {"appell", appell_expand_roundtrip, "appell_expand_roundtrip"},
      {"appell", gegenbauer_fit, "gegenbauer_fit"},
      {"appell", exp_truncated_real, "exp_truncated_real"},
      {"appell", fueter_variables, "fueter_variables"},
      {"spaces", orthonormal_basis, "orthonormal_basis"},
      {"spaces", pointwise_bound_check, "pointwise_bound"},
      {"spaces", kernel_tail_honesty, "kernel_tail_honesty"},
      {"spaces", kernel_closed_forms, "kernel_closed_forms"},
      {"spaces", kernel_hermitian, "kernel_hermitian"},
      {"spaces", reproducing_property, "reproducing_property"},
      {"spaces", inner_product_axioms, "inner_product_axioms"},
      {"spaces", series_real_axis, "series_real_axis"},
      {"spaces", weight_guards, "weight_guards"},
      {"operators", commutator_difference_identity, "commutator_difference"},
      {"operators", commutator_composites_reading, "commutator_composites_reading"},
      {"operators", gamma_recurrence, "gamma_recurrence"},
      {"operators", weighted_commutator_identity, "weighted_commutator_identity"},
      {"operators", weighted_commutator_iff, "weighted_commutator_iff"},
      {"operators", adjoint_S_fock, "adjoint_S_fock"},
      {"operators", adjoint_M_hardy, "adjoint_M_hardy"},
      {"operators", shift_isometry_hardy, "shift_isometry_hardy"},
      {"operators", norm_identity_fock, "norm_identity_fock"},
      {"operators", number_operator, "number_operator"},
      {"operators", annihilate_symbolic, "annihilate_symbolic"},
      {"operators", shift_ck, "shift_S_ck_product"},
      {"operators", backward_M_ck, "backward_M_ck_inverse"},
      {"operators", backward_M_basis, "backward_M_basis"},
      {"operators", backward_R_equals_M, "backward_R_equals_M"},
      {"operators", backward_R_partial_eps, "backward_R_partial"},
      {"operators", backward_inequality, "backward_inequality"},
      {"transforms", hermite_orthonormality, "hermite_orthonormality"},
      {"transforms", gaussian_moments, "gaussian_moments"},
      {"transforms", bf_isometry_coefficient, "bf_isometry_coefficient"},
      {"transforms", bf_isometry_quadrature, "bf_isometry_quadrature"},
      {"transforms", bf_hermite_units, "bf_hermite_units"},
      {"transforms", bs_inverse_modes, "bs_inverse_modes"},
      {"transforms", bs_inverse_isometry, "bs_inverse_isometry"},
      {"transforms", upsilon_modes, "upsilon_modes"},
      {"transforms", upsilon_unit_independence, "upsilon_unit_independence"},
      {"transforms", upsilon_monomials, "upsilon_monomials"},
      {"transforms", upsilon_pointwise, "upsilon_pointwise"},
      {"transforms", kernel_AS_closed_form, "kernel_AS_closed_form"},
      {"transforms", kernel_AF_real_axis, "kernel_AF_real_axis"},
      {"transforms", kernel_AF_tail, "kernel_AF_tail"},
      {"transforms", kernel_L_selfproduct_identity, "kernel_L_selfproduct"},
      {"transforms", exponential_integrals, "exponential_integrals"},
      {"fmr", tau_commuting_square, "tau_commuting_square"},
      {"fmr", fmr_norm_identity_check, "fmr_norm_identity"},
      {"fmr", fmr_isometry_corollary, "fmr_isometry_corollary"},
      {"fmr", fmr_range_preimage, "fmr_range_preimage"},
      {"fmr", table1, "table1"},
      {"fmr", b_from_c_transport, "b_from_c"},
      {"fmr", fmr_convergence, "fmr_convergence"},
  };
  return e;
}

CheckResult guarded(const IdentitySpec& spec, const RunConfig& cfg) {
  try {
    CheckResult r = spec.run(cfg);
    r.identity = spec.name;
    return r;
  } catch (const Error& e) {
    CheckResult r;
    r.identity = spec.name;
    r.pass = false;
    r.note = e.kind() + ": " + e.what();
    return r;
  } catch (const std::exception& e) {
    CheckResult r;
    r.identity = spec.name;
    r.pass = false;
    r.note = std::string("exception: ") + e.what();
    return r;
  }
}

std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::vector<IdentitySpec>& identity_registry() {
  static const std::vector<IdentitySpec> reg = [] {
    std::vector<IdentitySpec> v;
    for (const auto& e : entries()) {
      v.push_back({e.suite, e.name, e.run});
    }
    return v;
  }();
  return reg;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s = {"appell", "spaces", "operators", "transforms", "fmr"};
  return s;
}

std::vector<std::pair<std::string, std::string>> invariant_manifest() {
  std::vector<std::pair<std::string, std::string>> m;
  for (const auto& e : identity_registry()) {
    m.emplace_back(e.suite, e.name);
  }
  return m;
}

CheckResult run_identity(const std::string& name, const RunConfig& config) {
  for (const auto& spec : identity_registry()) {
    if (spec.name == name) {
      return guarded(spec, config);
    }
  }
  throw DomainError("unknown identity '" + name + "'");
}

std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& config) {
  config.validate();
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw DomainError("unknown suite '" + suite + "'");
  }
  std::vector<std::future<CheckResult>> tasks;
  for (const auto& spec : identity_registry()) {
    if (suite == "all" || spec.suite == suite) {
      tasks.push_back(std::async(std::launch::async, [&spec, &config] { return guarded(spec, config); }));
    }
  }
  std::vector<CheckResult> out;
  for (auto& t : tasks) {
    out.push_back(t.get());
  }
  return out;
}

bool Report::pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

nlohmann::json to_json(const Report& r) {
  Json results = Json::array();
  for (const auto& c : r.results) {
    results.push_back({{"identity", c.identity},
                       {"reference", c.reference},
                       {"instances", c.instances},
                       {"max_defect", c.max_defect},
                       {"pass", c.pass},
                       {"note", c.note}});
  }
  return {{"suite", r.suite}, {"config", to_json(r.config)}, {"pass", r.pass()}, {"results", results}};
}

std::string render(const Report& r, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json:
      os << to_json(r).dump(2) << '\n';
      break;
    case OutputFormat::csv:
      os << "identity,reference,instances,max_defect,pass,note\n";
      for (const auto& c : r.results) {
        os << c.identity << ',' << csv_escape(c.reference) << ',' << c.instances << ',' << c.max_defect << ','
           << (c.pass ? "true" : "false") << ',' << csv_escape(c.note) << '\n';
      }
      break;
    case OutputFormat::md:
      os << "| identity | instances | max defect | pass | note |\n|---|---|---|---|---|\n";
      for (const auto& c : r.results) {
        os << "| " << c.identity << " | " << c.instances << " | " << c.max_defect << " | "
           << (c.pass ? "pass" : "FAIL") << " | " << c.note << " |\n";
      }
      os << "\n" << (r.pass() ? "all identities pass" : "some identities FAIL") << '\n';
      break;
  }
  return os.str();
}

}  // namespace appellkit
