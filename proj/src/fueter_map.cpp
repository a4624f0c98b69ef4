#include "appellkit/fueter_map.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace appellkit {

namespace {

Rational sq(const Rational& r) { return r * r; }

}  // namespace

WeightSequence b_from_c(const WeightSequence& c) {
  return WeightSequence::custom("fmr(" + c.name() + ")", [c](unsigned k) -> Rational {
    const long a = static_cast<long>(k) + 1;
    return c.value(k + 2) / Rational(a * a * (a + 1) * (a + 1));
  });
}

AppellSeries<Rational> tau_series_symbolic(const SliceSeries<Rational>& f) {
  const QPoly g = laplacian4(synthesize_slice(f.coeffs()));
  return AppellSeries<Rational>(b_from_c(f.weight()), appell_expand(g));
}

AppellSeries<Rational> tau_series_checked(const SliceSeries<Rational>& f) {
  AppellSeries<Rational> coefficient = tau_series(f);
  if (!(coefficient == tau_series_symbolic(f))) {
    throw ModeDisagreement("tau by coefficients and by the symbolic Laplacian disagree");
  }
  return coefficient;
}

SliceSeries<Rational> tau_preimage(const AppellSeries<Rational>& g, const WeightSequence& c) {
  std::vector<QuaternionExact> a(g.size() + 2);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const long s = static_cast<long>((k + 1) * (k + 2));
    a[k + 2] = g.coeffs()[k] * make_rational(-1, 2 * s);
  }
  return SliceSeries<Rational>(c, std::move(a));
}

FmrNormIdentity fmr_norm_identity(const SliceSeries<Rational>& f) {
  FmrNormIdentity out;
  out.lhs_sq = norm_sq(tau_series(f));
  const Rational c1 = f.weight().value(1);
  out.rhs_sq = 4 * (norm_sq(f) - norm_sq(f.coeff(0)) - c1 * norm_sq(f.coeff(1)));
  out.lhs = std::sqrt(out.lhs_sq.get_d());
  out.rhs = 2.0 * std::sqrt(std::max(0.0, Rational(out.rhs_sq / 4).get_d()));
  out.equal = out.lhs_sq == out.rhs_sq;
  return out;
}

ConvergenceReport fmr_convergence_check(const WeightSequence& c, double q_modulus, unsigned n) {
  if (!(q_modulus >= 0.0 && q_modulus < 1.0)) {
    throw OutOfDomain("the convergence check needs 0 <= |q| < 1");
  }
  ConvergenceReport rep;
  const double r2 = q_modulus * q_modulus;
  auto log_term = [&](unsigned k) {
    const double a = k + 1.0;
    return 2.0 * std::log(a * (a + 1.0)) - c.log_value(k + 2);
  };
  double sum = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    const double term = r2 == 0.0 ? (k == 0 ? std::exp(log_term(0)) : 0.0) : std::exp(log_term(k) + k * std::log(r2));
    sum += term;
    rep.partial_sums.push_back(sum);
    if (k < n) {
      rep.ratios.push_back(r2 * std::exp(log_term(k + 1) - log_term(k)));
    }
  }
  if (rep.ratios.size() >= 12) {
    std::vector<double> h;
    std::vector<double> y;
    for (unsigned i = 0; i < 6; ++i) {
      const std::size_t k = rep.ratios.size() / 2 + i * (rep.ratios.size() / 2 - 1) / 5;
      h.push_back(1.0 / (k + 1.0));
      y.push_back(rep.ratios[k]);
    }
    rep.limit = extrapolate_at_zero(h, y);
  } else {
    rep.limit = rep.ratios.empty() ? 0.0 : rep.ratios.back();
  }
  const double rho = rep.ratios.empty() ? 0.0 : std::max(rep.ratios.back(), rep.limit);
  const double last = rep.partial_sums.size() > 1 ? rep.partial_sums.back() - rep.partial_sums[rep.partial_sums.size() - 2]
                                                  : 0.0;
  rep.tail = rho < 1.0 ? last * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
  rep.converges = rep.limit <= r2 + 1e-6;
  return rep;
}

std::vector<FmrRow> table1_report(unsigned kmax) {
  struct Spec {
    WeightSequence c;
    const char* c_formula;
    const char* b_formula;
    Rational deficit;
    std::function<Rational(unsigned)> b;
  };
  auto fact = [](unsigned k) -> Rational {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
  };
  const std::vector<Spec> specs = {
      {WeightSequence::hardy(), "1", "1/((k+1)^2 (k+2)^2)", Rational(1),
       [](unsigned k) -> Rational { return Rational(1) / sq(Rational((k + 1) * (k + 2))); }},
      {WeightSequence::fock(), "k!", "k!/((k+1)(k+2))", Rational(1),
       [fact](unsigned k) -> Rational { return fact(k) / Rational((k + 1) * (k + 2)); }},
      {WeightSequence::dirichlet(), "k", "1/((k+1)^2 (k+2))", Rational(1),
       [](unsigned k) -> Rational { return Rational(1) / (sq(Rational(k + 1)) * Rational(k + 2)); }},
      {WeightSequence::bergman(), "1/(k+1)", "1/((k+3)(k+1)^2 (k+2)^2)", make_rational(1, 2),
       [](unsigned k) -> Rational { return Rational(1) / (Rational(k + 3) * sq(Rational((k + 1) * (k + 2)))); }},
  };
  std::vector<FmrRow> rows;
  for (const auto& s : specs) {
    FmrRow row{.space = s.c.name(),
               .c_formula = s.c_formula,
               .b_formula = s.b_formula,
               .norm_formula = "",
               .c = s.c,
               .deficit = s.c.value(1),
               .deficit_expected = s.deficit,
               .b_exact = false,
               .checked_up_to = 0,
               .note = ""};
    const WeightSequence b = b_from_c(s.c);
    row.b_exact = true;
    for (unsigned k = 0; k <= kmax; ++k) {
      Rational closed = s.b(k);
      closed.canonicalize();
      if (b.value(k) != closed) {
        row.b_exact = false;
      }
    }
    row.checked_up_to = kmax;
    std::ostringstream norm_text;
    norm_text << "2 sqrt(||f||^2 - |f(0)|^2 - ";
    if (row.deficit != 1) {
      norm_text << row.deficit.get_str() << " ";
    }
    norm_text << "|f'(0)|^2)";
    row.norm_formula = norm_text.str();
    if (s.c.c0_overridden()) {
      row.note = "c_0 overridden to 1";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table1_markdown(const std::vector<FmrRow>& rows) {
  std::ostringstream os;
  os << "| space | c_k | b_k | norm of tau f | b exact (k <= N) | deficit c_1 | note |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.space << " | " << r.c_formula << " | " << r.b_formula << " | " << r.norm_formula << " | "
       << (r.b_exact ? "exact" : "MISMATCH") << " (" << r.checked_up_to << ") | " << r.deficit.get_str()
       << (r.deficit == r.deficit_expected ? "" : " (expected " + r.deficit_expected.get_str() + ")") << " | "
       << r.note << " |\n";
  }
  return os.str();
}

std::string table1_csv(const std::vector<FmrRow>& rows) {
  std::ostringstream os;
  os << "space,c_k,b_k,norm,b_exact,checked_up_to,deficit,deficit_expected,note\n";
  for (const auto& r : rows) {
    os << r.space << ',' << '"' << r.c_formula << '"' << ',' << '"' << r.b_formula << '"' << ',' << '"'
       << r.norm_formula << '"' << ',' << (r.b_exact ? "exact" : "mismatch") << ',' << r.checked_up_to << ','
       << r.deficit.get_str() << ',' << r.deficit_expected.get_str() << ',' << r.note << '\n';
  }
  return os.str();
}

}  // namespace appellkit
