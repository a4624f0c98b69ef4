// Weighted spaces, operators, quadrature, transforms and the Fueter map.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "appellkit/appell.hpp"
#include "appellkit/fueter_map.hpp"
#include "appellkit/operators.hpp"
#include "appellkit/quadrature.hpp"
#include "appellkit/spaces.hpp"
#include "appellkit/transforms.hpp"

using namespace appellkit;

namespace {

const WeightSequence kHardy = WeightSequence::hardy();
const WeightSequence kFock = WeightSequence::fock();

double factorial(unsigned k) { return std::tgamma(k + 1.0); }

}  // namespace

// ---- spaces

TEST(Spaces, NamedWeights) {
  EXPECT_EQ(kFock.value(5), 120);
  EXPECT_EQ(WeightSequence::bergman().value(3), Rational(1, 4));
  EXPECT_EQ(WeightSequence::dirichlet().value(0), 1);
  EXPECT_TRUE(WeightSequence::dirichlet().c0_overridden());
  EXPECT_THROW((void)WeightSequence::named("sobolev"), DomainError);
}

TEST(Spaces, RadiusOfConvergence) {
  EXPECT_TRUE(std::isinf(kFock.radius()));
  EXPECT_EQ(kHardy.radius(), 1.0);
  // extrapolated from ratios at k = 64..128, so only close to 1
  EXPECT_NEAR(b_from_c(kHardy).radius(), 1.0, 1e-6);
  EXPECT_TRUE(std::isinf(b_from_c(kFock).radius()));
}

TEST(Spaces, NonDecreasingFlag) {
  EXPECT_TRUE(kHardy.non_decreasing());
  EXPECT_TRUE(kFock.non_decreasing());
  EXPECT_FALSE(WeightSequence::bergman().non_decreasing());
}

TEST(Spaces, NormOfQ2InFock) {
  // ||Q_2||^2 = b_2 = 2
  const auto e = AppellSeries<double>::unit(kFock, 2);
  EXPECT_NEAR(norm(e), std::sqrt(2.0), 1e-15);
}

TEST(Spaces, EqualityIgnoresTrailingZeros) {
  AppellSeries<Rational> a(kHardy, {QuaternionExact(Rational(1)), QuaternionExact()});
  AppellSeries<Rational> b(kHardy, {QuaternionExact(Rational(1))});
  EXPECT_EQ(a, b);
}

TEST(Spaces, KernelAtOriginIsOne) {
  for (const auto& w : {kHardy, kFock, WeightSequence::dirichlet(), WeightSequence::bergman()}) {
    const auto k = kernel_eval(w, QuaternionFloat(), QuaternionFloat(), 12);
    EXPECT_NEAR(k.value.x0, 1.0 / w.value_d(0), 1e-15) << w.name();
    EXPECT_EQ(k.tail, 0.0);
  }
}

TEST(Spaces, FockKernelRealClosedForm) {
  const auto k = kernel_eval(kFock, QuaternionFloat(0.5), QuaternionFloat(0.5), 20);
  EXPECT_NEAR(k.value.x0, std::exp(0.25), 1e-14 + k.tail);
}

TEST(Spaces, HardyKernelOutsideBall) {
  EXPECT_THROW((void)kernel_eval(kHardy, QuaternionFloat(1.2), QuaternionFloat(), 12), OutOfDomain);
}

TEST(Spaces, WeightPowerSumOracles) {
  // sum x^k / k! = e^x, sum x^k = 1/(1-x), sum (k+1) x^k = 1/(1-x)^2
  EXPECT_NEAR(weight_power_sum(kFock, 1.3), std::exp(1.3), 1e-13);
  EXPECT_NEAR(weight_power_sum(kHardy, 0.4), 1.0 / 0.6, 1e-14);
  EXPECT_NEAR(weight_power_sum(WeightSequence::bergman(), 0.4), 1.0 / 0.36, 1e-13);
  EXPECT_THROW((void)weight_power_sum(kHardy, 1.0), OutOfDomain);
}

TEST(Spaces, ExtrapolationOfPolynomialInH) {
  // Neville is exact on polynomials in h
  std::vector<double> h{0.5, 0.25, 0.125, 0.0625};
  std::vector<double> y;
  for (double t : h) {
    y.push_back(3.0 + 2.0 * t - t * t);
  }
  EXPECT_NEAR(extrapolate_at_zero(h, y), 3.0, 1e-13);
}

// ---- operators

TEST(Operators, ShiftAndAnnihilateOnUnits) {
  const auto e3 = AppellSeries<Rational>::unit(kFock, 3);
  EXPECT_EQ(shift_S(e3), (AppellSeries<Rational>::unit(kFock, 4)));
  EXPECT_EQ(annihilate(e3), (AppellSeries<Rational>::unit(kFock, 2, QuaternionExact(Rational(3)))));
  EXPECT_EQ(annihilate(AppellSeries<Rational>::unit(kFock, 0)), AppellSeries<Rational>(kFock));
}

TEST(Operators, GammaMustStartAtOne) {
  EXPECT_THROW((void)WeightedShiftSpec::from_values({0.5}), DomainError);
  EXPECT_TRUE(gamma_recurrence_check(WeightedShiftSpec::identity(), 64).holds);
}

TEST(Operators, GammaFaultNamesFirstIndex) {
  const auto r = gamma_recurrence_check(WeightedShiftSpec::from_values({1.0, 0.9}), 64);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.first_failure.has_value());
  EXPECT_EQ(*r.first_failure, 1u);
}

TEST(Operators, DilationScalesCoefficients) {
  const auto f = AppellSeries<double>::unit(kHardy, 3);
  EXPECT_NEAR(dilate(f, 0.5).coeff(3).x0, 0.125, 1e-16);
}

TEST(Operators, BackwardRMatchesM) {
  std::mt19937_64 rng(1);
  const auto f = random_appell(rng, kHardy, 10);
  const auto rule = gauss_legendre(64);
  EXPECT_NO_THROW((void)backward_R_integral(f, rule));
}

TEST(Operators, BackwardRNeedsLegendreRule) {
  EXPECT_THROW((void)backward_R_partial(AppellSeries<double>::unit(kHardy, 1), 0.0, gauss_hermite(10)), QuadratureFailure);
}

TEST(Operators, BackwardInequalityNeedsMonotoneWeight) {
  const auto f = AppellSeries<double>::unit(WeightSequence::bergman(), 2);
  EXPECT_THROW((void)backward_inequality_check(f, gauss_legendre(64)), DomainError);
}

TEST(Operators, HardyEquality) {
  // ||M f||^2 = ||f||^2 - |f(0)|^2 on hardy
  const std::vector<QuaternionFloat> c{{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 0, -1}};
  const auto b = backward_inequality_check(AppellSeries<double>(kHardy, c), gauss_legendre(64));
  EXPECT_NEAR(b.lhs, 5.0, 1e-13);
  EXPECT_NEAR(b.rhs, 5.0, 1e-13);
  EXPECT_TRUE(b.equality);
}

// ---- quadrature

TEST(Quadrature, LegendreMonomials) {
  const auto r = gauss_legendre(10);
  for (unsigned k = 0; k < 20; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r.w[i] * std::pow(r.x[i], k);
    }
    EXPECT_NEAR(s, 1.0 / (k + 1), 1e-15) << "k=" << k;
  }
}

TEST(Quadrature, LaguerreFactorialMoments) {
  const auto r = gauss_laguerre(20);
  for (unsigned k = 0; k < 30; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r.w[i] * std::pow(r.x[i], k);
    }
    EXPECT_NEAR(s / factorial(k), 1.0, 1e-12) << "k=" << k;
  }
}

TEST(Quadrature, HermiteEvenMoments) {
  // int x^{2m} e^{-x^2} = Gamma(m + 1/2)
  const auto r = gauss_hermite(30);
  for (unsigned m = 0; m < 20; ++m) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r.w[i] * std::pow(r.x[i], 2 * m);
    }
    EXPECT_NEAR(s / std::tgamma(m + 0.5), 1.0, 1e-12) << "m=" << m;
  }
}

TEST(Quadrature, PlaneExactnessRecorded) {
  EXPECT_EQ(gaussian_plane(64, 128).exactness, 127u);
  EXPECT_EQ(gaussian_plane(8, 128).exactness, 30u);
  EXPECT_THROW((void)gaussian_moment(20, 20, gaussian_plane(8, 128)), ExactnessExceeded);
}

TEST(Quadrature, PlaneMomentsDiagonal) {
  const auto plane = gaussian_plane();
  EXPECT_NEAR(std::abs(gaussian_moment(5, 5, plane) - 120.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(gaussian_moment(5, 4, plane)), 0.0, 1e-10);
}

// ---- transforms

TEST(Transforms, HermiteFrozenValues) {
  // eta_0(0) = pi^{-1/4}, eta_1(x) = sqrt(2) x eta_0(x), eta_2(0) = -pi^{-1/4}/sqrt(2)
  const double c = std::pow(std::numbers::pi, -0.25);
  const auto h = hermite_functions(2, 0.0);
  EXPECT_NEAR(h[0], c, 1e-16);
  EXPECT_NEAR(h[1], 0.0, 1e-16);
  EXPECT_NEAR(h[2], -c / std::sqrt(2.0), 3e-16);
  EXPECT_NEAR(hermite_functions(1, 0.7)[1], std::sqrt(2.0) * 0.7 * c * std::exp(-0.245), 1e-15);
}

TEST(Transforms, HermiteOrthonormalTrapezoid) {
  // independent of the Gauss rule: trapezoid on [-12, 12] is spectrally accurate here
  const double a = -12.0;
  const double h = 0.01;
  const int n = 2400;
  for (unsigned m = 0; m <= 8; ++m) {
    for (unsigned k = 0; k <= 8; ++k) {
      double s = 0.0;
      for (int i = 0; i <= n; ++i) {
        const auto e = hermite_functions(8, a + i * h);
        s += e[m] * e[k] * h;
      }
      EXPECT_NEAR(s, m == k ? 1.0 : 0.0, 1e-12) << m << "," << k;
    }
  }
}

TEST(Transforms, HermiteBasisIndexGuard) {
  HermiteBasis b(4);
  EXPECT_THROW((void)b.eval(5, 0.0), IndexError);
}

TEST(Transforms, CalibrationIsPiToMinusQuarter) {
  EXPECT_NEAR(kernel_AS_calibration(), std::pow(std::numbers::pi, -0.25), 1e-15);
}

TEST(Transforms, BFOfEta3) {
  L2Function phi;
  phi.beta.assign(4, QuaternionFloat());
  phi.beta[3] = QuaternionFloat(1.0);
  const auto f = bargmann_BF(phi);
  EXPECT_NEAR(f.coeff(3).x0, 1.0 / std::sqrt(6.0), 1e-16);
  EXPECT_NEAR(norm(f), 1.0, 1e-15);
}

TEST(Transforms, BSInverseOfOne) {
  // (B^S)^{-1} 1 = eta_0
  const auto phi = bargmann_BS_inverse(SliceSeries<double>::unit(kFock, 0));
  EXPECT_NEAR(phi(0.0).x0, std::pow(std::numbers::pi, -0.25), 1e-15);
}

TEST(Transforms, UpsilonOfMonomial) {
  const auto plane = gaussian_plane();
  const auto hermite = gauss_hermite(80);
  const auto f = SliceSeries<double>::unit(kFock, 4);
  const auto g = upsilon(f, ImaginaryUnit::k(), TransformMode::quadrature, plane, hermite);
  EXPECT_NEAR(g.coeff(4).x0, 1.0, 1e-10);
  EXPECT_NEAR(norm(g.coeff(3)), 0.0, 1e-10);
}

TEST(Transforms, ExponentialPairIntegral) {
  const auto plane = gaussian_plane();
  EXPECT_NEAR(std::abs(exponential_pair_integral(0.7, -1.1, plane) - std::exp(-0.77)), 0.0, 1e-12);
}

// ---- Fueter map

TEST(FueterMap, TauOfQSquaredAndQFourth) {
  const auto q2 = tau_series_checked(SliceSeries<Rational>::unit(kHardy, 2));
  EXPECT_EQ(q2.coeff(0), QuaternionExact(Rational(-4)));
  const auto q4 = tau_series_checked(SliceSeries<Rational>::unit(kHardy, 4));
  EXPECT_EQ(q4.coeff(2), QuaternionExact(Rational(-24)));
  EXPECT_EQ(q4.coeff(0), QuaternionExact());
}

TEST(FueterMap, TauKillsAffine) {
  const SliceSeries<Rational> f(kHardy, {QuaternionExact(Rational(3)), QuaternionExact(Rational(-2))});
  EXPECT_EQ(tau_series_checked(f).size(), 0u);
}

TEST(FueterMap, FockTransportFrozen) {
  const auto b = b_from_c(kFock);
  EXPECT_EQ(b.value(0), Rational(1, 2));
  EXPECT_EQ(b.value(2), Rational(1, 6));
  EXPECT_EQ(b_from_c(kHardy).value(1), Rational(1, 36));
  EXPECT_EQ(b_from_c(WeightSequence::bergman()).value(0), Rational(1, 12));
  EXPECT_EQ(b_from_c(WeightSequence::dirichlet()).value(2), Rational(1, 36));
}

TEST(FueterMap, NormIdentityOnQSquaredFock) {
  // ||tau q^2||^2 = 16 b_0 = 8
  const auto r = fmr_norm_identity(SliceSeries<Rational>::unit(kFock, 2));
  EXPECT_EQ(r.lhs_sq, 8);
  EXPECT_EQ(r.rhs_sq, 8);
  EXPECT_NEAR(r.lhs, 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_TRUE(r.equal);
}

TEST(FueterMap, Table1BergmanDeficit) {
  const auto rows = table1_report(32);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3].space, "bergman");
  EXPECT_EQ(rows[3].deficit, Rational(1, 2));
  for (const auto& r : rows) {
    EXPECT_TRUE(r.b_exact) << r.space;
  }
}

TEST(FueterMap, ConvergenceLimits) {
  const auto hardy = fmr_convergence_check(kHardy, 0.5);
  EXPECT_NEAR(hardy.limit, 0.25, 1e-6);
  EXPECT_TRUE(hardy.converges);
  EXPECT_TRUE(fmr_convergence_check(WeightSequence::bergman(), 0.9).converges);
  EXPECT_THROW((void)fmr_convergence_check(kHardy, 1.0), OutOfDomain);
}

TEST(FueterMap, PreimageRoundTrip) {
  std::mt19937_64 rng(4);
  const auto g = random_appell_exact(rng, b_from_c(kFock), 12);
  EXPECT_EQ(tau_series(tau_preimage(g, kFock)), g);
}
