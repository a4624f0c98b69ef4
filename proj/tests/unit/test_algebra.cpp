// Quaternion arithmetic, the polynomial engine, and the Appell system.

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "appellkit/appell.hpp"
#include "appellkit/qpoly.hpp"
#include "appellkit/spaces.hpp"

using namespace appellkit;

namespace {

QuaternionExact qx(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

}  // namespace

TEST(Quaternion, HamiltonRules) {
  const auto i = qx(0, 1, 0, 0);
  const auto j = qx(0, 0, 1, 0);
  const auto k = qx(0, 0, 0, 1);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, qx(-1, 0, 0, 0));
  EXPECT_EQ(i * j * k, qx(-1, 0, 0, 0));
}

TEST(Quaternion, InverseOfZeroThrows) { EXPECT_THROW((void)inverse(QuaternionExact()), DomainError); }

TEST(Quaternion, ExpOnSlice) {
  // exp(pi * omega) = -1 for every unit omega
  const auto omega = sample_sphere(std::uint64_t{3});
  const auto e = qexp(omega.slice_point(0.0, std::numbers::pi));
  EXPECT_NEAR(e.x0, -1.0, 1e-15);
  EXPECT_NEAR(norm(e.vec()), 0.0, 1e-15);
  EXPECT_NEAR(qexp(QuaternionFloat(1.0)).x0, std::numbers::e, 1e-15);
}

TEST(Quaternion, MakeRationalCanonical) { EXPECT_EQ(make_rational(4, -6), Rational(-2, 3)); }

TEST(QPoly, DegreeCapGuardsProducts) {
  ScopedDegreeCap cap(3);
  const QPoly x = QPoly::variable(0);
  EXPECT_NO_THROW((void)(x * x * x));
  EXPECT_THROW((void)(x * x * x * x), DegreeCapExceeded);
}

TEST(QPoly, NoncommutativeCoefficientOrder) {
  const QPoly a = QPoly(qx(0, 1, 0, 0));
  const QPoly b = QPoly(qx(0, 0, 1, 0));
  EXPECT_EQ(a * b, QPoly(qx(0, 0, 0, 1)));
  EXPECT_EQ(b * a, QPoly(qx(0, 0, 0, -1)));
}

TEST(QPoly, JsonRoundTrip) {
  const QPoly p = qk_symbolic(5) * qx(1, -2, 3, 4);
  EXPECT_EQ(qpoly_from_json(to_json(p)), p);
}

TEST(QPoly, QSquaredExpanded) {
  // q^2 = x0^2 - |v|^2 + 2 x0 v
  QPoly expected = QPoly::monomial({2, 0, 0, 0}, qx(1, 0, 0, 0));
  for (int l = 1; l <= 3; ++l) {
    Monomial sq{0, 0, 0, 0};
    sq[l] = 2;
    Monomial mixed{1, 0, 0, 0};
    mixed[l] = 1;
    QuaternionExact e;
    (l == 1 ? e.x1 : l == 2 ? e.x2 : e.x3) = 2;
    expected += QPoly::monomial(sq, qx(-1, 0, 0, 0)) + QPoly::monomial(mixed, e);
  }
  EXPECT_EQ(pow(embed_q(), 2), expected);
}

TEST(QPoly, LaplacianOfQSquared) {
  // Delta(x0^2 - |v|^2) = 2 - 6 = -4
  EXPECT_EQ(laplacian4(pow(embed_q(), 2)), QPoly(qx(-4, 0, 0, 0)));
}

TEST(QPoly, FueterOperatorKillsQButNotQbar) {
  EXPECT_FALSE(fueter_operator(embed_q()).is_zero());
  EXPECT_TRUE(fueter_operator(qk_symbolic(1)).is_zero());
}

TEST(QPoly, CkExtensionRejectsX0) {
  EXPECT_THROW((void)ck_extension(QPoly::variable(0)), NonRestrictedInput);
}

TEST(QPoly, CkExtensionOfConstantIsConstant) {
  EXPECT_EQ(ck_extension(QPoly(qx(2, 0, 1, 0))), QPoly(qx(2, 0, 1, 0)));
}

// ---- Appell coefficients

TEST(Appell, TjkSmallTable) {
  EXPECT_EQ(tjk(0, 0), 1);
  EXPECT_EQ(tjk(1, 0), Rational(2, 3));
  EXPECT_EQ(tjk(1, 1), Rational(1, 3));
  EXPECT_EQ(tjk(2, 0), Rational(1, 2));
  EXPECT_EQ(tjk(2, 1), Rational(1, 3));
  EXPECT_EQ(tjk(2, 2), Rational(1, 6));
  EXPECT_THROW((void)tjk(2, 3), IndexError);
}

TEST(Appell, PochhammerOracle) {
  EXPECT_EQ(pochhammer(Rational(3), 0), 1);
  EXPECT_EQ(pochhammer(Rational(3), 4), 3 * 4 * 5 * 6);
  EXPECT_EQ(pochhammer(Rational(1, 2), 2), Rational(3, 4));
}

TEST(Appell, CkFrozenValues) {
  const Rational expected[] = {1, Rational(1, 3), Rational(1, 3), Rational(1, 5), Rational(1, 5), Rational(1, 7)};
  for (unsigned k = 0; k < 6; ++k) {
    EXPECT_EQ(ck(k), expected[k]) << "k=" << k;
  }
}

TEST(Appell, Q1AndQ2HandExpanded) {
  // Q_1 = x0 + v/3
  const QPoly q1 = QPoly::variable(0) + make_rational(1, 3) * embed_vec();
  EXPECT_EQ(qk_symbolic(1), q1);
  // Q_2 = x0^2 + (2/3) x0 v - |v|^2/3
  const QPoly x0 = QPoly::variable(0);
  const QPoly v = embed_vec();
  const QPoly q2 = x0 * x0 + make_rational(2, 3) * (x0 * v) + make_rational(1, 3) * (v * v);
  EXPECT_EQ(qk_symbolic(2), q2);
}

TEST(Appell, GoldenQ2) {
  std::ifstream in(std::string(APPELLKIT_TEST_DATA) + "/golden/q2.json");
  ASSERT_TRUE(in) << "missing golden file";
  nlohmann::json j;
  in >> j;
  EXPECT_EQ(qpoly_from_json(j), qk_symbolic(2));
  EXPECT_EQ(to_json(qk_symbolic(2)), j);
}

TEST(Appell, EvalMatchesSymbolic) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const QuaternionFloat q = random_float(rng, 1.5);
    for (unsigned k = 0; k <= 10; ++k) {
      const auto a = qk_eval(k, q);
      const auto b = eval(qk_symbolic(k), q);
      EXPECT_LE(norm(a - b), 1e-12 * std::max(1.0, norm(b))) << "k=" << k;
    }
  }
}

TEST(Appell, FiniteDifferenceAppellProperty) {
  // For a regular f, (dbar/2) f = d f / d x0, so d Q_k / d x0 = k Q_{k-1}.
  std::mt19937_64 rng(9);
  const double h = 1e-5;
  for (int i = 0; i < 20; ++i) {
    const QuaternionFloat q = random_float(rng, 0.8);
    const QuaternionFloat dx(h);
    for (unsigned k = 1; k <= 8; ++k) {
      const auto fd = (qk_eval(k, q + dx) - qk_eval(k, q - dx)) * (1.0 / (2 * h));
      const auto expected = qk_eval(k - 1, q) * static_cast<double>(k);
      EXPECT_LE(norm(fd - expected), 1e-7 * std::max(1.0, norm(expected))) << "k=" << k;
    }
  }
}

TEST(Appell, FiniteDifferenceFueterRegular) {
  // sum e_l d/dx_l Q_k + d/dx0 Q_k = 0, by central differences
  std::mt19937_64 rng(10);
  const double h = 1e-5;
  const QuaternionFloat e[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int i = 0; i < 10; ++i) {
    const QuaternionFloat q = random_float(rng, 0.8);
    for (unsigned k = 1; k <= 8; ++k) {
      QuaternionFloat d;
      for (int l = 0; l < 4; ++l) {
        const auto part = (qk_eval(k, q + e[l] * h) - qk_eval(k, q - e[l] * h)) * (1.0 / (2 * h));
        d += e[l] * part;
      }
      EXPECT_LE(norm(d), 1e-7) << "k=" << k;
    }
  }
}

TEST(Appell, GegenbauerConstants) {
  // constants measured with r = |q|: (n+2)/(n+1) for odd n, 1 for even n
  for (unsigned n = 1; n <= 6; ++n) {
    const auto fit = gegenbauer_ck_check(n);
    const double expected = n % 2 == 1 ? (n + 2.0) / (n + 1.0) : 1.0;
    EXPECT_NEAR(fit.constant, expected, 1e-10) << "n=" << n;
    EXPECT_LT(fit.residual, 1e-10);
  }
}

TEST(Appell, ExpTruncatedReal) {
  const auto v = exp_truncated(QuaternionFloat(1.0), 20);
  EXPECT_NEAR(v.value.x0, std::numbers::e, 1e-15 + v.tail);
  EXPECT_LT(v.tail, 1e-17);
}

TEST(Appell, AxialDecomposition) {
  const auto parts = axial_decompose(qk_symbolic(3));
  const auto omega = sample_sphere(std::uint64_t{21});
  const auto q = omega.slice_point(0.3, 0.4);
  EXPECT_LE(norm(eval_axial(parts, 0.3, 0.4, omega) - qk_eval(3, q)), 1e-13);
}

TEST(Appell, ExpandRejectsNonRegular) {
  EXPECT_THROW((void)appell_expand(embed_q()), NotRegular);
}

TEST(Appell, FueterVariableIndexChecked) { EXPECT_THROW((void)fueter_variable(4), IndexError); }
