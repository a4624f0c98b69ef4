/// @file test_properties.cpp
/// @brief Randomized identities over exact quaternions and series.
/// Generators are hand rolled on a fixed-seed mt19937_64 so failures replay.

#include <gtest/gtest.h>

#include <random>

#include "appellkit/appell.hpp"
#include "appellkit/fueter_map.hpp"
#include "appellkit/operators.hpp"
#include "appellkit/spaces.hpp"

using namespace appellkit;

namespace {

constexpr int kIterations = 1000;

class ExactProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240601};

  QuaternionExact any() { return random_exact(rng); }
  QuaternionExact nonzero() {
    QuaternionExact q;
    do {
      q = any();
    } while (q.is_zero());
    return q;
  }
};

}  // namespace

TEST_F(ExactProperty, MultiplicationAssociative) {
  for (int i = 0; i < kIterations; ++i) {
    const auto a = any();
    const auto b = any();
    const auto c = any();
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST_F(ExactProperty, NormMultiplicative) {
  for (int i = 0; i < kIterations; ++i) {
    const auto a = any();
    const auto b = any();
    ASSERT_EQ(norm_sq(a * b), norm_sq(a) * norm_sq(b));
  }
}

TEST_F(ExactProperty, ConjugationReversesProducts) {
  for (int i = 0; i < kIterations; ++i) {
    const auto a = any();
    const auto b = any();
    ASSERT_EQ(conj(a * b), conj(b) * conj(a));
  }
}

TEST_F(ExactProperty, InverseIsTwoSided) {
  const QuaternionExact one(Rational(1));
  for (int i = 0; i < kIterations; ++i) {
    const auto a = nonzero();
    ASSERT_EQ(a * inverse(a), one);
    ASSERT_EQ(inverse(a) * a, one);
  }
}

TEST_F(ExactProperty, DistributiveBothSides) {
  for (int i = 0; i < kIterations; ++i) {
    const auto a = any();
    const auto b = any();
    const auto c = any();
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((b + c) * a, b * a + c * a);
  }
}

TEST_F(ExactProperty, RealAxisEvaluationOfQk) {
  // Q_k(t) = t^k
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  for (int i = 0; i < 200; ++i) {
    const Rational t = make_rational(num(rng), den(rng));
    const unsigned k = static_cast<unsigned>(i % 9);
    Rational tk(1);
    for (unsigned m = 0; m < k; ++m) {
      tk *= t;
    }
    ASSERT_EQ(eval(qk_symbolic(k), QuaternionExact(t)), QuaternionExact(tk));
  }
}

TEST_F(ExactProperty, InnerProductRightLinear) {
  for (int i = 0; i < 200; ++i) {
    const auto f = random_appell_exact(rng, WeightSequence::fock(), 6);
    const auto g = random_appell_exact(rng, WeightSequence::fock(), 6);
    const auto lambda = any();
    ASSERT_EQ(inner(f, g * lambda), inner(f, g) * lambda);
    ASSERT_EQ(inner(f, g), conj(inner(g, f)));
  }
}

TEST_F(ExactProperty, AdjointPairs) {
  for (int i = 0; i < 200; ++i) {
    const auto f = random_appell_exact(rng, WeightSequence::fock(), 8);
    const auto g = random_appell_exact(rng, WeightSequence::fock(), 8);
    ASSERT_EQ(adjoint_defect_S(f, g), 0.0);
    const AppellSeries<Rational> fh(WeightSequence::hardy(), f.coeffs());
    const AppellSeries<Rational> gh(WeightSequence::hardy(), g.coeffs());
    ASSERT_EQ(adjoint_defect_M(fh, gh), 0.0);
  }
}

TEST_F(ExactProperty, CanonicalCommutation) {
  for (int i = 0; i < 200; ++i) {
    const auto f = random_appell_exact(rng, WeightSequence::fock(), static_cast<unsigned>(i % 20));
    ASSERT_EQ(annihilate(shift_S(f)) - shift_S(annihilate(f)), f);
  }
}

TEST_F(ExactProperty, FmrNormIdentity) {
  for (const auto& w : {WeightSequence::hardy(), WeightSequence::fock(), WeightSequence::dirichlet(),
                        WeightSequence::bergman()}) {
    for (int i = 0; i < 100; ++i) {
      const auto f = random_slice_exact(rng, w, 10);
      ASSERT_TRUE(fmr_norm_identity(f).equal) << w.name();
    }
  }
}

TEST_F(ExactProperty, CkProductOfQkIsScaledQ) {
  std::uniform_int_distribution<unsigned> deg(0, 5);
  for (int i = 0; i < 10; ++i) {
    const unsigned k = deg(rng);
    const unsigned s = deg(rng);
    const auto lhs = ck_product(qk_symbolic(k), qk_symbolic(s));
    ASSERT_EQ(lhs, Rational(ck(k) * ck(s) / ck(k + s)) * qk_symbolic(k + s)) << k << "," << s;
  }
}

TEST(FloatProperty, QkModulusBound) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 1000; ++i) {
    const auto q = random_float(rng, 2.0);
    const auto values = qk_eval_all(12, q);
    for (unsigned k = 0; k <= 12; ++k) {
      ASSERT_LE(norm(values[k]), std::pow(norm(q), k) * (1 + 1e-12) + 1e-300);
    }
  }
}

TEST(FloatProperty, PointwiseBoundFock) {
  std::mt19937_64 rng(78);
  for (int i = 0; i < 1000; ++i) {
    const auto f = random_appell(rng, WeightSequence::fock(), 10);
    const auto q = random_float(rng, 1.5);
    ASSERT_LE(norm(eval_series(f, q)), pointwise_bound(f, q) * (1 + 1e-12));
  }
}
