#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lgbell/modes.hpp"
#include "lgbell/quadrature.hpp"
#include "oracles.hpp"

using namespace lgbell;

namespace {

constexpr double kInvSqrtPi = 0.56418958354775628695;

std::vector<ModeIndex> modes_up_to(int total) {
  std::vector<ModeIndex> out;
  for (int n = 0; n <= total; ++n)
    for (int m = 0; n + m <= total; ++m) out.push_back({n, m});
  return out;
}

// <a|b> over the plane with exp(-X^2-Y^2) folded into Gauss-Hermite weights.
complex overlap(ModeIndex a, ModeIndex b, int order = 48) {
  const GaussRule rule = gauss_nodes(QuadratureRule::gauss_hermite, order);
  complex sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double w = rule.weights[i] * rule.weights[j];
      sum += w * std::conj(lg_jet(a, rule.nodes[i], rule.nodes[j], false).value) *
             lg_jet(b, rule.nodes[i], rule.nodes[j], false).value;
    }
  return sum;
}

}  // namespace

TEST(LgAmplitude, LowestVortexMode) {
  const complex v = lg_amplitude({1, 0}, 1.0, 0.0);
  EXPECT_NEAR(v.real(), kInvSqrtPi * std::exp(-0.5), 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  EXPECT_NEAR(v.real(), 0.342, 5e-4);

  // (1/sqrt(pi)) (X + iY) exp(-(X^2+Y^2)/2)
  for (double x : {-1.3, 0.2, 0.9})
    for (double y : {-0.7, 0.0, 1.4}) {
      const complex expected = kInvSqrtPi * complex(x, y) * std::exp(-0.5 * (x * x + y * y));
      EXPECT_NEAR(std::abs(lg_amplitude({1, 0}, x, y) - expected), 0.0, 1e-15);
    }
}

TEST(LgAmplitude, GroundModePeak) {
  EXPECT_NEAR(lg_amplitude({0, 0}, 0.0, 0.0).real(), kInvSqrtPi, 1e-15);
}

TEST(LgAmplitude, MatchesPolarForm) {
  const complex ref = oracle::lg_polar(2, 1, 0.7, -0.3);
  EXPECT_NEAR(std::abs(lg_amplitude({2, 1}, 0.7, -0.3) - ref), 0.0, 1e-13);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (const ModeIndex mode : modes_up_to(10)) {
    for (int k = 0; k < 20; ++k) {
      const double x = u(rng);
      const double y = u(rng);
      ASSERT_NEAR(std::abs(lg_amplitude(mode, x, y) - oracle::lg_polar(mode.n, mode.m, x, y)), 0.0,
                  1e-12)
          << mode.n << "," << mode.m;
    }
  }
}

TEST(LgAmplitude, UnitNormAndOrthogonality) {
  for (const ModeIndex mode : modes_up_to(10)) {
    EXPECT_NEAR(overlap(mode, mode).real(), 1.0, 1e-8) << mode.n << "," << mode.m;
  }
  const auto small = modes_up_to(6);
  for (const ModeIndex a : small)
    for (const ModeIndex b : small) {
      const double expected = a == b ? 1.0 : 0.0;
      const complex v = overlap(a, b, 24);
      ASSERT_NEAR(v.real(), expected, 1e-8);
      ASSERT_NEAR(v.imag(), 0.0, 1e-8);
    }
}

TEST(LgAmplitude, AzimuthalPhaseWinding) {
  for (const ModeIndex mode : modes_up_to(8)) {
    const double rho = 1.3;
    const complex base = lg_amplitude(mode, rho, 0.0);
    for (double theta = 0.1; theta < 2.0 * std::numbers::pi; theta += 0.37) {
      const complex v = lg_amplitude(mode, rho * std::cos(theta), rho * std::sin(theta)) *
                        std::polar(1.0, -mode.orbital_angular_momentum() * theta);
      ASSERT_NEAR(std::abs(v - base), 0.0, 1e-10);
    }
  }
}

TEST(LgJet, GradientMatchesFiniteDifference) {
  const double h = 1e-6;
  for (const ModeIndex mode : modes_up_to(6)) {
    for (auto [x, y] : {std::pair{0.3, -0.8}, std::pair{-1.2, 0.5}, std::pair{0.0, 0.0}}) {
      const FieldJet jet = lg_jet(mode, x, y);
      const complex fd_x = (lg_amplitude(mode, x + h, y) - lg_amplitude(mode, x - h, y)) / (2 * h);
      const complex fd_y = (lg_amplitude(mode, x, y + h) - lg_amplitude(mode, x, y - h)) / (2 * h);
      ASSERT_NEAR(std::abs(jet.d_x - fd_x), 0.0, 1e-8);
      ASSERT_NEAR(std::abs(jet.d_y - fd_y), 0.0, 1e-8);
    }
  }
}

TEST(HgAmplitude, Values) {
  EXPECT_NEAR(hg_amplitude({0, 0}, 0.0, 0.0), kInvSqrtPi, 1e-15);
  for (double x : {-2.0, -0.5, 0.3, 1.7}) {
    EXPECT_NEAR(hg_amplitude({1, 0}, x, 0.0),
                std::sqrt(2.0 / std::numbers::pi) * x * std::exp(-0.5 * x * x), 1e-15);
    EXPECT_EQ(hg_amplitude({0, 1}, x, 0.0), 0.0);
  }
}

TEST(ModeIndex, Validation) {
  EXPECT_THROW(validate(ModeIndex{-1, 0}), std::invalid_argument);
  EXPECT_THROW(validate(ModeIndex{40, 25}), std::invalid_argument);
  EXPECT_NO_THROW(validate(ModeIndex{32, 32}));
  EXPECT_THROW(lg_amplitude({70, 0}, 0.0, 0.0), std::invalid_argument);
  EXPECT_EQ((ModeIndex{3, 5}.orbital_angular_momentum()), -2);
}

TEST(Schmidt, GroundMode) {
  const auto terms = schmidt_coefficients({0, 0});
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].hg_index, (ModeIndex{0, 0}));
  EXPECT_NEAR(std::abs(terms[0].coefficient - 1.0), 0.0, 1e-15);
}

TEST(Schmidt, LowestVortexModeIsXPlusIY) {
  const auto terms = schmidt_coefficients({1, 0});
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].hg_index, (ModeIndex{1, 0}));
  EXPECT_EQ(terms[1].hg_index, (ModeIndex{0, 1}));
  EXPECT_NEAR(std::abs(terms[0].coefficient), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(std::abs(terms[1].coefficient), 1.0 / std::numbers::sqrt2, 1e-15);
  // c_1 / c_0 = +i: u_10 + i u_01 is proportional to X + iY.
  const complex ratio = terms[1].coefficient / terms[0].coefficient;
  EXPECT_NEAR(std::abs(ratio - complex(0.0, 1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(reconstruct_from_schmidt({1, 0}, 1.0, 0.0) - lg_amplitude({1, 0}, 1.0, 0.0)),
              0.0, 1e-15);
}

TEST(Schmidt, EvenPolynomialHasNoOddTerms) {
  // (1-t)^2 (1+t)^2 = 1 - 2t^2 + t^4
  const auto terms = schmidt_coefficients({2, 2});
  ASSERT_EQ(terms.size(), 5u);
  double total = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    total += std::norm(terms[k].coefficient);
    if (k % 2 == 1) EXPECT_LE(std::norm(terms[k].coefficient), 1e-20);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Schmidt, Unitarity) {
  for (const ModeIndex mode : modes_up_to(20)) {
    double total = 0.0;
    for (const auto& term : schmidt_coefficients(mode)) total += std::norm(term.coefficient);
    ASSERT_NEAR(total, 1.0, 1e-10) << mode.n << "," << mode.m;
  }
}

TEST(Schmidt, ReconstructionOnGrid) {
  for (const ModeIndex mode : modes_up_to(10)) {
    const auto terms = schmidt_coefficients(mode);
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j) {
        const double x = -4.0 + 0.4 * i;
        const double y = -4.0 + 0.4 * j;
        worst = std::max(worst, std::abs(reconstruct_from_schmidt(terms, x, y) -
                                         lg_amplitude(mode, x, y)));
      }
    ASSERT_LE(worst, 1e-10) << mode.n << "," << mode.m;
  }
  EXPECT_NEAR(std::abs(reconstruct_from_schmidt({3, 1}, 0.4, -0.9) - lg_amplitude({3, 1}, 0.4, -0.9)),
              0.0, 1e-10);
}

TEST(ScaledCoordinates, Definition) {
  const ScaleParams scale{2.5, 0.3};
  const auto a = physical_to_scaled({scale.w / std::numbers::sqrt2, 0.0}, scale);
  EXPECT_NEAR(a.q, 1.0, 1e-15);
  EXPECT_EQ(a.p, 0.0);
  const auto b = physical_to_scaled({0.0, std::numbers::sqrt2 * scale.lambdabar / scale.w}, scale);
  EXPECT_EQ(b.q, 0.0);
  EXPECT_NEAR(b.p, 1.0, 1e-15);
}

TEST(ScaledCoordinates, RoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::uniform_real_distribution<double> s(0.01, 10.0);
  for (int k = 0; k < 1000; ++k) {
    const ScaleParams scale{s(rng), s(rng)};
    const PhasePlanePoint phys{u(rng), u(rng)};
    const PhasePlanePoint back = scaled_to_physical(physical_to_scaled(phys, scale), scale);
    ASSERT_NEAR(back.q, phys.q, 1e-14 * std::abs(phys.q));
    ASSERT_NEAR(back.p, phys.p, 1e-14 * std::abs(phys.p));
  }
}

TEST(ScaledCoordinates, RejectsNonPositiveScale) {
  EXPECT_THROW(physical_to_scaled({1.0, 1.0}, {0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(physical_to_scaled({1.0, 1.0}, {1.0, -1.0}), std::invalid_argument);
  EXPECT_THROW(scaled_to_physical({1.0, 1.0}, {std::nan(""), 1.0}), std::invalid_argument);
}
