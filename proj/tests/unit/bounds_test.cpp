#include "adabet/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "graphs.hpp"

namespace adabet {
namespace {

// Reference values from an independent evaluation of the closed forms.
constexpr double kF_b01_d001_w1000 = 0.02743332296938674;
constexpr double kG_b01_d001_w1000 = 0.03710369609626899;

TEST(VertexDiameter, PathOfFive) {
  const Graph g = testing::path_graph(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng = make_rng(seed, Stream::vertex_diameter);
    const auto vd = estimate_vertex_diameter(g, 1, rng);
    EXPECT_GE(vd, 5u);
    EXPECT_LE(vd, 9u);
  }
  Rng rng = make_rng(0, Stream::vertex_diameter);
  EXPECT_GE(estimate_vertex_diameter(g, kDefaultVdSamples, rng), 5u);
}

TEST(VertexDiameter, CompleteGraph) {
  Rng rng = make_rng(1, Stream::vertex_diameter);
  EXPECT_EQ(estimate_vertex_diameter(testing::complete_graph(4), 20, rng), 3u);
}

TEST(VertexDiameter, SingleEdge) {
  Rng rng = make_rng(2, Stream::vertex_diameter);
  EXPECT_EQ(estimate_vertex_diameter(testing::path_graph(2), 20, rng), 3u);
}

TEST(VertexDiameter, DirectedAddsBothDirections) {
  // Directed path 0 -> 1 -> 2 -> 3: the true vertex diameter is 4.
  const Graph g = testing::path_graph(4, true);
  Rng rng = make_rng(3, Stream::vertex_diameter);
  const auto vd = estimate_vertex_diameter(g, 50, rng);
  EXPECT_GE(vd, 4u);
  EXPECT_LE(vd, 7u);
}

TEST(VertexDiameter, RejectsZeroSamples) {
  Rng rng = make_rng(4, Stream::vertex_diameter);
  EXPECT_THROW(estimate_vertex_diameter(testing::path_graph(3), 0, rng), std::invalid_argument);
}

TEST(Omega, ReferenceValues) {
  EXPECT_EQ(compute_omega(0.05, 0.1, 0.5, 10), 1400u);
  EXPECT_EQ(compute_omega(0.1, 0.5, 0.5, 3), 120u);
}

TEST(Omega, SmallDiameterClampsLogTerm) {
  EXPECT_EQ(compute_omega(0.1, 0.5, 0.5, 2), compute_omega(0.1, 0.5, 0.5, 3));
  // vd = 4: floor(log2 2) = 1.
  EXPECT_EQ(compute_omega(0.1, 0.5, 0.5, 4),
            static_cast<std::uint64_t>(std::ceil(50.0 * (2.0 + std::log(4.0)))));
}

TEST(Omega, QuadraticInInverseLambda) {
  for (const std::size_t vd : {3u, 10u, 1000u}) {
    const double before = 0.5 / (0.02 * 0.02) * (std::floor(std::log2(std::max<double>(vd - 2.0, 1.0))) + 1 +
                                                   std::log(2 / 0.1));
    const double after = 0.5 / (0.01 * 0.01) * (std::floor(std::log2(std::max<double>(vd - 2.0, 1.0))) + 1 +
                                                  std::log(2 / 0.1));
    EXPECT_DOUBLE_EQ(after / before, 4.0);
    EXPECT_EQ(compute_omega(0.02, 0.1, 0.5, vd), static_cast<std::uint64_t>(std::ceil(before)));
    EXPECT_EQ(compute_omega(0.01, 0.1, 0.5, vd), static_cast<std::uint64_t>(std::ceil(after)));
  }
}

TEST(Omega, ParameterErrors) {
  EXPECT_THROW(compute_omega(0.0, 0.1, 0.5, 10), std::invalid_argument);
  EXPECT_THROW(compute_omega(-0.1, 0.1, 0.5, 10), std::invalid_argument);
  EXPECT_THROW(compute_omega(0.1, 0.0, 0.5, 10), std::invalid_argument);
  EXPECT_THROW(compute_omega(0.1, 1.0, 0.5, 10), std::invalid_argument);
  EXPECT_THROW(compute_omega(0.1, 0.1, 0.0, 10), std::invalid_argument);
  const auto params = make_error_params(0.05, 0.1, 0.5, 10);
  EXPECT_EQ(params.omega, 1400u);
  EXPECT_EQ(params.vd, 10u);
}

TEST(HalfWidths, ZeroEstimate) {
  for (const double tau : {1.0, 10.0, 500.0, 1000.0}) {
    EXPECT_EQ(f_lower(0.0, 0.01, 1000.0, tau), 0.0);
  }
  const double L = std::log(1.0 / 0.01);
  EXPECT_NEAR(g_upper(0.0, 0.01, 1000.0, 1000.0), L / 1000.0 * 8.0 / 3.0, 1e-15);
}

TEST(HalfWidths, ReferenceValues) {
  EXPECT_NEAR(f_lower(0.1, 0.01, 1000.0, 1000.0), kF_b01_d001_w1000, 1e-14);
  EXPECT_NEAR(g_upper(0.1, 0.01, 1000.0, 1000.0), kG_b01_d001_w1000, 1e-14);
}

TEST(HalfWidths, DegenerateBudgets) {
  EXPECT_EQ(f_lower(0.3, 0.0, 100.0, 50.0), std::numeric_limits<double>::infinity());
  EXPECT_EQ(g_upper(0.3, 0.0, 100.0, 50.0), std::numeric_limits<double>::infinity());
  EXPECT_EQ(g_upper(0.3, 1.0, 100.0, 50.0), 0.0);
  double prev = g_upper(0.3, 0.5, 100.0, 50.0);
  for (const double gap : {1e-2, 1e-4, 1e-8, 1e-12}) {
    const double g = g_upper(0.3, 1.0 - gap, 100.0, 50.0);
    EXPECT_LT(g, prev);
    prev = g;
  }
  EXPECT_LT(prev, 1e-6);
}

TEST(HalfWidths, TauOutOfRange) {
  EXPECT_THROW(f_lower(0.1, 0.1, 100.0, 0.0), std::invalid_argument);
  EXPECT_THROW(f_lower(0.1, 0.1, 100.0, 101.0), std::invalid_argument);
  EXPECT_THROW(g_upper(0.1, 0.1, 100.0, 0.0), std::invalid_argument);
  EXPECT_THROW(g_upper(0.1, 0.1, 100.0, 101.0), std::invalid_argument);
}

// (tau h)^2 = 2 L (omega b + tau h / 3) with b = btilde - f for the lower
// side and b = btilde + g for the upper side. The error is measured
// relative to the largest term.
double residual(double h, double b, double L, double omega, double tau) {
  const double lhs = (tau * h) * (tau * h);
  const double t1 = 2.0 * L * omega * b;
  const double t2 = 2.0 * L * tau * h / 3.0;
  const double scale = std::max({lhs, std::abs(t1), t2, std::numeric_limits<double>::min()});
  return std::abs(lhs - t1 - t2) / scale;
}

TEST(HalfWidths, QuadraticResidualsOnGrid) {
  std::size_t points = 0;
  std::size_t lower_checked = 0;
  double worst = 0.0;
  for (int bi = 0; bi < 20; ++bi) {
    const double btilde = bi == 0 ? 1e-6 : bi / 19.0;
    for (const double delta : {1e-12, 1e-8, 1e-5, 1e-3, 0.01, 0.05, 0.1, 0.3, 0.6, 0.9}) {
      const double L = std::log(1.0 / delta);
      for (const double omega : {10.0, 137.0, 1e3, 1e5, 1e7}) {
        for (int ti = 1; ti <= 10; ++ti) {
          const double tau = std::max(1.0, std::round(omega * ti / 10.0));
          ++points;
          const double g = g_upper(btilde, delta, omega, tau);
          worst = std::max(worst, residual(g, btilde + g, L, omega, tau));
          const double f = f_lower(btilde, delta, omega, tau);
          EXPECT_GE(f, 0.0);
          EXPECT_GE(g, f);
          if (btilde - f >= 0.0) {
            ++lower_checked;
            worst = std::max(worst, residual(f, btilde - f, L, omega, tau));
          }
        }
      }
    }
  }
  EXPECT_EQ(points, 10000u);
  EXPECT_GT(lower_checked, 8000u);
  EXPECT_LE(worst, 1e-9);
}

TEST(HalfWidths, MonotoneInEstimateAndConfidence) {
  const double omega = 5000.0;
  for (const double tau : {50.0, 700.0, 5000.0}) {
    double prev_f = -1.0;
    double prev_g = -1.0;
    for (int i = 0; i <= 100; ++i) {
      const double b = i / 100.0;
      const double f = f_lower(b, 0.01, omega, tau);
      const double g = g_upper(b, 0.01, omega, tau);
      EXPECT_GE(f, prev_f);
      EXPECT_GE(g, prev_g);
      prev_f = f;
      prev_g = g;
    }
    prev_f = -1.0;
    prev_g = -1.0;
    for (const double delta : {0.9, 0.5, 0.1, 1e-2, 1e-4, 1e-8}) {
      const double f = f_lower(0.2, delta, omega, tau);
      const double g = g_upper(0.2, delta, omega, tau);
      EXPECT_GE(f, prev_f);
      EXPECT_GE(g, prev_g);
      prev_f = f;
      prev_g = g;
    }
  }
}

// g always shrinks with tau. f does too while the lower bound is informative
// (f < btilde); past that point btilde - f is negative and f may creep up.
TEST(HalfWidths, ShrinkAsSamplesAccumulate) {
  const double omega = 20000.0;
  for (const double b : {0.001, 0.05, 0.4}) {
    double prev_f = std::numeric_limits<double>::infinity();
    double prev_g = std::numeric_limits<double>::infinity();
    for (double tau = 10.0; tau <= omega; tau += 10.0) {
      const double f = f_lower(b, 0.001, omega, tau);
      const double g = g_upper(b, 0.001, omega, tau);
      if (f < b) EXPECT_LE(f, prev_f * (1 + 1e-12)) << "tau=" << tau;
      EXPECT_LE(g, prev_g * (1 + 1e-12)) << "tau=" << tau;
      prev_f = f;
      prev_g = g;
    }
  }
}

}  // namespace
}  // namespace adabet
