#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "cdlab/equilibrium.hpp"
#include "cdlab/error.hpp"
#include "cdlab/measure.hpp"
#include "oracles.hpp"

using namespace cdlab;

TEST(EquilibriumFor, SupportDeterminesKind) {
  EXPECT_EQ(equilibrium_for(circle_lebesgue(16)).kind, EquilibriumKind::circle_uniform);
  EXPECT_EQ(equilibrium_for(interval_lebesgue(16)).kind, EquilibriumKind::arcsine);
  EXPECT_EQ(equilibrium_for(arcsine(16)).kind, EquilibriumKind::arcsine);
  const auto custom = from_points({Complex(0.1, 0.2), Complex(-0.3, 0.0)}, {0.5, 0.5});
  try {
    equilibrium_for(custom);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_support);
  }
}

TEST(EquilibriumIntegrate, ClosedFormValues) {
  const EquilibriumMeasure circle{EquilibriumKind::circle_uniform};
  const EquilibriumMeasure arc{EquilibriumKind::arcsine};
  EXPECT_NEAR(integrate(circle, [](Complex z) { return z.real() * z.real(); }), 0.5, 1e-14);
  EXPECT_NEAR(integrate(arc, [](Complex z) { return z.real() * z.real(); }), 0.5, 1e-14);
  EXPECT_NEAR(integrate(circle, [](Complex z) { return z.real(); }), 0.0, 1e-14);
  // |cos| has a kink, so the equispaced rule is only accurate to ~1e-5.
  EXPECT_NEAR(integrate(circle, [](Complex z) { return std::abs(z.real()); }), 2.0 / std::numbers::pi, 1e-4);
  EXPECT_NEAR(integrate(arc, [](Complex z) { return std::abs(z.real()); }), 2.0 / std::numbers::pi, 1e-4);
}

TEST(EquilibriumIntegrate, UnitMassForEveryOrder) {
  for (int order : {1, 2, 7, 64, 512, 1000})
    for (auto kind : {EquilibriumKind::circle_uniform, EquilibriumKind::arcsine})
      EXPECT_NEAR(integrate(EquilibriumMeasure{kind, order}, [](Complex) { return 1.0; }), 1.0, 1e-14);
}

TEST(EquilibriumIntegrate, EvenMomentsAreCentralBinomials) {
  for (int j = 0; j <= 8; ++j) {
    const double expected = static_cast<double>(oracle::binomial(2 * j, j) / std::pow(4.0L, j));
    for (auto kind : {EquilibriumKind::circle_uniform, EquilibriumKind::arcsine}) {
      const auto g = [j](Complex z) { return std::pow(z.real(), 2 * j); };
      const double value = integrate(EquilibriumMeasure{kind}, g);
      const double refined = integrate(EquilibriumMeasure{kind, 5120}, g);
      EXPECT_NEAR(value, expected, 1e-10) << "j=" << j;
      EXPECT_NEAR(value, refined, 1e-10) << "j=" << j;
    }
  }
}

TEST(EquilibriumIntegrate, OddMomentsVanish) {
  for (int j = 0; j < 6; ++j)
    EXPECT_NEAR(integrate(EquilibriumMeasure{EquilibriumKind::arcsine},
                          [j](Complex z) { return std::pow(z.real(), 2 * j + 1); }),
                0.0, 1e-14);
}
