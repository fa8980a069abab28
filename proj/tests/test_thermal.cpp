// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "qstat/thermal.hpp"

namespace qstat {
namespace {

std::vector<EnergyLevel> ladder(int count, double gap = 1.0, unsigned g = 1) {
  std::vector<EnergyLevel> out;
  for (int k = 0; k < count; ++k) out.push_back({k * gap, g});
  return out;
}

TEST(MeanOccupancy, Examples) {
  EXPECT_EQ(fermi_dirac(1.3, 1.3, 0.7), 0.5);
  EXPECT_NEAR(bose_einstein(std::log(2.0), 0.0, 1.0), 1.0, 1e-12);
  // 1/(e^10 + 1), evaluated independently at 40 digits.
  EXPECT_NEAR(fermi_dirac(10.0, 0.0, 1.0), 4.539786870243439e-05, 1e-18);
  EXPECT_NEAR(maxwell_boltzmann(3.0, 1.0, 2.0), std::exp(-1.0), 1e-15);
}

TEST(MeanOccupancy, DomainErrors) {
  EXPECT_THROW(bose_einstein(1.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(bose_einstein(1.0, 2.0, 1.0), DomainError);
  EXPECT_THROW(fermi_dirac(1.0, 0.0, 0.0), DomainError);
  EXPECT_THROW(fermi_dirac(1.0, 0.0, -1.0), DomainError);
  EXPECT_THROW(mean_occupancy(Statistics::quon(0.1), 1, 0, 1), UnsupportedError);
}

TEST(MeanOccupancy, OverflowSafe) {
  EXPECT_EQ(fermi_dirac(1e6, 0.0, 1.0), 0.0);
  EXPECT_EQ(bose_einstein(800.0, 0.0, 1.0), std::exp(-800.0));
  EXPECT_EQ(fermi_dirac(-1e6, 0.0, 1.0), 1.0);
}

TEST(MeanOccupancy, SharedKernelDiffersOnlyInSign) {
  for (double x : {0.1, 0.5, 1.0, 3.0, 12.0}) {
    EXPECT_NEAR(1.0 / fermi_dirac(x, 0, 1) - 1.0 / bose_einstein(x, 0, 1), 2.0, 1e-9 * std::exp(x));
  }
}

TEST(MeanOccupancy, ParticleHoleSymmetryAndBound) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> e(-50, 50), t(0.01, 20);
  for (int k = 0; k < 10000; ++k) {
    const double E = e(rng), mu = e(rng), T = t(rng);
    const double f = fermi_dirac(E, mu, T);
    EXPECT_LE(f, 1.0);
    EXPECT_GE(f, 0.0);
    EXPECT_NEAR(f + fermi_dirac(2 * mu - E, mu, T), 1.0, 1e-14);
  }
}

TEST(ThermalSystem, Validation) {
  EXPECT_THROW(ThermalSystem({}, Statistics::fermion(), 1.0), DomainError);
  EXPECT_THROW(ThermalSystem({{1, 1}, {0, 1}}, Statistics::fermion(), 1.0), DomainError);
  EXPECT_THROW(ThermalSystem({{0, 0}}, Statistics::fermion(), 1.0), DomainError);
  EXPECT_THROW(ThermalSystem(ladder(2), Statistics::fermion(), 0.0), DomainError);
}

TEST(SolveMu, SymmetricFermionPair) {
  for (double T : {0.01, 0.3, 1.0, 7.0}) {
    const ThermalSystem sys(ladder(2), Statistics::fermion(), T);
    EXPECT_NEAR(solve_mu(sys, 1.0).mu, 0.5, 1e-9) << "T=" << T;
  }
}

TEST(SolveMu, FermiStepAtLowTemperature) {
  const ThermalSystem sys(ladder(6), Statistics::fermion(), 1e-4);
  const ChemicalPotential mu = solve_mu(sys, 3.0);
  EXPECT_LE(std::abs(mu.residual), 3e-9);
  const auto curve = occupancy_curve(sys, mu.mu);
  const double step[] = {1, 1, 1, 0, 0, 0};
  for (std::size_t l = 0; l < 6; ++l) EXPECT_NEAR(curve[l].second, step[l], 1e-3);
}

TEST(SolveMu, BoseThreeLevels) {
  const ThermalSystem sys(ladder(3), Statistics::boson(), 0.5);
  const ChemicalPotential mu = solve_mu(sys, 1.0);
  EXPECT_LE(std::abs(total_occupancy(sys, mu.mu) - 1.0), 1e-9);
  EXPECT_LT(mu.mu, 0.0);
  // Root of sum 1/(e^{(E-mu)/0.5} - 1) = 1 found independently at 30 digits.
  EXPECT_NEAR(mu.mu, -0.367367160564092, 1e-9);
}

TEST(SolveMu, DistinguishableClosedForm) {
  const ThermalSystem sys(ladder(10), Statistics::distinguishable(), 2.0);
  const ChemicalPotential mu = solve_mu(sys, 5.0);
  EXPECT_NEAR(mu.mu, 1.3668930646328008, 1e-12);
  EXPECT_LE(std::abs(mu.residual), 1e-9);
}

TEST(SolveMu, RangeErrors) {
  const ThermalSystem f(ladder(3), Statistics::fermion(), 1.0);
  EXPECT_THROW(solve_mu(f, 3.0), DomainError);
  EXPECT_THROW(solve_mu(f, 0.0), DomainError);
  EXPECT_THROW(solve_mu(ThermalSystem(ladder(3), Statistics::boson(), 1.0), -1.0), DomainError);
}

TEST(SolveMu, FixtureResidualsAndBoseBound) {
  struct Case {
    std::vector<EnergyLevel> levels;
    Statistics stats;
    double T;
    double N;
  };
  const std::vector<Case> cases{
      {ladder(6), Statistics::fermion(), 0.5, 2.5},
      {ladder(8, 0.3, 2), Statistics::fermion(), 3.0, 9.0},
      {{{-2, 1}, {0, 3}, {5, 5}}, Statistics::fermion(), 0.02, 1.0},
      {ladder(10), Statistics::boson(), 0.2, 50.0},
      {ladder(10), Statistics::boson(), 10.0, 3.0},
      {{{1.5, 2}, {2.0, 1}, {4.0, 6}}, Statistics::boson(), 1.0, 1e4},
      {{{100, 1}, {101, 1}}, Statistics::boson(), 1e-3, 7.0},
  };
  for (const auto& c : cases) {
    const ThermalSystem sys(c.levels, c.stats, c.T);
    const ChemicalPotential mu = solve_mu(sys, c.N);
    EXPECT_LE(std::abs(total_occupancy(sys, mu.mu) - c.N), 1e-9 * std::max(1.0, c.N));
    double curve_sum = 0;
    const auto curve = occupancy_curve(sys, mu.mu);
    for (std::size_t l = 0; l < curve.size(); ++l) curve_sum += c.levels[l].degeneracy * curve[l].second;
    EXPECT_LE(std::abs(curve_sum - c.N), 1e-9 * std::max(1.0, c.N));
    if (c.stats.is_boson()) {
      EXPECT_LT(mu.mu, sys.ground_energy());
    }
  }
}

TEST(OccupancyCurve, Monotone) {
  const ThermalSystem f(ladder(8), Statistics::fermion(), 1.5);
  const ThermalSystem b(ladder(8), Statistics::boson(), 1.5);
  const auto fc = occupancy_curve(f, solve_mu(f, 3.0).mu);
  const auto bc = occupancy_curve(b, solve_mu(b, 3.0).mu);
  for (std::size_t l = 0; l < fc.size(); ++l) {
    EXPECT_GT(fc[l].second, 0.0);
    EXPECT_LT(fc[l].second, 1.0);
    EXPECT_GT(bc[l].second, 0.0);
    if (l > 0) {
      EXPECT_LT(fc[l].second, fc[l - 1].second);
      EXPECT_LT(bc[l].second, bc[l - 1].second);
    }
  }
  const ThermalSystem mb(ladder(4), Statistics::distinguishable(), 0.8);
  for (const auto& [e, n] : occupancy_curve(mb, 0.3)) EXPECT_DOUBLE_EQ(n, std::exp(-(e - 0.3) / 0.8));
}

TEST(OccupancyCurve, BoseBelowChemicalPotentialFails) {
  const ThermalSystem b(ladder(3), Statistics::boson(), 1.0);
  EXPECT_THROW(occupancy_curve(b, 0.5), DomainError);
}

TEST(ClassicalLimit, GapsBoundedAndShrinking) {
  double prev_fd = 1, prev_be = 1;
  for (double x : {1.0, 2.0, 5.0, 10.0, 20.0}) {
    const ClassicalLimit c = classical_limit_gap(x, 0.0, 1.0);
    EXPECT_LE(c.rel_gap_fd, 2 * std::exp(-x));
    EXPECT_LE(c.rel_gap_be, 2 * std::exp(-x));
    EXPECT_LT(c.rel_gap_fd, prev_fd);
    EXPECT_LT(c.rel_gap_be, prev_be);
    prev_fd = c.rel_gap_fd;
    prev_be = c.rel_gap_be;
  }
  EXPECT_LE(classical_limit_gap(5, 0, 1).rel_gap_be, 0.0135);
  EXPECT_LE(classical_limit_gap(10, 0, 1).rel_gap_fd, 9.1e-5);
  // x = 20: e^{-20}/(1 +- e^{-20}) ~ 2.06e-9.
  EXPECT_NEAR(classical_limit_gap(20, 0, 1).rel_gap_fd, 2.061153618e-9, 1e-16);
  EXPECT_NEAR(classical_limit_gap(20, 0, 1).rel_gap_be, 2.061153627e-9, 1e-16);
  EXPECT_THROW(classical_limit_gap(0.5, 0, 1), DomainError);
}

TEST(Condensate, SaturatesAtLowTemperature) {
  const ThermalSystem sys(ladder(10), Statistics::boson(), 1.0);
  EXPECT_GE(condensate_fraction(sys, 50.0, 1e-3), 0.999);
  EXPECT_THROW(condensate_fraction(ThermalSystem(ladder(3), Statistics::fermion(), 1.0), 1.0, 1.0), DomainError);
}

TEST(Condensate, MonotoneOnGrid) {
  const ThermalSystem sys(ladder(10), Statistics::boson(), 1.0);
  double prev = 2.0;
  for (int k = 0; k < 20; ++k) {
    const double T = 0.05 + 0.5 * k;
    const double f = condensate_fraction(sys, 50.0, T);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
    EXPECT_LE(f, prev);
    prev = f;
  }
}

}  // namespace
}  // namespace qstat
