// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file thermal.hpp
 * @brief Mean occupancies of ideal quantum gases and the chemical-potential solver.
 *
 * Energies, mu and k_B*T share one caller-chosen unit system; k_B defaults to 1.
 * Fermi-Dirac and Bose-Einstein share one kernel 1/(e^x + sign), sign = +1 / -1,
 * and sign = 0 selects the Maxwell-Boltzmann law e^{-x}.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qstat/errors.hpp"
#include "qstat/statistics_kind.hpp"

namespace qstat {

/// Boltzmann's constant in J/K.
inline constexpr double kBoltzmannSI = 1.380649e-23;
inline constexpr double kBoltzmannNatural = 1.0;

/// Above this reduced energy e^x would overflow; all three laws use e^{-x}.
inline constexpr double kAsymptoticThreshold = 700.0;
inline constexpr int kMaxBisectionIterations = 200;

namespace detail {

inline double occupancy_kernel(double x, int sign) {
  if (sign == 0 || x > kAsymptoticThreshold) return std::exp(-x);
  if (sign > 0) return 1.0 / (std::exp(x) + 1.0);
  return 1.0 / std::expm1(x);
}

inline int kernel_sign(const Statistics& s) {
  switch (s.kind()) {
    case Statistics::Kind::Fermion: return +1;
    case Statistics::Kind::Boson: return -1;
    case Statistics::Kind::Distinguishable: return 0;
    case Statistics::Kind::Quon: break;
  }
  throw UnsupportedError("no thermal occupancy law for quons");
}

inline void require_positive_temperature(double T, double k_B) {
  if (!(T > 0) || !(k_B > 0) || !std::isfinite(T * k_B)) {
    throw DomainError("temperature and k_B must be positive and finite");
  }
}

}  // namespace detail

/// Occupancy as a function of the reduced energy x = (E - mu) / k_B T.
inline double reduced_occupancy(const Statistics& statistics, double x) {
  const int sign = detail::kernel_sign(statistics);
  if (sign < 0 && !(x > 0)) {
    throw DomainError("Bose-Einstein occupancy requires mu < E");
  }
  return detail::occupancy_kernel(x, sign);
}

inline double mean_occupancy(const Statistics& statistics, double E, double mu, double T, double k_B = 1.0) {
  detail::require_positive_temperature(T, k_B);
  return reduced_occupancy(statistics, (E - mu) / (k_B * T));
}

inline double fermi_dirac(double E, double mu, double T, double k_B = 1.0) {
  return mean_occupancy(Statistics::fermion(), E, mu, T, k_B);
}
inline double bose_einstein(double E, double mu, double T, double k_B = 1.0) {
  return mean_occupancy(Statistics::boson(), E, mu, T, k_B);
}
inline double maxwell_boltzmann(double E, double mu, double T, double k_B = 1.0) {
  return mean_occupancy(Statistics::distinguishable(), E, mu, T, k_B);
}

struct EnergyLevel {
  double energy = 0;
  unsigned degeneracy = 1;
};

/// Energy levels (ascending, g >= 1) at temperature T.
class ThermalSystem {
 public:
  ThermalSystem(std::vector<EnergyLevel> levels, Statistics statistics, double T, double k_B = kBoltzmannNatural)
      : levels_(std::move(levels)), statistics_(statistics), T_(T), k_B_(k_B) {
    if (levels_.empty()) throw DomainError("thermal system needs at least one level");
    detail::require_positive_temperature(T, k_B);
    detail::kernel_sign(statistics);
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      if (levels_[l].degeneracy == 0) throw DomainError("level degeneracy must be at least 1");
      if (!std::isfinite(levels_[l].energy)) throw DomainError("level energy must be finite");
      if (l > 0 && levels_[l].energy < levels_[l - 1].energy) {
        throw DomainError("levels must be sorted by ascending energy");
      }
    }
  }

  const std::vector<EnergyLevel>& levels() const noexcept { return levels_; }
  const Statistics& statistics() const noexcept { return statistics_; }
  double temperature() const noexcept { return T_; }
  double k_B() const noexcept { return k_B_; }
  double thermal_energy() const noexcept { return k_B_ * T_; }
  double ground_energy() const noexcept { return levels_.front().energy; }

  double total_degeneracy() const {
    double g = 0;
    for (const auto& l : levels_) g += l.degeneracy;
    return g;
  }

  ThermalSystem at_temperature(double T) const { return ThermalSystem(levels_, statistics_, T, k_B_); }

 private:
  std::vector<EnergyLevel> levels_;
  Statistics statistics_;
  double T_;
  double k_B_;
};

/// sum_l g_l <n_l>(mu).
inline double total_occupancy(const ThermalSystem& sys, double mu) {
  double total = 0;
  for (const auto& l : sys.levels()) {
    total += l.degeneracy * mean_occupancy(sys.statistics(), l.energy, mu, sys.temperature(), sys.k_B());
  }
  return total;
}

struct ChemicalPotential {
  double mu = 0;
  /// sum_l g_l <n_l> - N at the returned mu.
  double residual = 0;
  int iterations = 0;
  /// E_0 - mu, evaluated without cancellation for bosons.
  double ground_gap = 0;
};

namespace detail {

/// Bose total with mu = E_0 - e^s; gaps measured from E_0 to avoid cancellation.
inline double bose_total_shifted(const ThermalSystem& sys, double s) {
  const double shift = std::exp(s);
  const double kT = sys.thermal_energy();
  const double e0 = sys.ground_energy();
  double total = 0;
  for (const auto& l : sys.levels()) {
    total += l.degeneracy * occupancy_kernel(((l.energy - e0) + shift) / kT, -1);
  }
  return total;
}

}  // namespace detail

/**
 * Chemical potential fixing sum_l g_l <n_l> = N by bisection.
 *
 * Fermions bracket mu in [E_0 - 50 kT, E_max + 50 kT]; bosons solve for s
 * with mu = E_0 - e^s so that mu < E_0 throughout. Distinguishable particles
 * use the closed form mu = -kT log(sum_l g_l e^{-E_l/kT} / N).
 */
inline ChemicalPotential solve_mu(const ThermalSystem& sys, double n_total) {
  const double kT = sys.thermal_energy();
  const double tol = 1e-9 * std::max(1.0, n_total);
  if (!(n_total > 0) || !std::isfinite(n_total)) throw DomainError("particle number must be positive");

  ChemicalPotential out;
  switch (sys.statistics().kind()) {
    case Statistics::Kind::Fermion: {
      if (!(n_total < sys.total_degeneracy())) {
        throw DomainError("fermion number must be below the total degeneracy " +
                          std::to_string(sys.total_degeneracy()));
      }
      const double lo0 = sys.ground_energy() - 50 * kT;
      const double hi0 = sys.levels().back().energy + 50 * kT;
      if (total_occupancy(sys, lo0) > n_total || total_occupancy(sys, hi0) < n_total) {
        throw ConvergenceError("chemical potential bracket does not enclose the root");
      }
      // At low T the total can be flat to machine precision over a gap; locate
      // both edges of the level set {total == N} and return its midpoint.
      auto edge = [&](bool include_equal) {
        double lo = lo0;
        double hi = hi0;
        for (int it = 0; it < kMaxBisectionIterations; ++it, ++out.iterations) {
          const double mid = 0.5 * (lo + hi);
          if (mid <= lo || mid >= hi) break;
          const double t = total_occupancy(sys, mid);
          ((include_equal ? t <= n_total : t < n_total) ? lo : hi) = mid;
        }
        return include_equal ? lo : hi;
      };
      const double first = edge(false);
      const double last = edge(true);
      out.mu = first <= last ? 0.5 * (first + last) : first;
      out.residual = total_occupancy(sys, out.mu) - n_total;
      out.ground_gap = sys.ground_energy() - out.mu;
      break;
    }
    case Statistics::Kind::Boson: {
      // Total decreases in s. Ground level alone exceeds N at s_lo; everything
      // is bounded by G / expm1(e^s / kT) <= N at s_hi.
      const double g0 = sys.levels().front().degeneracy;
      const double G = sys.total_degeneracy();
      double lo = std::log(kT * std::log1p(g0 / n_total)) - 1.0;
      double hi = std::log(kT * std::log1p(G / n_total)) + 1.0;
      if (detail::bose_total_shifted(sys, lo) < n_total || detail::bose_total_shifted(sys, hi) > n_total) {
        throw ConvergenceError("chemical potential bracket does not enclose the root");
      }
      for (; out.iterations < kMaxBisectionIterations; ++out.iterations) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (detail::bose_total_shifted(sys, mid) > n_total ? lo : hi) = mid;
      }
      const double r_lo = detail::bose_total_shifted(sys, lo) - n_total;
      const double r_hi = detail::bose_total_shifted(sys, hi) - n_total;
      const double s = std::abs(r_lo) <= std::abs(r_hi) ? lo : hi;
      out.residual = std::abs(r_lo) <= std::abs(r_hi) ? r_lo : r_hi;
      out.ground_gap = std::exp(s);
      out.mu = sys.ground_energy() - out.ground_gap;
      if (out.mu >= sys.ground_energy()) {
        out.mu = std::nextafter(sys.ground_energy(), -std::numeric_limits<double>::infinity());
      }
      break;
    }
    case Statistics::Kind::Distinguishable: {
      const double e0 = sys.ground_energy();
      double z = 0;
      for (const auto& l : sys.levels()) z += l.degeneracy * std::exp(-(l.energy - e0) / kT);
      out.mu = e0 - kT * std::log(z / n_total);
      out.residual = total_occupancy(sys, out.mu) - n_total;
      out.ground_gap = e0 - out.mu;
      return out;
    }
    case Statistics::Kind::Quon:
      throw UnsupportedError("no thermal occupancy law for quons");
  }
  if (!(std::abs(out.residual) <= tol)) {
    throw ConvergenceError("chemical potential residual " + std::to_string(out.residual) + " above tolerance after " +
                           std::to_string(out.iterations) + " iterations");
  }
  return out;
}

/// (E_l, <n_l>) per level, occupancy per single-particle state.
inline std::vector<std::pair<double, double>> occupancy_curve(const ThermalSystem& sys, double mu) {
  std::vector<std::pair<double, double>> out;
  out.reserve(sys.levels().size());
  for (const auto& l : sys.levels()) {
    out.emplace_back(l.energy, mean_occupancy(sys.statistics(), l.energy, mu, sys.temperature(), sys.k_B()));
  }
  return out;
}

struct ClassicalLimit {
  double fd = 0;
  double be = 0;
  double mb = 0;
  /// |fd - mb| / mb
  double rel_gap_fd = 0;
  /// |be - mb| / mb
  double rel_gap_be = 0;
};

/// Quantum laws against Maxwell-Boltzmann for (E - mu)/kT >= 1.
inline ClassicalLimit classical_limit_gap(double E, double mu, double T, double k_B = 1.0) {
  detail::require_positive_temperature(T, k_B);
  const double x = (E - mu) / (k_B * T);
  if (!(x >= 1.0)) throw DomainError("classical-limit comparison requires (E - mu)/kT >= 1");
  ClassicalLimit out;
  out.fd = detail::occupancy_kernel(x, +1);
  out.be = detail::occupancy_kernel(x, -1);
  out.mb = detail::occupancy_kernel(x, 0);
  out.rel_gap_fd = std::abs(out.fd - out.mb) / out.mb;
  out.rel_gap_be = std::abs(out.be - out.mb) / out.mb;
  return out;
}

/// Share of N in the ground level, g_0 <n_0> / N, of a Bose system at temperature T.
inline double condensate_fraction(const ThermalSystem& sys, double n_total, double T) {
  if (!sys.statistics().is_boson()) throw DomainError("condensate fraction needs Bose statistics");
  const ThermalSystem at_t = sys.at_temperature(T);
  const ChemicalPotential mu = solve_mu(at_t, n_total);
  const double n0 =
      at_t.levels().front().degeneracy * detail::occupancy_kernel(mu.ground_gap / at_t.thermal_energy(), -1);
  return std::clamp(n0 / n_total, 0.0, 1.0);
}

}  // namespace qstat
