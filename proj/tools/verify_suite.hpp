// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

// Checks run by `qstat verify`. Each row is a named deviation that must stay
// at or below 1e-12.

#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qstat/qstat.hpp"

namespace qstat::cli {

inline constexpr double kVerifyTolerance = 1e-12;
inline constexpr std::uint64_t kVerifySeed = 20260101;

struct VerifyRow {
  std::string suite;
  std::string check;
  double deviation = 0;
};

inline void append_algebra(std::vector<VerifyRow>& rows, const AlgebraReport& r) {
  std::string suite = "algebra " + r.statistics.name() + " M=" + std::to_string(r.modes);
  if (!r.statistics.is_fermion()) suite += " nmax=" + std::to_string(r.n_max);
  for (const auto& c : r.checks) rows.push_back({suite, c.name, c.deviation});
}

inline NBodyVector random_nbody(std::size_t d, std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  NBodyVector v(d, n);
  for (auto& c : v.amplitudes()) c = Complex(g(rng), g(rng));
  return v;
}

/// Projector identities on random vectors for d, n <= 3.
inline void append_projector_suite(std::vector<VerifyRow>& rows, int samples = 10) {
  std::mt19937_64 rng(kVerifySeed);
  double idem_s = 0, idem_a = 0, cross = 0, herm = 0;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int k = 0; k < samples; ++k) {
        const NBodyVector u = random_nbody(d, n, rng);
        const NBodyVector v = random_nbody(d, n, rng);
        const NBodyVector sv = symmetrize(v);
        const NBodyVector av = antisymmetrize(v);
        idem_s = std::max(idem_s, max_abs_diff(symmetrize(sv), sv));
        idem_a = std::max(idem_a, max_abs_diff(antisymmetrize(av), av));
        const NBodyVector zero(d, n);
        if (n > 1) {
          cross = std::max(cross, max_abs_diff(symmetrize(av), zero));
          cross = std::max(cross, max_abs_diff(antisymmetrize(sv), zero));
        }
        herm = std::max(herm, std::abs(inner(u, sv) - inner(symmetrize(u), v)));
        herm = std::max(herm, std::abs(inner(u, av) - inner(antisymmetrize(u), v)));
      }
    }
  }
  rows.push_back({"projectors d,n<=3", "S^2 - S", idem_s});
  rows.push_back({"projectors d,n<=3", "A^2 - A", idem_a});
  rows.push_back({"projectors d,n<=3", "SA, AS", cross});
  rows.push_back({"projectors d,n<=3", "<u|Pv> - <Pu|v>", herm});
}

/// Round trip through first quantization and inner-product preservation.
inline void append_bridge_suite(std::vector<VerifyRow>& rows) {
  std::mt19937_64 rng(kVerifySeed + 1);
  std::normal_distribution<double> g;
  double round_trip = 0, inner_gap = 0;
  for (Statistics stats : {Statistics::fermion(), Statistics::boson()}) {
    const std::size_t modes = 3;
    const unsigned n = 2;
    const FockContext ctx(modes, stats, n);
    auto random_state = [&] {
      FockVector v(ctx);
      for (const auto& occ : fock_basis(ctx))
        if (occ.total() == n) v.add(occ, Complex(g(rng), g(rng)));
      return v;
    };
    const FockVector u = random_state();
    const FockVector v = random_state();
    const NBodyVector u1 = to_first_quantization(u);
    const NBodyVector v1 = to_first_quantization(v);
    inner_gap = std::max(inner_gap, std::abs(inner(u1, v1) - inner(u, v)));
    const FockVector back = from_first_quantization(v1, stats, n);
    for (const auto& [occ, a] : v.terms()) round_trip = std::max(round_trip, std::abs(back.amplitude(occ) - a));
  }
  rows.push_back({"bridge M=3 N=2", "round trip", round_trip});
  rows.push_back({"bridge M=3 N=2", "<u|v> preserved", inner_gap});
}

inline void append_thermal_suite(std::vector<VerifyRow>& rows) {
  std::mt19937_64 rng(kVerifySeed + 2);
  std::uniform_real_distribution<double> e(-20, 20), t(0.05, 10);
  double ph = 0;
  for (int k = 0; k < 1000; ++k) {
    const double E = e(rng), mu = e(rng), T = t(rng);
    ph = std::max(ph, std::abs(fermi_dirac(E, mu, T) + fermi_dirac(2 * mu - E, mu, T) - 1.0));
  }
  rows.push_back({"thermal", "FD(E)+FD(2mu-E)-1", ph});
  rows.push_back({"thermal", "FD(E=mu)-1/2", std::abs(fermi_dirac(1.0, 1.0, 1.0) - 0.5)});
  rows.push_back({"thermal", "BE(x=ln2)-1", std::abs(bose_einstein(std::log(2.0), 0.0, 1.0) - 1.0)});
}

inline void append_beamsplitter_suite(std::vector<VerifyRow>& rows) {
  double closed = 0, conv = 0, sum = 0;
  for (int k = 0; k <= 10; ++k) {
    const double s = k / 10.0;
    const auto [l, r] = states_with_overlap(s);
    for (Statistics stats : {Statistics::boson(), Statistics::fermion(), Statistics::distinguishable()}) {
      const auto fock = output_distribution(l, r, stats);
      const auto alt = output_distribution(l, r, stats, SplitterConvention::Alternate);
      const auto cf = closed_form_distribution(s, stats);
      closed = std::max({closed, std::abs(fock.p_coincidence - cf.p_coincidence),
                         std::abs(fock.p_both_left - cf.p_both_left), std::abs(fock.p_both_right - cf.p_both_right)});
      conv = std::max({conv, std::abs(fock.p_coincidence - alt.p_coincidence),
                       std::abs(fock.p_both_left - alt.p_both_left)});
    }
    sum = std::max(sum, std::abs(output_distribution(l, r, Statistics::boson()).p_coincidence +
                                 output_distribution(l, r, Statistics::fermion()).p_coincidence - 1.0));
  }
  rows.push_back({"beamsplitter", "Fock vs closed form", closed});
  rows.push_back({"beamsplitter", "splitter convention", conv});
  rows.push_back({"beamsplitter", "boson+fermion coincidence-1", sum});
}

}  // namespace qstat::cli
