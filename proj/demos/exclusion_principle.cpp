// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

// Spin singlet from a Slater determinant, and the vanishing determinant of
// two particles in the same state.

#include <cstdio>
#include <vector>

#include "qstat/first_quantization.hpp"

int main() {
  using namespace qstat;
  const auto up = SingleParticleVector::basis(2, 0);
  const auto down = SingleParticleVector::basis(2, 1);

  const std::vector<SingleParticleVector> pair{up, down};
  const NBodyVector singlet = slater(pair, /*normalize=*/true);
  std::printf("singlet amplitudes (uu, ud, du, dd):");
  for (const auto& a : singlet.amplitudes()) std::printf(" %+.6f", a.real());
  std::printf("\nclass: %s\n", to_string(classify(singlet).kind));

  const std::vector<SingleParticleVector> same{up, up};
  std::printf("norm of det(up, up): %.3g\n", slater(same).norm());
  try {
    slater(same, /*normalize=*/true);
  } catch (const ExclusionError& e) {
    std::printf("normalize: %s\n", e.what());
  }
}
