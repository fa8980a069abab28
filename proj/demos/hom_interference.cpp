// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

// Coincidence probability at a 50/50 beam splitter as the two internal
// states are rotated from orthogonal to identical.

#include <cstdio>

#include "qstat/beamsplitter.hpp"

int main() {
  using namespace qstat;
  std::printf("%6s %12s %12s %12s\n", "s", "boson", "fermion", "classical");
  for (int k = 0; k <= 10; ++k) {
    const double s = k / 10.0;
    const auto [left, right] = states_with_overlap(s);
    std::printf("%6.2f %12.6f %12.6f %12.6f\n", s,
                output_distribution(left, right, Statistics::boson()).p_coincidence,
                output_distribution(left, right, Statistics::fermion()).p_coincidence,
                output_distribution(left, right, Statistics::distinguishable()).p_coincidence);
  }
}
