// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file beamsplitter.hpp
 * @brief Two-particle interference at a balanced (50/50) beam splitter.
 *
 * One particle enters each input arm (L, R) carrying an internal state of
 * dimension k. The splitter acts on creation operators,
 *
 *     a^dag_{L,a} -> (a^dag_{1,a} + a^dag_{2,a}) / sqrt(2)
 *     a^dag_{R,a} -> (a^dag_{1,a} - a^dag_{2,a}) / sqrt(2)      (standard)
 *     a^dag_{R,a} -> (-a^dag_{1,a} + a^dag_{2,a}) / sqrt(2)     (alternate)
 *
 * and the output occupations are grouped by spatial pattern. Output arm 1 is
 * reported as "left".
 */

#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "qstat/errors.hpp"
#include "qstat/fock.hpp"
#include "qstat/statistics_kind.hpp"

namespace qstat {

/// Unit-norm internal (polarization, spin, ...) state.
class InternalState {
 public:
  explicit InternalState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw DimensionError("internal state needs at least one component");
    double s = 0;
    for (const Complex& c : amplitudes_) s += std::norm(c);
    if (!(std::abs(std::sqrt(s) - 1.0) <= 1e-12)) throw DomainError("internal state must have unit norm");
  }

  /// Rescales `amplitudes` to unit norm first.
  static InternalState normalized(std::vector<Complex> amplitudes) {
    double s = 0;
    for (const Complex& c : amplitudes) s += std::norm(c);
    if (!(s > 0)) throw DomainError("cannot normalize a zero internal state");
    const double inv = 1.0 / std::sqrt(s);
    for (Complex& c : amplitudes) c *= inv;
    return InternalState(std::move(amplitudes));
  }

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  std::vector<Complex> amplitudes_;
};

/// |<a|b>|^2
inline double overlap_squared(const InternalState& a, const InternalState& b) {
  if (a.dim() != b.dim()) throw DimensionError("internal states have different dimensions");
  Complex s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return std::norm(s);
}

struct OutputDistribution {
  double p_both_left = 0;
  double p_both_right = 0;
  double p_coincidence = 0;
};

enum class SplitterConvention { Standard, Alternate };

enum class PathOutcome { Bunched, Coincident };

namespace detail {

inline void require_two_particle_statistics(const Statistics& s) {
  if (s.is_quon()) {
    throw UnsupportedError("beam-splitter statistics of quons needs the undefined multi-mode quon algebra");
  }
}

/// Output state of a^dag_{L,left} a^dag_{R,right} |0> after the splitter, on
/// 2k modes indexed arm * k + internal (arm 0 = output 1, arm 1 = output 2).
inline FockVector splitter_output_state(std::span<const Complex> left, std::span<const Complex> right,
                                        Statistics statistics, SplitterConvention convention) {
  const std::size_t k = left.size();
  const FockContext ctx(2 * k, statistics, 2);
  const double h = 1.0 / std::sqrt(2.0);
  const double r1 = convention == SplitterConvention::Standard ? h : -h;
  const double r2 = convention == SplitterConvention::Standard ? -h : h;

  FockVector vac = FockVector::vacuum(ctx);
  vac.set_prune_threshold(0);
  // Right particle's creator acts first (rightmost in the product).
  FockVector after_right(ctx);
  after_right.set_prune_threshold(0);
  for (std::size_t b = 0; b < k; ++b) {
    if (right[b] == Complex(0)) continue;
    after_right += (right[b] * r1) * create(b, vac);
    after_right += (right[b] * r2) * create(k + b, vac);
  }
  FockVector out(ctx);
  out.set_prune_threshold(0);
  for (std::size_t a = 0; a < k; ++a) {
    if (left[a] == Complex(0)) continue;
    out += (left[a] * h) * create(a, after_right);
    out += (left[a] * h) * create(k + a, after_right);
  }
  return out;
}

inline OutputDistribution tally_by_arm(const FockVector& out, std::size_t k) {
  OutputDistribution d;
  double total = 0;
  for (const auto& [occ, amp] : out.terms()) {
    unsigned arm1 = 0;
    for (std::size_t a = 0; a < k; ++a) arm1 += occ[a];
    const double p = std::norm(amp);
    total += p;
    if (arm1 == 2) {
      d.p_both_left += p;
    } else if (arm1 == 0) {
      d.p_both_right += p;
    } else {
      d.p_coincidence += p;
    }
  }
  if (!(total > 0)) throw DomainError("beam-splitter output state vanished");
  d.p_both_left /= total;
  d.p_both_right /= total;
  d.p_coincidence /= total;
  return d;
}

}  // namespace detail

/**
 * Output distribution from the explicit Fock-space expansion. Distinguishable
 * particles are modelled as bosons tagged with orthogonal species labels, so
 * they never interfere.
 */
inline OutputDistribution output_distribution(const InternalState& left, const InternalState& right,
                                              Statistics statistics,
                                              SplitterConvention convention = SplitterConvention::Standard) {
  detail::require_two_particle_statistics(statistics);
  if (left.dim() != right.dim()) throw DimensionError("internal states have different dimensions");

  if (statistics.kind() == Statistics::Kind::Distinguishable) {
    // Internal space doubled: species A occupies the first k components, B the rest.
    const std::size_t k = left.dim();
    std::vector<Complex> tagged_left(2 * k, Complex(0));
    std::vector<Complex> tagged_right(2 * k, Complex(0));
    for (std::size_t a = 0; a < k; ++a) {
      tagged_left[a] = left[a];
      tagged_right[k + a] = right[a];
    }
    const FockVector out = detail::splitter_output_state(tagged_left, tagged_right, Statistics::boson(), convention);
    return detail::tally_by_arm(out, 2 * k);
  }
  const FockVector out = detail::splitter_output_state(left.amplitudes(), right.amplitudes(), statistics, convention);
  return detail::tally_by_arm(out, left.dim());
}

/// Closed forms in s = |<left|right>|^2: bosons (1 - s)/2, fermions (1 + s)/2,
/// distinguishable 1/2 for the coincidence probability.
inline OutputDistribution closed_form_distribution(double s, Statistics statistics) {
  detail::require_two_particle_statistics(statistics);
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("overlap s must lie in [0, 1]");
  double coincidence = 0.5;
  if (statistics.is_boson()) coincidence = 0.5 * (1.0 - s);
  if (statistics.is_fermion()) coincidence = 0.5 * (1.0 + s);
  const double bunched = 0.5 * (1.0 - coincidence);
  return {bunched, bunched, coincidence};
}

/// Likelihood of an observed spatial outcome for each hypothesized overlap s.
inline std::vector<std::pair<double, double>> coincidence_likelihood(PathOutcome observed,
                                                                     std::span<const double> s_grid,
                                                                     Statistics statistics) {
  std::vector<std::pair<double, double>> out;
  out.reserve(s_grid.size());
  for (double s : s_grid) {
    const OutputDistribution d = closed_form_distribution(s, statistics);
    out.emplace_back(s, observed == PathOutcome::Coincident ? d.p_coincidence : d.p_both_left + d.p_both_right);
  }
  return out;
}

/// Pair of real internal states of dimension 2 with |<left|right>|^2 = s.
inline std::pair<InternalState, InternalState> states_with_overlap(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("overlap s must lie in [0, 1]");
  InternalState left({Complex(1), Complex(0)});
  InternalState right({Complex(std::sqrt(s)), Complex(std::sqrt(1.0 - s))});
  return {std::move(left), std::move(right)};
}

}  // namespace qstat
