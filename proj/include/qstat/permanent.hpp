// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <bit>
#include <cstdint>
#include <string>

#include "qstat/errors.hpp"

namespace qstat {

/// Largest order accepted by `permanent` (2^30 subset terms).
inline constexpr Eigen::Index kMaxPermanentOrder = 30;

/**
 * Permanent of a square matrix by Ryser's inclusion-exclusion formula,
 *
 *     perm(A) = (-1)^n sum_{S subset of cols} (-1)^{|S|} prod_i sum_{j in S} a_ij,
 *
 * visiting the subsets in Gray-code order so each step updates the n row sums
 * by a single column: O(2^n * n) overall.
 */
template <typename Derived>
typename Derived::Scalar permanent(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw DimensionError("permanent of a non-square matrix");
  if (n == 0) return Scalar(1);
  if (n > kMaxPermanentOrder) {
    throw SizeLimitError("permanent order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxPermanentOrder));
  }

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row_sums = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n);
  Scalar total(0);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t flipped = gray ^ next;
    const int col = std::countr_zero(flipped);
    if (next & flipped) {
      row_sums += a.col(col);
    } else {
      row_sums -= a.col(col);
    }
    gray = next;

    Scalar prod = row_sums.prod();
    if (std::popcount(gray) % 2 == 1) prod = -prod;
    total += prod;
  }
  return (n % 2 == 1) ? -total : total;
}

/// Determinant via partial-pivot LU.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  if (a.cols() != a.rows()) throw DimensionError("determinant of a non-square matrix");
  if (a.rows() == 0) return typename Derived::Scalar(1);
  return a.derived().eval().partialPivLu().determinant();
}

}  // namespace qstat
