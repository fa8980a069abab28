// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file permutations.hpp
 * @brief Permutations of N particle labels and their action on multi-indices.
 *
 * Convention used throughout the library: P acts on an N-body vector by
 * relocating tensor factors,
 *
 *     (P v)[i_0, ..., i_{N-1}] = v[i_{p(0)}, ..., i_{p(N-1)}],
 *
 * so on a basis ket the factor sitting at position k moves to position p(k).
 * With this convention P(Q v) = (P o Q) v, where (P o Q)(k) = P(Q(k)).
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qstat/errors.hpp"

namespace qstat {

/// Largest label count `enumerate` accepts by default (10! = 3,628,800).
inline constexpr std::size_t kMaxPermutationLabels = 10;

using MultiIndex = std::vector<std::size_t>;

class Permutation {
 public:
  /// Identity on `n` labels.
  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return Permutation(std::move(m), +1);
  }

  /// Transposition of labels `a` and `b` on `n` labels.
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b) {
    if (a >= n || b >= n) throw DimensionError("transposition label out of range");
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    std::swap(m[a], m[b]);
    return Permutation(std::move(m));
  }

  /// Validates that `mapping` is a bijection on {0, ..., n-1}.
  explicit Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (std::size_t image : mapping_) {
      if (image >= mapping_.size() || seen[image]) {
        throw DimensionError("permutation mapping is not a bijection");
      }
      seen[image] = true;
    }
    parity_ = count_inversion_parity(mapping_);
  }

  std::size_t size() const noexcept { return mapping_.size(); }
  std::size_t operator()(std::size_t label) const { return mapping_[label]; }
  std::span<const std::size_t> mapping() const noexcept { return mapping_; }

  /// +1 for even, -1 for odd.
  int parity() const noexcept { return parity_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(mapping_.size());
    for (std::size_t k = 0; k < mapping_.size(); ++k) inv[mapping_[k]] = k;
    return Permutation(std::move(inv), parity_);
  }

  /// Multi-index of P|idx>: result[p(k)] = idx[k].
  MultiIndex apply(std::span<const std::size_t> idx) const {
    if (idx.size() != mapping_.size()) {
      throw DimensionError("multi-index length " + std::to_string(idx.size()) +
                           " does not match permutation size " + std::to_string(mapping_.size()));
    }
    MultiIndex out(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) out[mapping_[k]] = idx[k];
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.mapping_ == b.mapping_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.mapping_ <=> b.mapping_;
  }

 private:
  Permutation(std::vector<std::size_t> mapping, int parity)
      : mapping_(std::move(mapping)), parity_(parity) {}

  static int count_inversion_parity(const std::vector<std::size_t>& m) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (m[i] > m[j]) ++inversions;
    return inversions % 2 == 0 ? +1 : -1;
  }

  std::vector<std::size_t> mapping_;
  int parity_ = +1;
};

/// (p o q)(k) = p(q(k)). Applying the result equals applying q, then p.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DimensionError("composing permutations of different sizes");
  std::vector<std::size_t> m(p.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = p(q(k));
  return Permutation(std::move(m));
}

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

/// All n! permutations of n labels in lexicographic order of their mappings.
/// The first entry is the identity.
inline std::vector<Permutation> enumerate(std::size_t n, std::size_t max_labels = kMaxPermutationLabels) {
  if (n == 0) throw DimensionError("cannot enumerate permutations of zero labels");
  if (n > max_labels) {
    throw SizeLimitError("enumerating " + std::to_string(n) + "! = " + std::to_string(factorial(n)) +
                         " permutations exceeds the cap of " + std::to_string(max_labels) + " labels");
  }
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

}  // namespace qstat
