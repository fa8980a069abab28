// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file first_quantization.hpp
 * @brief N-body tensor-product states over a d-dimensional single-particle space.
 *
 * Amplitudes are stored densely in row-major multi-index order: the leftmost
 * particle label varies slowest. The symmetrizer and antisymmetrizer carry the
 * 1/N! prefactor, so both are orthogonal projectors; normalizing a projected
 * state to unit norm is always a separate, explicit step.
 */

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qstat/errors.hpp"
#include "qstat/permanent.hpp"
#include "qstat/permutations.hpp"

namespace qstat {

using Complex = std::complex<double>;

/// Upper bound on d^N for any dense N-body vector.
inline constexpr std::size_t kMaxAmplitudes = 10'000'000;
/// Upper bound on d^N * N! terms in one projection.
inline constexpr std::size_t kMaxProjectionTerms = 1'000'000'000;
/// Upper bound on d^N when a dense projector matrix is built.
inline constexpr std::size_t kMaxProjectorMatrix = 1024;
inline constexpr double kDefaultClassifyTolerance = 1e-10;

/// d^n, throwing if it exceeds `cap`.
inline std::size_t checked_power(std::size_t d, std::size_t n, std::size_t cap = kMaxAmplitudes) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (d != 0 && out > cap / d) {
      throw SizeLimitError(std::to_string(d) + "^" + std::to_string(n) + " exceeds the cap of " +
                           std::to_string(cap));
    }
    out *= d;
  }
  if (out > cap) throw SizeLimitError(std::to_string(d) + "^" + std::to_string(n) + " exceeds the cap");
  return out;
}

class SingleParticleVector {
 public:
  SingleParticleVector() = default;
  explicit SingleParticleVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    for (const Complex& c : amplitudes_) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw DomainError("single-particle amplitude is not finite");
      }
    }
  }

  /// Unit vector |i> in dimension d.
  static SingleParticleVector basis(std::size_t d, std::size_t i) {
    if (i >= d) throw DimensionError("basis index out of range");
    std::vector<Complex> a(d, Complex(0));
    a[i] = 1.0;
    return SingleParticleVector(std::move(a));
  }

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const {
    double s = 0;
    for (const Complex& c : amplitudes_) s += std::norm(c);
    return std::sqrt(s);
  }

 private:
  std::vector<Complex> amplitudes_;
};

class NBodyVector {
 public:
  NBodyVector() = default;

  /// Zero vector of d^n amplitudes.
  NBodyVector(std::size_t d, std::size_t n) : d_(d), n_(n) {
    if (d == 0) throw DimensionError("single-particle dimension must be positive");
    amplitudes_.assign(checked_power(d, n), Complex(0));
  }

  NBodyVector(std::size_t d, std::size_t n, std::vector<Complex> amplitudes)
      : d_(d), n_(n), amplitudes_(std::move(amplitudes)) {
    if (d == 0) throw DimensionError("single-particle dimension must be positive");
    const std::size_t expected = checked_power(d, n);
    if (amplitudes_.size() != expected) {
      throw DimensionError("expected " + std::to_string(expected) + " amplitudes, got " +
                           std::to_string(amplitudes_.size()));
    }
  }

  std::size_t d() const noexcept { return d_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }

  Complex& operator[](std::size_t flat) { return amplitudes_[flat]; }
  const Complex& operator[](std::size_t flat) const { return amplitudes_[flat]; }

  std::size_t flat_index(std::span<const std::size_t> idx) const {
    if (idx.size() != n_) throw DimensionError("multi-index length does not match particle count");
    std::size_t flat = 0;
    for (std::size_t k : idx) {
      if (k >= d_) throw DimensionError("multi-index entry out of range");
      flat = flat * d_ + k;
    }
    return flat;
  }

  MultiIndex multi_index(std::size_t flat) const {
    MultiIndex idx(n_);
    for (std::size_t k = n_; k-- > 0;) {
      idx[k] = flat % d_;
      flat /= d_;
    }
    return idx;
  }

  Complex at(std::span<const std::size_t> idx) const { return amplitudes_[flat_index(idx)]; }

  double norm() const {
    double s = 0;
    for (const Complex& c : amplitudes_) s += std::norm(c);
    return std::sqrt(s);
  }

  NBodyVector& operator*=(Complex s) {
    for (Complex& c : amplitudes_) c *= s;
    return *this;
  }
  NBodyVector& operator+=(const NBodyVector& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] += o.amplitudes_[i];
    return *this;
  }
  NBodyVector& operator-=(const NBodyVector& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] -= o.amplitudes_[i];
    return *this;
  }
  friend NBodyVector operator*(Complex s, NBodyVector v) { return v *= s; }
  friend NBodyVector operator+(NBodyVector a, const NBodyVector& b) { return a += b; }
  friend NBodyVector operator-(NBodyVector a, const NBodyVector& b) { return a -= b; }

  void require_same_shape(const NBodyVector& o) const {
    if (o.d_ != d_ || o.n_ != n_) throw DimensionError("N-body vectors have different shapes");
  }

 private:
  std::size_t d_ = 1;
  std::size_t n_ = 0;
  std::vector<Complex> amplitudes_{Complex(1)};
};

/// <u|v>, antilinear in u.
inline Complex inner(const NBodyVector& u, const NBodyVector& v) {
  u.require_same_shape(v);
  Complex s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

/// Largest elementwise modulus of a - b.
inline double max_abs_diff(const NBodyVector& a, const NBodyVector& b) {
  a.require_same_shape(b);
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline NBodyVector tensor_product(std::span<const SingleParticleVector> parts) {
  if (parts.empty()) throw DimensionError("tensor product needs at least one part");
  const std::size_t d = parts.front().dim();
  for (const auto& p : parts) {
    if (p.dim() != d) throw DimensionError("parts have different single-particle dimensions");
  }
  NBodyVector out(d, parts.size());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    std::size_t rest = flat;
    Complex prod(1);
    for (std::size_t k = parts.size(); k-- > 0;) {
      prod *= parts[k][rest % d];
      rest /= d;
    }
    out[flat] = prod;
  }
  return out;
}

namespace detail {

/// Offsets such that (P v)[flat(i)] = v[sum_m i_m * offsets[m]].
inline std::vector<std::size_t> permuted_strides(const Permutation& p, std::size_t d) {
  const std::size_t n = p.size();
  std::vector<std::size_t> stride(n);
  std::size_t s = 1;
  for (std::size_t k = n; k-- > 0;) {
    stride[k] = s;
    s *= d;
  }
  // (P v)[i] = v[sum_k i_{p(k)} stride_k]; collect the coefficient of i_m.
  std::vector<std::size_t> offsets(n);
  for (std::size_t k = 0; k < n; ++k) offsets[p(k)] = stride[k];
  return offsets;
}

/// out += weight * (P v), iterating the multi-index with an odometer.
inline void accumulate_permuted(const NBodyVector& v, const Permutation& p, Complex weight, NBodyVector& out) {
  const std::size_t n = v.n();
  const std::size_t d = v.d();
  const auto offsets = permuted_strides(p, d);
  std::vector<std::size_t> digits(n, 0);
  std::size_t source = 0;
  for (std::size_t flat = 0; flat < v.size(); ++flat) {
    out[flat] += weight * v[source];
    for (std::size_t k = n; k-- > 0;) {
      if (++digits[k] < d) {
        source += offsets[k];
        break;
      }
      source -= offsets[k] * (d - 1);
      digits[k] = 0;
    }
  }
}

inline void check_projection_work(const NBodyVector& v) {
  if (v.n() > kMaxPermutationLabels) {
    throw SizeLimitError("projection over " + std::to_string(v.n()) + "! permutations exceeds the cap");
  }
  const std::size_t perms = factorial(v.n());
  if (v.size() > kMaxProjectionTerms / perms) {
    throw SizeLimitError("projection needs " + std::to_string(v.size()) + " x " + std::to_string(perms) +
                         " terms, over the cap of " + std::to_string(kMaxProjectionTerms));
  }
}

inline NBodyVector project(const NBodyVector& v, bool signed_sum) {
  if (v.n() == 0) return v;
  check_projection_work(v);
  NBodyVector out(v.d(), v.n());
  const auto perms = enumerate(v.n());
  const double w = 1.0 / static_cast<double>(perms.size());
  for (const auto& p : perms) {
    accumulate_permuted(v, p, signed_sum ? w * p.parity() : w, out);
  }
  return out;
}

}  // namespace detail

/// P v for a single permutation.
inline NBodyVector permute(const Permutation& p, const NBodyVector& v) {
  if (p.size() != v.n()) throw DimensionError("permutation size does not match particle count");
  NBodyVector out(v.d(), v.n());
  detail::accumulate_permuted(v, p, 1.0, out);
  return out;
}

/// S v = (1/N!) sum_P P v.
inline NBodyVector symmetrize(const NBodyVector& v) { return detail::project(v, false); }

/// A v = (1/N!) sum_P eps_P P v.
inline NBodyVector antisymmetrize(const NBodyVector& v) { return detail::project(v, true); }

/// Rescales to unit norm; a zero vector cannot be normalized.
inline NBodyVector normalized(NBodyVector v, double zero_tol = 1e-12) {
  const double nrm = v.norm();
  if (!(nrm > zero_tol)) throw DomainError("cannot normalize a zero-norm vector");
  return v *= Complex(1.0 / nrm);
}

/**
 * Determinant-form antisymmetric state of the given parts, with the 1/N!
 * prefactor of the antisymmetrizer. With `normalize` set the result is scaled
 * to unit norm, and a vanishing determinant raises ExclusionError.
 */
inline NBodyVector slater(std::span<const SingleParticleVector> parts, bool normalize = false,
                          double zero_tol = 1e-12) {
  NBodyVector out = antisymmetrize(tensor_product(parts));
  if (!normalize) return out;
  const double nrm = out.norm();
  if (!(nrm > zero_tol)) {
    throw ExclusionError("Slater determinant vanishes: the parts are linearly dependent "
                         "(Pauli-forbidden configuration)");
  }
  return out *= Complex(1.0 / nrm);
}

enum class Symmetry { Symmetric, Antisymmetric, Mixed };

inline const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::Antisymmetric: return "antisymmetric";
    case Symmetry::Mixed: return "mixed";
  }
  return "?";
}

/**
 * One amplitude of the (anti)symmetrized product state without expanding the
 * d^N vector: det or perm of M_jk = parts[k][idx_j], divided by N!.
 */
inline Complex basis_amplitude(std::span<const SingleParticleVector> parts, std::span<const std::size_t> idx,
                               Symmetry kind) {
  if (parts.empty()) throw DimensionError("basis amplitude needs at least one part");
  if (idx.size() != parts.size()) throw DimensionError("multi-index length does not match part count");
  if (kind == Symmetry::Mixed) throw ClassificationError("basis amplitude is defined for symmetric or antisymmetric");
  const std::size_t d = parts.front().dim();
  const auto n = static_cast<Eigen::Index>(parts.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (idx[j] >= d) throw DimensionError("multi-index entry out of range");
    for (Eigen::Index k = 0; k < n; ++k) {
      if (parts[k].dim() != d) throw DimensionError("parts have different single-particle dimensions");
      m(j, k) = parts[k][idx[j]];
    }
  }
  const Complex core = kind == Symmetry::Antisymmetric ? determinant(m) : permanent(m);
  return core / static_cast<double>(factorial(parts.size()));
}

struct SubspaceDimensions {
  std::size_t symmetric = 0;
  std::size_t antisymmetric = 0;
  std::size_t mixed = 0;

  friend bool operator==(const SubspaceDimensions&, const SubspaceDimensions&) = default;
};

/// Dense real matrix of S (or A when `signed_sum`) on the d^n product basis.
inline Eigen::MatrixXd projector_matrix(std::size_t d, std::size_t n, bool signed_sum) {
  if (d == 0 || n == 0) throw DimensionError("projector needs d >= 1 and n >= 1");
  const std::size_t dim = checked_power(d, n, kMaxProjectorMatrix);
  const auto perms = enumerate(n);
  const double w = 1.0 / static_cast<double>(perms.size());
  const NBodyVector shape(d, n);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const MultiIndex idx = shape.multi_index(col);
    for (const auto& p : perms) {
      const std::size_t row = shape.flat_index(p.apply(idx));
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += signed_sum ? w * p.parity() : w;
    }
  }
  return m;
}

namespace detail {
inline std::size_t projector_rank(const Eigen::MatrixXd& projector) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(projector, Eigen::EigenvaluesOnly);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    if (eig.eigenvalues()(i) >= 0.5) ++rank;
  return rank;
}
}  // namespace detail

/// Dimensions of the symmetric, antisymmetric and mixed-symmetry subspaces,
/// counted as projector eigenvalues >= 1/2.
inline SubspaceDimensions subspace_dimensions(std::size_t d, std::size_t n) {
  SubspaceDimensions out;
  out.symmetric = detail::projector_rank(projector_matrix(d, n, false));
  out.antisymmetric = detail::projector_rank(projector_matrix(d, n, true));
  out.mixed = checked_power(d, n) - out.symmetric - out.antisymmetric;
  return out;
}

struct SymmetryClass {
  Symmetry kind = Symmetry::Mixed;
  double tolerance = kDefaultClassifyTolerance;
  /// max_P ||P v - v|| / ||v||
  double symmetric_deviation = 0;
  /// max_P ||P v - eps_P v|| / ||v||
  double antisymmetric_deviation = 0;
};

inline SymmetryClass classify(const NBodyVector& v, double tol = kDefaultClassifyTolerance) {
  const double nrm = v.norm();
  if (!(nrm > tol)) throw ClassificationError("symmetry class of a zero vector is undefined");
  detail::check_projection_work(v);
  SymmetryClass out;
  out.tolerance = tol;
  for (const auto& p : enumerate(v.n())) {
    const NBodyVector pv = permute(p, v);
    double sym = 0;
    double anti = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      sym += std::norm(pv[i] - v[i]);
      anti += std::norm(pv[i] - static_cast<double>(p.parity()) * v[i]);
    }
    out.symmetric_deviation = std::max(out.symmetric_deviation, std::sqrt(sym) / nrm);
    out.antisymmetric_deviation = std::max(out.antisymmetric_deviation, std::sqrt(anti) / nrm);
  }
  if (out.symmetric_deviation <= tol) {
    out.kind = Symmetry::Symmetric;
  } else if (out.antisymmetric_deviation <= tol) {
    out.kind = Symmetry::Antisymmetric;
  } else {
    out.kind = Symmetry::Mixed;
  }
  return out;
}

}  // namespace qstat
