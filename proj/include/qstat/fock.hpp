// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Occupation-number (Fock) states and ladder operators.
 *
 * Fermionic ladder operators pick up (-1)^{p_i}, p_i = number of occupied
 * modes with index below i. Bosonic operators carry sqrt(n) weights and a
 * per-mode cutoff n_max: creation on an n_max component drops it and marks
 * the result as truncated. Quons use the q-oscillator representation
 * a^dag|n> = sqrt([n+1]_q)|n+1>, [m]_q = 1 + q + ... + q^{m-1}, which is
 * single-mode only.
 */

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qstat/errors.hpp"
#include "qstat/first_quantization.hpp"
#include "qstat/permutations.hpp"
#include "qstat/statistics_kind.hpp"

namespace qstat {

inline constexpr double kDefaultPruneThreshold = 1e-15;
/// Largest Fock basis for which dense operator matrices are built.
inline constexpr std::size_t kMaxFockMatrixBasis = 1024;

/// Mode count, statistics and per-mode cutoff shared by all states of one space.
class FockContext {
 public:
  FockContext(std::size_t modes, Statistics statistics, unsigned n_max = 1)
      : modes_(modes), statistics_(statistics), n_max_(n_max) {
    if (modes == 0) throw DimensionError("Fock space needs at least one mode");
    switch (statistics.kind()) {
      case Statistics::Kind::Fermion:
        n_max_ = 1;
        break;
      case Statistics::Kind::Quon:
        if (modes > 1) {
          throw UnsupportedError("quon statistics is single-mode only; the multi-mode quon algebra is not defined");
        }
        [[fallthrough]];
      case Statistics::Kind::Boson:
        if (n_max == 0) throw DimensionError("n_max must be at least 1");
        break;
      case Statistics::Kind::Distinguishable:
        throw UnsupportedError("distinguishable particles have no Fock representation here");
    }
  }

  std::size_t modes() const noexcept { return modes_; }
  const Statistics& statistics() const noexcept { return statistics_; }
  unsigned n_max() const noexcept { return n_max_; }

  friend bool operator==(const FockContext&, const FockContext&) = default;

 private:
  std::size_t modes_;
  Statistics statistics_;
  unsigned n_max_;
};

class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<unsigned> occupations) : n_(std::move(occupations)) {}
  OccupationVector(std::initializer_list<unsigned> occupations) : n_(occupations) {}

  static OccupationVector empty(std::size_t modes) { return OccupationVector(std::vector<unsigned>(modes, 0)); }

  std::size_t modes() const noexcept { return n_.size(); }
  unsigned operator[](std::size_t i) const { return n_[i]; }
  unsigned& operator[](std::size_t i) { return n_[i]; }
  std::span<const unsigned> occupations() const noexcept { return n_; }

  unsigned total() const {
    unsigned s = 0;
    for (unsigned k : n_) s += k;
    return s;
  }

  /// Bit i set iff mode i is occupied; fermionic occupations with M <= 63 only.
  std::uint64_t mask() const {
    if (n_.size() > 63) throw SizeLimitError("bitmask encoding supports at most 63 modes");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n_.size(); ++i)
      if (n_[i] != 0) m |= std::uint64_t{1} << i;
    return m;
  }

  /// Throws unless the occupations are admissible in `ctx`.
  void validate(const FockContext& ctx) const {
    if (n_.size() != ctx.modes()) {
      throw DimensionError("occupation vector has " + std::to_string(n_.size()) + " modes, context has " +
                           std::to_string(ctx.modes()));
    }
    for (unsigned k : n_) {
      if (k > ctx.n_max()) {
        if (ctx.statistics().is_fermion()) {
          throw ExclusionError("fermionic occupation above 1 is Pauli-forbidden");
        }
        throw DimensionError("occupation " + std::to_string(k) + " exceeds n_max " + std::to_string(ctx.n_max()));
      }
    }
  }

  friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;
  friend bool operator==(const OccupationVector&, const OccupationVector&) = default;

 private:
  std::vector<unsigned> n_;
};

/// q-integer [m]_q = sum_{j<m} q^j.
inline double q_integer(unsigned m, double q) {
  double s = 0;
  double term = 1;
  for (unsigned j = 0; j < m; ++j) {
    s += term;
    term *= q;
  }
  return s;
}

class FockVector {
 public:
  using Terms = std::map<OccupationVector, Complex>;

  explicit FockVector(FockContext ctx) : ctx_(std::move(ctx)) {}

  static FockVector vacuum(const FockContext& ctx) {
    FockVector v(ctx);
    v.terms_.emplace(OccupationVector::empty(ctx.modes()), Complex(1));
    return v;
  }

  static FockVector number_state(const FockContext& ctx, const OccupationVector& occ, Complex amp = 1.0) {
    FockVector v(ctx);
    v.add(occ, amp);
    return v;
  }

  const FockContext& context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// True if some operator that produced this vector dropped an n_max overflow.
  bool truncated() const noexcept { return truncated_; }
  void mark_truncated() noexcept { truncated_ = true; }

  double prune_threshold() const noexcept { return prune_; }
  FockVector& set_prune_threshold(double threshold) {
    prune_ = threshold;
    return *this;
  }

  Complex amplitude(const OccupationVector& occ) const {
    auto it = terms_.find(occ);
    return it == terms_.end() ? Complex(0) : it->second;
  }

  /// Adds `amp` to the coefficient of `occ`.
  FockVector& add(const OccupationVector& occ, Complex amp) {
    occ.validate(ctx_);
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
      throw DomainError("Fock amplitude is not finite");
    }
    terms_[occ] += amp;
    return *this;
  }

  /// Drops entries with |amp| <= prune threshold.
  FockVector& prune() {
    std::erase_if(terms_, [this](const auto& kv) { return std::abs(kv.second) <= prune_; });
    return *this;
  }

  double norm() const {
    double s = 0;
    for (const auto& [occ, a] : terms_) s += std::norm(a);
    return std::sqrt(s);
  }

  FockVector& operator*=(Complex s) {
    for (auto& [occ, a] : terms_) a *= s;
    return *this;
  }
  FockVector& operator+=(const FockVector& o) {
    require_same_context(o);
    for (const auto& [occ, a] : o.terms_) terms_[occ] += a;
    truncated_ = truncated_ || o.truncated_;
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator*(Complex s, FockVector v) { return v *= s; }

  void require_same_context(const FockVector& o) const {
    if (!(o.ctx_ == ctx_)) throw DimensionError("Fock vectors belong to different contexts");
  }

 private:
  FockContext ctx_;
  Terms terms_;
  bool truncated_ = false;
  double prune_ = kDefaultPruneThreshold;
};

inline Complex inner(const FockVector& u, const FockVector& v) {
  u.require_same_context(v);
  Complex s(0);
  for (const auto& [occ, a] : u.terms()) s += std::conj(a) * v.amplitude(occ);
  return s;
}

namespace detail {

inline void check_mode(const FockVector& v, std::size_t i) {
  if (i >= v.context().modes()) {
    throw DimensionError("mode index " + std::to_string(i) + " out of range for " +
                         std::to_string(v.context().modes()) + " modes");
  }
}

/// (-1)^{p_i}: parity of the number of occupied modes strictly below i.
inline double fermion_phase(const OccupationVector& occ, std::size_t i) {
  unsigned below = 0;
  if (occ.modes() <= 63) {
    const std::uint64_t lower = (std::uint64_t{1} << i) - 1;
    below = static_cast<unsigned>(std::popcount(occ.mask() & lower));
  } else {
    for (std::size_t k = 0; k < i; ++k) below += occ[k];
  }
  return below % 2 == 0 ? 1.0 : -1.0;
}

inline FockVector empty_like(const FockVector& v) {
  FockVector out(v.context());
  out.set_prune_threshold(v.prune_threshold());
  if (v.truncated()) out.mark_truncated();
  return out;
}

}  // namespace detail

/// a^dag_i v.
inline FockVector create(std::size_t i, const FockVector& v) {
  detail::check_mode(v, i);
  FockVector out = detail::empty_like(v);
  const auto& ctx = v.context();
  for (const auto& [occ, a] : v.terms()) {
    const unsigned n = occ[i];
    double weight = 0;
    switch (ctx.statistics().kind()) {
      case Statistics::Kind::Fermion:
        if (n != 0) continue;
        weight = detail::fermion_phase(occ, i);
        break;
      case Statistics::Kind::Boson:
        weight = std::sqrt(static_cast<double>(n) + 1.0);
        break;
      case Statistics::Kind::Quon:
        weight = std::sqrt(std::max(0.0, q_integer(n + 1, ctx.statistics().q())));
        break;
      case Statistics::Kind::Distinguishable:
        throw UnsupportedError("no ladder operators for distinguishable particles");
    }
    if (n >= ctx.n_max()) {
      out.mark_truncated();
      continue;
    }
    OccupationVector raised = occ;
    raised[i] = n + 1;
    out.add(raised, weight * a);
  }
  return std::move(out.prune());
}

/// a_i v.
inline FockVector annihilate(std::size_t i, const FockVector& v) {
  detail::check_mode(v, i);
  FockVector out = detail::empty_like(v);
  const auto& ctx = v.context();
  for (const auto& [occ, a] : v.terms()) {
    const unsigned n = occ[i];
    if (n == 0) continue;
    double weight = 0;
    switch (ctx.statistics().kind()) {
      case Statistics::Kind::Fermion:
        weight = detail::fermion_phase(occ, i);
        break;
      case Statistics::Kind::Boson:
        weight = std::sqrt(static_cast<double>(n));
        break;
      case Statistics::Kind::Quon:
        weight = std::sqrt(std::max(0.0, q_integer(n, ctx.statistics().q())));
        break;
      case Statistics::Kind::Distinguishable:
        throw UnsupportedError("no ladder operators for distinguishable particles");
    }
    OccupationVector lowered = occ;
    lowered[i] = n - 1;
    out.add(lowered, weight * a);
  }
  return std::move(out.prune());
}

/// <v| a^dag_i a_i |v> / <v|v>.
inline double number_expectation(std::size_t i, const FockVector& v) {
  detail::check_mode(v, i);
  const double nrm2 = std::pow(v.norm(), 2);
  if (!(nrm2 > 0)) throw DomainError("number expectation of a zero vector");
  // a^dag a is diagonal with eigenvalue n_i for bosons and fermions, [n_i]_q for quons.
  double s = 0;
  for (const auto& [occ, a] : v.terms()) {
    const double n = v.context().statistics().is_quon() ? q_integer(occ[i], v.context().statistics().q())
                                                         : static_cast<double>(occ[i]);
    s += n * std::norm(a);
  }
  return s / nrm2;
}

/// All occupation vectors of `ctx`, first mode slowest, each n_k in [0, n_max].
inline std::vector<OccupationVector> fock_basis(const FockContext& ctx) {
  const std::size_t per_mode = ctx.n_max() + 1;
  const std::size_t size = checked_power(per_mode, ctx.modes());
  std::vector<OccupationVector> out;
  out.reserve(size);
  for (std::size_t flat = 0; flat < size; ++flat) {
    OccupationVector occ = OccupationVector::empty(ctx.modes());
    std::size_t rest = flat;
    for (std::size_t k = ctx.modes(); k-- > 0;) {
      occ[k] = static_cast<unsigned>(rest % per_mode);
      rest /= per_mode;
    }
    out.push_back(std::move(occ));
  }
  return out;
}

/// Dense matrices of a_i and a^dag_i on `fock_basis(ctx)`, built by applying
/// the sparse operators to each basis state.
struct LadderMatrices {
  std::vector<OccupationVector> basis;
  std::vector<Eigen::MatrixXd> annihilation;
  std::vector<Eigen::MatrixXd> creation;
};

inline LadderMatrices ladder_matrices(const FockContext& ctx) {
  LadderMatrices out;
  const std::size_t per_mode = ctx.n_max() + 1;
  // checked_power guards the cap before the basis is materialized
  const std::size_t size = checked_power(per_mode, ctx.modes(), kMaxFockMatrixBasis);
  out.basis = fock_basis(ctx);
  std::map<OccupationVector, Eigen::Index> index;
  for (std::size_t k = 0; k < out.basis.size(); ++k) index.emplace(out.basis[k], static_cast<Eigen::Index>(k));

  const auto dim = static_cast<Eigen::Index>(size);
  for (std::size_t i = 0; i < ctx.modes(); ++i) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd adag = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      FockVector e = FockVector::number_state(ctx, out.basis[static_cast<std::size_t>(col)]);
      e.set_prune_threshold(0);
      const FockVector lowered = annihilate(i, e);
      const FockVector raised = create(i, e);
      for (const auto& [occ, amp] : lowered.terms()) a(index.at(occ), col) = amp.real();
      for (const auto& [occ, amp] : raised.terms()) adag(index.at(occ), col) = amp.real();
    }
    out.annihilation.push_back(std::move(a));
    out.creation.push_back(std::move(adag));
  }
  return out;
}

struct AlgebraCheck {
  std::string name;
  double deviation = 0;
};

struct AlgebraReport {
  Statistics statistics = Statistics::fermion();
  std::size_t modes = 0;
  unsigned n_max = 0;
  std::size_t basis_size = 0;
  /// Basis states on which the relations are required to hold exactly.
  std::size_t checked_states = 0;
  std::vector<AlgebraCheck> checks;
  /// Deviation of the (q-)commutator over the full truncated basis; nonzero
  /// only on states touching the cutoff. Informational.
  double full_basis_deviation = 0;

  double max_deviation() const {
    double m = 0;
    for (const auto& c : checks) m = std::max(m, c.deviation);
    return m;
  }
  bool passed(double tol = 1e-12) const { return max_deviation() <= tol; }
};

/**
 * Builds dense ladder matrices and measures the deviation of the defining
 * relations:
 *  - fermions: {a_i, a^dag_j} = delta_ij, {a_i, a_j} = 0, (a^dag_i)^2 = 0;
 *  - bosons and quons: a_i a^dag_j - q a^dag_j a_i = delta_ij, evaluated on
 *    basis states with every n_k < n_max (q = 1 for bosons), and for bosons
 *    [a_i, a_j] = 0.
 * Every report also checks that creation is the transpose of annihilation.
 */
inline AlgebraReport verify_algebra(Statistics statistics, std::size_t modes, unsigned n_max) {
  const FockContext ctx(modes, statistics, n_max);
  const LadderMatrices mats = ladder_matrices(ctx);
  const auto dim = static_cast<Eigen::Index>(mats.basis.size());
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);

  AlgebraReport report;
  report.statistics = statistics;
  report.modes = modes;
  report.n_max = ctx.n_max();
  report.basis_size = mats.basis.size();

  double adjoint = 0;
  for (std::size_t i = 0; i < modes; ++i)
    adjoint = std::max(adjoint, (mats.creation[i] - mats.annihilation[i].transpose()).cwiseAbs().maxCoeff());

  if (statistics.is_fermion()) {
    double anti_mixed = 0;
    double anti_same = 0;
    double square = 0;
    for (std::size_t i = 0; i < modes; ++i) {
      const auto& ai = mats.annihilation[i];
      const auto& ci = mats.creation[i];
      square = std::max(square, (ci * ci).cwiseAbs().maxCoeff());
      for (std::size_t j = 0; j < modes; ++j) {
        const auto& aj = mats.annihilation[j];
        const auto& cj = mats.creation[j];
        const Eigen::MatrixXd mixed = ai * cj + cj * ai - (i == j ? id : Eigen::MatrixXd::Zero(dim, dim));
        anti_mixed = std::max(anti_mixed, mixed.cwiseAbs().maxCoeff());
        anti_same = std::max(anti_same, (ai * aj + aj * ai).cwiseAbs().maxCoeff());
      }
    }
    report.checked_states = mats.basis.size();
    report.checks = {{"{a_i,a+_j} - delta_ij I", anti_mixed},
                     {"{a_i,a_j}", anti_same},
                     {"(a+_i)^2", square},
                     {"a+_i - (a_i)^T", adjoint}};
    return report;
  }

  const double q = statistics.q();
  std::vector<Eigen::Index> interior;
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto& occ = mats.basis[static_cast<std::size_t>(col)];
    const auto occs = occ.occupations();
    if (std::all_of(occs.begin(), occs.end(), [&](unsigned n) { return n < ctx.n_max(); })) interior.push_back(col);
  }
  report.checked_states = interior.size();

  double mutator = 0;
  double commute_same = 0;
  for (std::size_t i = 0; i < modes; ++i) {
    for (std::size_t j = 0; j < modes; ++j) {
      const auto& ai = mats.annihilation[i];
      const auto& cj = mats.creation[j];
      const Eigen::MatrixXd rel = ai * cj - q * (cj * ai) - (i == j ? id : Eigen::MatrixXd::Zero(dim, dim));
      report.full_basis_deviation = std::max(report.full_basis_deviation, rel.cwiseAbs().maxCoeff());
      for (Eigen::Index col : interior) mutator = std::max(mutator, rel.col(col).cwiseAbs().maxCoeff());
      if (statistics.is_boson()) {
        const auto& aj = mats.annihilation[j];
        commute_same = std::max(commute_same, (ai * aj - aj * ai).cwiseAbs().maxCoeff());
      }
    }
  }
  report.checks.push_back({statistics.is_boson() ? "[a_i,a+_j] - delta_ij I" : "a_i a+_j - q a+_j a_i - delta_ij I",
                           mutator});
  if (statistics.is_boson()) report.checks.push_back({"[a_i,a_j]", commute_same});
  report.checks.push_back({"a+_i - (a_i)^T", adjoint});
  return report;
}

enum class ParaKind { Parafermion, Paraboson };

/**
 * Occupation admissibility under parastatistics of the given order.
 *
 * Parafermions of order n admit at most n particles per mode. For parabosons
 * the order bounds how many particles may share an antisymmetric arrangement,
 * which an occupation vector does not constrain: a completely symmetric state
 * exists for every occupation, so every occupation is admissible. Use
 * `paraboson_antisymmetric_admissible` for the bound itself.
 */
inline bool para_admissible(ParaKind kind, unsigned order, const OccupationVector& occ) {
  if (order == 0) throw DomainError("parastatistics order must be at least 1");
  if (kind == ParaKind::Paraboson) return true;
  const auto occs = occ.occupations();
  return std::all_of(occs.begin(), occs.end(), [order](unsigned n) { return n <= order; });
}

/// True iff `particles` parabosons of the given order may be mutually antisymmetrized.
inline bool paraboson_antisymmetric_admissible(unsigned order, unsigned particles) {
  if (order == 0) throw DomainError("parastatistics order must be at least 1");
  return particles <= order;
}

namespace detail {

inline void require_fock_statistics(const Statistics& s) {
  if (!s.is_fermion() && !s.is_boson()) {
    throw UnsupportedError("first/second quantization bridge supports fermions and bosons only");
  }
}

/// Mode labels repeated n_i times, increasing.
inline MultiIndex sorted_labels(const OccupationVector& occ) {
  MultiIndex idx;
  for (std::size_t m = 0; m < occ.modes(); ++m)
    for (unsigned k = 0; k < occ[m]; ++k) idx.push_back(m);
  return idx;
}

}  // namespace detail

/**
 * Unit-normalized (anti)symmetrized product of basis kets, mode m repeated
 * n_m times in increasing mode order. For fermions the increasing order fixes
 * the sign convention: a^dag_{i_1} ... a^dag_{i_N} |0> with i_1 < ... < i_N
 * maps to +A(|i_1>...|i_N>) normalized.
 */
inline NBodyVector to_first_quantization(const OccupationVector& occ, Statistics statistics) {
  detail::require_fock_statistics(statistics);
  const MultiIndex labels = detail::sorted_labels(occ);
  if (labels.empty()) throw DimensionError("the vacuum has no first-quantized N-body vector");
  if (statistics.is_fermion()) {
    for (std::size_t m = 0; m < occ.modes(); ++m)
      if (occ[m] > 1) throw ExclusionError("fermionic occupation above 1 is Pauli-forbidden");
  }
  NBodyVector out(occ.modes(), labels.size());
  for (const auto& p : enumerate(labels.size())) {
    const double sign = statistics.is_fermion() ? p.parity() : 1.0;
    out[out.flat_index(p.apply(labels))] += sign;
  }
  return normalized(std::move(out));
}

/// Linear extension over a fixed-particle-number Fock vector.
inline NBodyVector to_first_quantization(const FockVector& v) {
  const Statistics statistics = v.context().statistics();
  detail::require_fock_statistics(statistics);
  if (v.empty()) throw DimensionError("cannot infer the particle count of an empty Fock vector");
  const unsigned n = v.terms().begin()->first.total();
  if (n == 0) throw DimensionError("the vacuum has no first-quantized N-body vector");
  NBodyVector out(v.context().modes(), n);
  for (const auto& [occ, a] : v.terms()) {
    if (occ.total() != n) throw DimensionError("Fock vector mixes particle numbers");
    out += a * to_first_quantization(occ, statistics);
  }
  return out;
}

/**
 * Inverse of `to_first_quantization` on the symmetric (bosons) or antisymmetric
 * (fermions) subspace. The coefficient of an occupation is
 * sqrt(#arrangements) times the amplitude at its sorted multi-index.
 * Vectors with a component outside the required class beyond `tol`
 * (relative) raise ClassificationError.
 */
inline FockVector from_first_quantization(const NBodyVector& v, Statistics statistics,
                                          std::optional<unsigned> n_max = std::nullopt, double tol = 1e-10) {
  detail::require_fock_statistics(statistics);
  if (v.n() == 0) throw DimensionError("first quantization bridge needs at least one particle");
  const NBodyVector projected = statistics.is_fermion() ? antisymmetrize(v) : symmetrize(v);
  const double nrm = v.norm();
  const double off_class = (v - projected).norm();
  if (off_class > tol * std::max(nrm, 1e-300)) {
    throw ClassificationError(std::string("vector is not ") +
                              (statistics.is_fermion() ? "antisymmetric" : "symmetric") +
                              " (off-class norm " + std::to_string(off_class) + ")");
  }
  const auto n = static_cast<unsigned>(v.n());
  const FockContext ctx(v.d(), statistics, n_max.value_or(n));
  FockVector out(ctx);
  out.set_prune_threshold(0);

  // Walk non-decreasing (fermions: strictly increasing) label sequences.
  MultiIndex labels(v.n(), 0);
  const std::size_t d = v.d();
  const bool strict = statistics.is_fermion();
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t pos, std::size_t start) {
    if (pos == labels.size()) {
      OccupationVector occ = OccupationVector::empty(d);
      for (std::size_t m : labels) ++occ[m];
      double arrangements = static_cast<double>(factorial(labels.size()));
      for (std::size_t m = 0; m < d; ++m) arrangements /= static_cast<double>(factorial(occ[m]));
      const Complex amp = std::sqrt(arrangements) * v.at(labels);
      if (amp != Complex(0)) out.add(occ, amp);
      return;
    }
    for (std::size_t m = start; m < d; ++m) {
      labels[pos] = m;
      walk(pos + 1, strict ? m + 1 : m);
    }
  };
  walk(0, 0);
  out.set_prune_threshold(kDefaultPruneThreshold);
  return out;
}

}  // namespace qstat
