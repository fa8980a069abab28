// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qstat/first_quantization.hpp"

namespace qstat {
namespace {

constexpr double kTight = 1e-12;

std::mt19937_64& rng() {
  static std::mt19937_64 r(3);
  return r;
}

NBodyVector random_vector(std::size_t d, std::size_t n) {
  std::normal_distribution<double> g;
  NBodyVector v(d, n);
  for (auto& c : v.amplitudes()) c = Complex(g(rng()), g(rng()));
  return v;
}

SingleParticleVector random_part(std::size_t d) {
  std::normal_distribution<double> g;
  std::vector<Complex> a(d);
  for (auto& c : a) c = Complex(g(rng()), g(rng()));
  return SingleParticleVector(std::move(a));
}

std::vector<SingleParticleVector> basis_parts(std::size_t d, std::initializer_list<std::size_t> labels) {
  std::vector<SingleParticleVector> out;
  for (std::size_t l : labels) out.push_back(SingleParticleVector::basis(d, l));
  return out;
}

double max_abs(const NBodyVector& v) {
  double m = 0;
  for (const auto& c : v.amplitudes()) m = std::max(m, std::abs(c));
  return m;
}

TEST(TensorProduct, SinglePartUnchanged) {
  const auto p = random_part(3);
  const std::vector<SingleParticleVector> parts{p};
  const NBodyVector v = tensor_product(parts);
  ASSERT_EQ(v.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(v[i], p[i]);
}

TEST(TensorProduct, BasisKets) {
  const NBodyVector v = tensor_product(basis_parts(2, {0, 1}));
  EXPECT_EQ(v.at(MultiIndex{0, 1}), Complex(1));
  EXPECT_NEAR(v.norm(), 1.0, kTight);
  EXPECT_EQ(v.at(MultiIndex{1, 0}), Complex(0));
}

TEST(TensorProduct, NormIsMultiplicative) {
  const std::vector<SingleParticleVector> parts{random_part(3), random_part(3), random_part(3)};
  EXPECT_NEAR(tensor_product(parts).norm(), parts[0].norm() * parts[1].norm() * parts[2].norm(), 1e-12);
}

TEST(TensorProduct, Errors) {
  const std::vector<SingleParticleVector> mismatched{random_part(2), random_part(3)};
  EXPECT_THROW(tensor_product(mismatched), DimensionError);
  const std::vector<SingleParticleVector> none;
  EXPECT_THROW(tensor_product(none), DimensionError);
  const std::vector<SingleParticleVector> huge(24, SingleParticleVector::basis(2, 0));
  EXPECT_THROW(tensor_product(huge), SizeLimitError);
}

TEST(Symmetrize, TwoParticleProduct) {
  const NBodyVector s = symmetrize(tensor_product(basis_parts(2, {0, 1})));
  EXPECT_NEAR(std::abs(s.at(MultiIndex{0, 1}) - 0.5), 0, kTight);
  EXPECT_NEAR(std::abs(s.at(MultiIndex{1, 0}) - 0.5), 0, kTight);
  EXPECT_EQ(s.at(MultiIndex{0, 0}), Complex(0));
}

TEST(Symmetrize, FixesSymmetricInput) {
  const NBodyVector s = symmetrize(random_vector(3, 3));
  EXPECT_LE(max_abs_diff(symmetrize(s), s), kTight);
}

TEST(Antisymmetrize, SpinSinglet) {
  const NBodyVector a = antisymmetrize(tensor_product(basis_parts(2, {0, 1})));
  EXPECT_NEAR(a.at(MultiIndex{0, 1}).real(), 0.5, kTight);
  EXPECT_NEAR(a.at(MultiIndex{1, 0}).real(), -0.5, kTight);
  const NBodyVector n = normalized(a);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(n.at(MultiIndex{0, 1}) - r), 0, kTight);
  EXPECT_NEAR(std::abs(n.at(MultiIndex{1, 0}) + r), 0, kTight);
  EXPECT_EQ(n.at(MultiIndex{0, 0}), Complex(0));
  EXPECT_EQ(n.at(MultiIndex{1, 1}), Complex(0));
}

TEST(Antisymmetrize, RepeatedStateVanishes) {
  EXPECT_EQ(max_abs(antisymmetrize(tensor_product(basis_parts(2, {0, 0})))), 0.0);
}

TEST(Projectors, IdentitiesOnRandomVectors) {
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        const NBodyVector u = random_vector(d, n);
        const NBodyVector v = random_vector(d, n);
        const NBodyVector sv = symmetrize(v);
        const NBodyVector av = antisymmetrize(v);
        EXPECT_LE(max_abs_diff(symmetrize(sv), sv), kTight);
        EXPECT_LE(max_abs_diff(antisymmetrize(av), av), kTight);
        if (n >= 2) {
          EXPECT_LE(max_abs(symmetrize(av)), kTight);
          EXPECT_LE(max_abs(antisymmetrize(sv)), kTight);
        }
        EXPECT_LE(std::abs(inner(u, sv) - inner(symmetrize(u), v)), kTight * std::max(1.0, std::abs(inner(u, sv))));
        EXPECT_LE(std::abs(inner(u, av) - inner(antisymmetrize(u), v)), kTight * std::max(1.0, std::abs(inner(u, av))));
      }
    }
  }
}

TEST(Projectors, OutputsHaveTheirSymmetry) {
  const NBodyVector v = random_vector(3, 3);
  const NBodyVector sv = symmetrize(v);
  const NBodyVector av = antisymmetrize(v);
  for (const auto& p : enumerate(3)) {
    EXPECT_LE(max_abs_diff(permute(p, sv), sv), kTight);
    EXPECT_LE(max_abs_diff(permute(p, av), static_cast<double>(p.parity()) * av), kTight);
  }
}

TEST(Projectors, PermuteIsGroupAction) {
  const NBodyVector v = random_vector(3, 3);
  const auto perms = enumerate(3);
  for (const auto& p : perms) {
    for (const auto& q : perms) {
      EXPECT_LE(max_abs_diff(permute(p, permute(q, v)), permute(compose(p, q), v)), 0.0);
    }
  }
}

TEST(Projectors, ConventionIndependent) {
  // Acting with P^{-1} in place of P (the other factor-relocation
  // convention) sums over the same group, so S and A are unchanged.
  const NBodyVector v = random_vector(3, 3);
  NBodyVector s_alt(3, 3), a_alt(3, 3);
  const auto perms = enumerate(3);
  for (const auto& p : perms) {
    const NBodyVector pv = permute(p.inverse(), v);
    s_alt += Complex(1.0 / perms.size()) * pv;
    a_alt += Complex(static_cast<double>(p.inverse().parity()) / perms.size()) * pv;
  }
  EXPECT_LE(max_abs_diff(s_alt, symmetrize(v)), kTight);
  EXPECT_LE(max_abs_diff(a_alt, antisymmetrize(v)), kTight);
}

TEST(Slater, EqualsAntisymmetrizedProduct) {
  const std::vector<SingleParticleVector> parts{random_part(4), random_part(4), random_part(4)};
  EXPECT_LE(max_abs_diff(slater(parts), antisymmetrize(tensor_product(parts))), 1e-13);
}

TEST(Slater, RepeatedPartIsExcluded) {
  const auto p = random_part(3);
  const std::vector<SingleParticleVector> same{p, p};
  EXPECT_LE(slater(same).norm(), kTight);
  EXPECT_THROW(slater(same, true), ExclusionError);
}

TEST(Slater, ScalarMultipleIsExcluded) {
  const auto p = random_part(3);
  std::vector<Complex> scaled(p.amplitudes().begin(), p.amplitudes().end());
  for (auto& c : scaled) c *= Complex(-0.3, 1.7);
  const std::vector<SingleParticleVector> parts{random_part(3), p, SingleParticleVector(scaled)};
  EXPECT_LE(slater(parts).norm(), kTight);
}

TEST(Slater, NormalizedSinglet) {
  const NBodyVector s = slater(basis_parts(2, {0, 1}), true);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(s.at(MultiIndex{0, 1}).real(), r, kTight);
  EXPECT_NEAR(s.at(MultiIndex{1, 0}).real(), -r, kTight);
}

TEST(Slater, OrthonormalPartsNorm) {
  // For orthonormal parts <v|A|v> = 1/N!, so ||A v|| = 1/sqrt(N!).
  const NBodyVector s = slater(basis_parts(4, {0, 2, 3}));
  EXPECT_NEAR(s.norm(), 1.0 / std::sqrt(6.0), kTight);
}

TEST(Slater, ZeroNormPartAllowedUnnormalized) {
  const std::vector<SingleParticleVector> parts{SingleParticleVector(std::vector<Complex>(2, 0.0)),
                                                SingleParticleVector::basis(2, 1)};
  EXPECT_EQ(slater(parts).norm(), 0.0);
  EXPECT_THROW(slater(parts, true), ExclusionError);
}

TEST(BasisAmplitude, Examples) {
  const auto parts = basis_parts(2, {0, 1});
  EXPECT_NEAR(std::abs(basis_amplitude(parts, MultiIndex{0, 1}, Symmetry::Antisymmetric) - 0.5), 0, kTight);
  EXPECT_NEAR(std::abs(basis_amplitude(parts, MultiIndex{1, 0}, Symmetry::Antisymmetric) + 0.5), 0, kTight);
  EXPECT_NEAR(std::abs(basis_amplitude(parts, MultiIndex{1, 0}, Symmetry::Symmetric) - 0.5), 0, kTight);
  EXPECT_THROW(basis_amplitude(parts, MultiIndex{0, 2}, Symmetry::Symmetric), DimensionError);
  EXPECT_THROW(basis_amplitude(parts, MultiIndex{0}, Symmetry::Symmetric), DimensionError);
}

TEST(BasisAmplitude, AgreesWithExpandedVector) {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<SingleParticleVector> parts;
      for (std::size_t k = 0; k < n; ++k) parts.push_back(random_part(d));
      const NBodyVector sym = symmetrize(tensor_product(parts));
      const NBodyVector anti = antisymmetrize(tensor_product(parts));
      for (std::size_t flat = 0; flat < sym.size(); ++flat) {
        const MultiIndex idx = sym.multi_index(flat);
        EXPECT_LE(std::abs(basis_amplitude(parts, idx, Symmetry::Symmetric) - sym[flat]), 1e-12);
        EXPECT_LE(std::abs(basis_amplitude(parts, idx, Symmetry::Antisymmetric) - anti[flat]), 1e-12);
      }
    }
  }
}

TEST(SubspaceDimensions, ProjectorRankMatchesBinomialCounts) {
  EXPECT_EQ(subspace_dimensions(2, 2), (SubspaceDimensions{3, 1, 0}));
  EXPECT_EQ(subspace_dimensions(2, 3), (SubspaceDimensions{4, 0, 4}));
  EXPECT_EQ(subspace_dimensions(3, 2), (SubspaceDimensions{6, 3, 0}));
  EXPECT_EQ(subspace_dimensions(3, 3), (SubspaceDimensions{10, 1, 16}));
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto dims = subspace_dimensions(d, n);
      EXPECT_EQ(dims.symmetric, oracle::binomial(d + n - 1, n));
      EXPECT_EQ(dims.antisymmetric, oracle::binomial(d, n));
      EXPECT_EQ(dims.symmetric + dims.antisymmetric + dims.mixed, checked_power(d, n));
    }
  }
}

TEST(SubspaceDimensions, MatrixCap) { EXPECT_THROW(subspace_dimensions(2, 11), SizeLimitError); }

TEST(Classify, Examples) {
  EXPECT_EQ(classify(symmetrize(random_vector(3, 3))).kind, Symmetry::Symmetric);
  EXPECT_EQ(classify(slater(basis_parts(2, {0, 1}), true)).kind, Symmetry::Antisymmetric);
  EXPECT_EQ(classify(tensor_product(basis_parts(2, {0, 1}))).kind, Symmetry::Mixed);
  EXPECT_THROW(classify(NBodyVector(2, 2)), ClassificationError);
}

TEST(Classify, StableUnderPhaseAndScale) {
  const NBodyVector s = symmetrize(random_vector(2, 3));
  const NBodyVector a = antisymmetrize(random_vector(3, 3));
  const NBodyVector m = random_vector(2, 3);
  for (Complex factor : {Complex(3.7), Complex(1e-3), std::polar(1.0, 0.9), std::polar(250.0, -2.1)}) {
    EXPECT_EQ(classify(factor * s).kind, Symmetry::Symmetric);
    EXPECT_EQ(classify(factor * a).kind, Symmetry::Antisymmetric);
    EXPECT_EQ(classify(factor * m).kind, Symmetry::Mixed);
  }
}

}  // namespace
}  // namespace qstat
