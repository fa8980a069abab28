// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <string>

#include "qstat/errors.hpp"

namespace qstat {

/// Particle statistics. Quons carry the deformation parameter q in [-1, 1].
class Statistics {
 public:
  enum class Kind { Fermion, Boson, Quon, Distinguishable };

  static constexpr Statistics fermion() { return Statistics(Kind::Fermion, -1.0); }
  static constexpr Statistics boson() { return Statistics(Kind::Boson, 1.0); }
  static constexpr Statistics distinguishable() { return Statistics(Kind::Distinguishable, 0.0); }
  static Statistics quon(double q) {
    if (!(q >= -1.0 && q <= 1.0)) throw DomainError("quon parameter q must lie in [-1, 1]");
    return Statistics(Kind::Quon, q);
  }

  constexpr Kind kind() const noexcept { return kind_; }

  /// Deformation parameter of a a^dag - q a^dag a = 1: -1 fermion, +1 boson.
  constexpr double q() const noexcept { return q_; }

  constexpr bool is_fermion() const noexcept { return kind_ == Kind::Fermion; }
  constexpr bool is_boson() const noexcept { return kind_ == Kind::Boson; }
  constexpr bool is_quon() const noexcept { return kind_ == Kind::Quon; }

  std::string name() const {
    switch (kind_) {
      case Kind::Fermion: return "fermion";
      case Kind::Boson: return "boson";
      case Kind::Distinguishable: return "distinguishable";
      case Kind::Quon: return "quon(" + std::to_string(q_) + ")";
    }
    return "?";
  }

  friend constexpr bool operator==(const Statistics&, const Statistics&) = default;

 private:
  constexpr Statistics(Kind kind, double q) : kind_(kind), q_(q) {}

  Kind kind_;
  double q_;
};

}  // namespace qstat
