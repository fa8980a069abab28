// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qstat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched lengths or single-particle dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (permutation count, d^N, matrix size) would be exceeded.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a physical law (T <= 0, mu >= E for bosons, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A Pauli-forbidden configuration: the antisymmetrized state vanishes.
class ExclusionError : public Error {
 public:
  using Error::Error;
};

/// The requested statistics is not modelled for this operation.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Symmetry class is undefined (zero vector) or does not match the request.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qstat
