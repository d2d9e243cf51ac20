// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include <stdexcept>
#include <string>

namespace zgdof {

/// Thrown by the region kernel when a half-plane intersection has no point.
class EmptyRegion : public std::runtime_error {
 public:
  explicit EmptyRegion(const std::string& what = "half-plane intersection is empty")
      : std::runtime_error(what) {}
};

/// Thrown by the region kernel when the intersection has no finite vertex set.
class UnboundedRegion : public std::runtime_error {
 public:
  explicit UnboundedRegion(const std::string& what = "half-plane intersection is unbounded")
      : std::runtime_error(what) {}
};

/// Thrown by closed-form operations that are stated only for canonical antenna tuples.
class NonCanonicalConfig : public std::runtime_error {
 public:
  explicit NonCanonicalConfig(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a transmit power backoff lies outside the admissible interval.
class A2OutOfRange : public std::runtime_error {
 public:
  explicit A2OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when the achievable hull and the outer bound disagree. Carries the
/// violated constraint; never expected on valid input, signals a bug.
class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when the loss decomposition does not reassemble to the weighted bound.
class DecompositionMismatch : public std::runtime_error {
 public:
  explicit DecompositionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a log-det factorization fails (overflow at too large an SNR).
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zgdof
