// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "zgdof/antenna.hpp"
#include "zgdof/fterm.hpp"

namespace zgdof {

/// One fading realization: i.i.d. CN(0,1) entries, fresh per sample.
struct ChannelSample {
  Eigen::MatrixXcd h11;  // N1 x M1
  Eigen::MatrixXcd h12;  // N1 x M2
  Eigen::MatrixXcd h22;  // N2 x M2
};

/// Counter-based sampler: the matrix stream is a pure function of
/// (seed, ladder point, sample index), so samples can be drawn in any order
/// or in parallel and still reproduce bit-identically. Real and imaginary
/// parts come from two independent substreams, each scaled by 1/sqrt(2).
class ChannelSampler {
 public:
  ChannelSampler(AntennaConfig cfg, std::uint64_t seed);

  ChannelSample sample(std::uint64_t point_index, std::uint64_t sample_index) const;

  /// Standalone matrix draw for the raw log-det slope checks.
  Eigen::MatrixXcd gaussian(int rows, int cols, std::uint64_t point_index,
                            std::uint64_t sample_index, std::uint64_t slot) const;

 private:
  AntennaConfig cfg_;
  std::uint64_t seed_;
};

/// log2 det(I + rho^a1 H1 H1^† + rho^a2 H2 H2^†) via Cholesky of the
/// symmetrized argument. Throws NumericalFailure if the factorization fails
/// (the caller should lower the SNR ceiling).
double logdet_bits(const Eigen::MatrixXcd& h1, const Eigen::MatrixXcd& h2, double a1, double a2,
                   double log2_rho);

/// The rate terms whose pre-log the scheme's decoding analysis pins down.
enum class RateTerm {
  common_at_r1,        // common message into R1:   slope alpha * min(M2,N1)
  common_at_r2,        // common message into R2:   slope min(M2,N2)
  common_plus_r1,      // MAC sum at R1:            slope f(N1,(a,M2),(1,M1))
  r2,                  // private T2 stream at R2:  slope f(M2,(1-a2,N2),(a-a2,N1))
  common_plus_r2       // MAC sum at R2:            slope (a-a2)^+ N1' + min(M2,N2)
};

const char* rate_term_name(RateTerm term);
RateTerm rate_term_from_name(const std::string& name);

/// Symbolic pre-log of a rate term (exact; used as the prediction to check
/// fitted slopes against).
Rat rate_term_prediction(const AntennaConfig& cfg, RateTerm term, const Alpha& alpha,
                         const Rat& a2);

/// Monte Carlo slope fit over an SNR ladder.
struct SlopeEstimate {
  std::vector<double> snr_exponents;  // log2(rho) ladder, strictly increasing
  std::vector<double> mean_rates;     // per-point sample means, bits
  double slope;                       // least squares on the top half of the ladder
  double stderr_slope;                // OLS standard error of the fitted slope
  double prediction;                  // symbolic pre-log, for comparison
};

/// Default ladder log2(rho) = 16,20,...,40 (the slope fit then uses the top
/// four points, where the O(1) offsets have flattened out).
std::vector<double> default_ladder();

/// Fits the pre-log of a rate term. Requires at least 4 ladder points in
/// increasing order with log2(rho) <= 48, and at least 50 samples per point.
SlopeEstimate estimate_slope(const AntennaConfig& cfg, RateTerm term, const Alpha& alpha,
                             const Rat& a2, const std::vector<double>& ladder,
                             int samples_per_point, std::uint64_t seed);

/// Same fit for a raw two-source log-det with the dimensions and exponents of
/// an FTermSpec; the prediction is f_term(spec).
SlopeEstimate estimate_fterm_slope(const FTermSpec& spec, const std::vector<double>& ladder,
                                   int samples_per_point, std::uint64_t seed);

/// Least-squares slope of y against x restricted to the trailing `count`
/// points; exposed for refit-convergence checks.
std::pair<double, double> fit_tail_slope(const std::vector<double>& x,
                                         const std::vector<double>& y, std::size_t count);

}  // namespace zgdof
