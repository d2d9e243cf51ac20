// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include "zgdof/montecarlo.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zgdof/errors.hpp"

namespace zgdof {

namespace {

// splitmix64; mixes the (seed, point, sample, slot) counters into one stream
// key and then steps as a standalone generator.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Stream {
 public:
  explicit Stream(std::uint64_t key) : state_(key) {}

  double uniform01() {  // in (0, 1]
    state_ = mix64(state_ + 0x632be59bd9b4e019ULL);
    return (static_cast<double>(state_ >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; one value per call keeps the stream a
  // pure function of the call count.
  double normal() {
    const double u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

 private:
  std::uint64_t state_;
};

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t point, std::uint64_t sample,
                         std::uint64_t slot) {
  std::uint64_t key = mix64(seed);
  key = mix64(key ^ (point * 0x9e3779b97f4a7c15ULL + 1));
  key = mix64(key ^ (sample * 0xd1b54a32d192ed03ULL + 2));
  key = mix64(key ^ slot);
  return key;
}

void check_ladder(const std::vector<double>& ladder) {
  if (ladder.size() < 4) throw std::invalid_argument("ladder needs at least 4 points");
  for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
    if (!(ladder[i] < ladder[i + 1])) {
      throw std::invalid_argument("ladder must be strictly increasing");
    }
  }
  if (ladder.back() > 48.0) throw std::invalid_argument("ladder exceeds the numeric range");
}

Eigen::MatrixXcd draw_matrix(int rows, int cols, std::uint64_t key_re, std::uint64_t key_im) {
  Eigen::MatrixXcd m(rows, cols);
  Stream re(key_re);
  Stream im(key_im);
  const double scale = 1.0 / std::sqrt(2.0);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      m(r, c) = std::complex<double>(re.normal() * scale, im.normal() * scale);
    }
  }
  return m;
}

}  // namespace

ChannelSampler::ChannelSampler(AntennaConfig cfg, std::uint64_t seed)
    : cfg_(std::move(cfg)), seed_(seed) {}

Eigen::MatrixXcd ChannelSampler::gaussian(int rows, int cols, std::uint64_t point_index,
                                          std::uint64_t sample_index, std::uint64_t slot) const {
  return draw_matrix(rows, cols, stream_key(seed_, point_index, sample_index, 2 * slot),
                     stream_key(seed_, point_index, sample_index, 2 * slot + 1));
}

ChannelSample ChannelSampler::sample(std::uint64_t point_index,
                                     std::uint64_t sample_index) const {
  ChannelSample s;
  s.h11 = gaussian(cfg_.n1(), cfg_.m1(), point_index, sample_index, 0);
  s.h12 = gaussian(cfg_.n1(), cfg_.m2(), point_index, sample_index, 1);
  s.h22 = gaussian(cfg_.n2(), cfg_.m2(), point_index, sample_index, 2);
  return s;
}

double logdet_bits(const Eigen::MatrixXcd& h1, const Eigen::MatrixXcd& h2, double a1, double a2,
                   double log2_rho) {
  const Eigen::Index u = h1.rows() > 0 ? h1.rows() : h2.rows();
  Eigen::MatrixXcd arg = Eigen::MatrixXcd::Identity(u, u);
  if (h1.cols() > 0) arg += std::exp2(a1 * log2_rho) * (h1 * h1.adjoint());
  if (h2.cols() > 0) arg += std::exp2(a2 * log2_rho) * (h2 * h2.adjoint());
  arg = 0.5 * (arg + arg.adjoint().eval());  // suppress round-off asymmetry

  const Eigen::LLT<Eigen::MatrixXcd> llt(arg);
  if (llt.info() != Eigen::Success) {
    throw NumericalFailure("logdet_bits: Cholesky failed; argument not positive definite");
  }
  double bits = 0.0;
  const auto& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < u; ++i) bits += 2.0 * std::log2(l(i, i).real());
  return bits;
}

const char* rate_term_name(RateTerm term) {
  switch (term) {
    case RateTerm::common_at_r1: return "rc_at_r1";
    case RateTerm::common_at_r2: return "rc_at_r2";
    case RateTerm::common_plus_r1: return "rc_plus_r1";
    case RateTerm::r2: return "r2";
    case RateTerm::common_plus_r2: return "rc_plus_r2";
  }
  return "?";
}

RateTerm rate_term_from_name(const std::string& name) {
  for (const RateTerm t : {RateTerm::common_at_r1, RateTerm::common_at_r2,
                           RateTerm::common_plus_r1, RateTerm::r2, RateTerm::common_plus_r2}) {
    if (name == rate_term_name(t)) return t;
  }
  throw std::invalid_argument("unknown rate term \"" + name +
                              "\" (expected rc_at_r1, rc_at_r2, rc_plus_r1, r2, rc_plus_r2)");
}

Rat rate_term_prediction(const AntennaConfig& cfg, RateTerm term, const Alpha& alpha,
                         const Rat& a2) {
  const Rat a = alpha.value();
  switch (term) {
    case RateTerm::common_at_r1:
      return a * Rat(cfg.n1_prime());
    case RateTerm::common_at_r2:
      return Rat(std::min(cfg.m2(), cfg.n2()));
    case RateTerm::common_plus_r1:
      return f_term(FTermSpec(cfg.n1(), a, cfg.m2(), Rat(1), cfg.m1()));
    case RateTerm::r2:
      return f_term(FTermSpec(cfg.m2(), Rat(1) - a2, cfg.n2(), a - a2, cfg.n1()));
    case RateTerm::common_plus_r2:
      return (a - a2).pos() * Rat(cfg.n1_prime()) + Rat(std::min(cfg.m2(), cfg.n2()));
  }
  throw std::logic_error("unreachable");
}

std::vector<double> default_ladder() { return {16, 20, 24, 28, 32, 36, 40}; }

namespace {

double term_bits(const AntennaConfig& cfg, RateTerm term, double a, double a2v,
                 const ChannelSample& s, double x) {
  const Eigen::MatrixXcd none;
  switch (term) {
    case RateTerm::common_at_r1:
      return logdet_bits(s.h12, none, a, 0.0, x);
    case RateTerm::common_at_r2:
      return logdet_bits(s.h22, none, 1.0, 0.0, x);
    case RateTerm::common_plus_r1:
      return logdet_bits(s.h12, s.h11, a, 1.0, x);
    case RateTerm::r2:
      // Equivalent M2 x M2 form of the joint (N1+N2)-dimensional observation.
      return logdet_bits(s.h22.adjoint(), s.h12.adjoint(), 1.0 - a2v, a - a2v, x);
    case RateTerm::common_plus_r2:
      // Entropy chain: interference level term plus the clean common part.
      return logdet_bits(s.h12, none, a - a2v, 0.0, x) + logdet_bits(s.h22, none, 1.0, 0.0, x);
  }
  throw std::logic_error("unreachable");
}

std::pair<double, double> ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  if (n <= 2) return {slope, 0.0};
  const double intercept = my - slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = y[i] - (intercept + slope * x[i]);
    ss_res += resid * resid;
  }
  const double se = std::sqrt(ss_res / static_cast<double>(n - 2) / sxx);
  return {slope, se};
}

SlopeEstimate fit_estimate(std::vector<double> ladder, std::vector<double> means,
                           double prediction) {
  SlopeEstimate est;
  est.snr_exponents = std::move(ladder);
  est.mean_rates = std::move(means);
  est.prediction = prediction;
  const std::size_t fit_count = (est.snr_exponents.size() + 1) / 2;  // top half
  const auto [slope, se] = fit_tail_slope(est.snr_exponents, est.mean_rates, fit_count);
  est.slope = slope;
  est.stderr_slope = se;
  return est;
}

}  // namespace

std::pair<double, double> fit_tail_slope(const std::vector<double>& x,
                                         const std::vector<double>& y, std::size_t count) {
  if (count < 2 || count > x.size() || x.size() != y.size()) {
    throw std::invalid_argument("fit_tail_slope: bad tail length");
  }
  const std::vector<double> tx(x.end() - static_cast<std::ptrdiff_t>(count), x.end());
  const std::vector<double> ty(y.end() - static_cast<std::ptrdiff_t>(count), y.end());
  return ols_slope(tx, ty);
}

SlopeEstimate estimate_slope(const AntennaConfig& cfg, RateTerm term, const Alpha& alpha,
                             const Rat& a2, const std::vector<double>& ladder,
                             int samples_per_point, std::uint64_t seed) {
  check_ladder(ladder);
  if (samples_per_point < 50) {
    throw std::invalid_argument("estimate_slope: need at least 50 samples per point");
  }
  const ChannelSampler sampler(cfg, seed);
  const double a = alpha.value().to_double();
  const double a2v = a2.to_double();
  std::vector<double> means(ladder.size(), 0.0);
  for (std::size_t p = 0; p < ladder.size(); ++p) {
    double acc = 0.0;
    for (int k = 0; k < samples_per_point; ++k) {  // fixed order: reproducible
      const ChannelSample s = sampler.sample(p, static_cast<std::uint64_t>(k));
      acc += term_bits(cfg, term, a, a2v, s, ladder[p]);
    }
    means[p] = acc / samples_per_point;
  }
  return fit_estimate(ladder, std::move(means),
                      rate_term_prediction(cfg, term, alpha, a2).to_double());
}

SlopeEstimate estimate_fterm_slope(const FTermSpec& spec, const std::vector<double>& ladder,
                                   int samples_per_point, std::uint64_t seed) {
  check_ladder(ladder);
  if (samples_per_point < 50) {
    throw std::invalid_argument("estimate_fterm_slope: need at least 50 samples per point");
  }
  // Dummy tuple: the sampler only needs dimensions via gaussian().
  const ChannelSampler sampler(AntennaConfig(1, 1, 1, 1), seed);
  const double a1 = spec.a1.to_double();
  const double a2 = spec.a2.to_double();
  std::vector<double> means(ladder.size(), 0.0);
  for (std::size_t p = 0; p < ladder.size(); ++p) {
    double acc = 0.0;
    for (int k = 0; k < samples_per_point; ++k) {
      const Eigen::MatrixXcd h1 =
          sampler.gaussian(spec.u, spec.u1, p, static_cast<std::uint64_t>(k), 0);
      const Eigen::MatrixXcd h2 =
          sampler.gaussian(spec.u, spec.u2, p, static_cast<std::uint64_t>(k), 1);
      acc += logdet_bits(h1, h2, a1, a2, ladder[p]);
    }
    means[p] = acc / samples_per_point;
  }
  return fit_estimate(ladder, std::move(means), f_term(spec).to_double());
}

}  // namespace zgdof
