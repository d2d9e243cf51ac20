// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include "zgdof/antenna.hpp"

#include <stdexcept>

namespace zgdof {

AntennaConfig::AntennaConfig(int m1, int m2, int n1, int n2)
    : m1_(m1), m2_(m2), n1_(n1), n2_(n2) {
  if (m1 < 1 || m2 < 1 || n1 < 1 || n2 < 1) {
    throw std::invalid_argument("AntennaConfig: antenna counts must be >= 1");
  }
}

bool AntennaConfig::is_canonical() const {
  return m1_ <= n1_ && n1_ <= m1_ + m2_ && n2_ <= m2_ && m2_ <= n1_ + n2_;
}

std::string AntennaConfig::str() const {
  return "(" + std::to_string(m1_) + "," + std::to_string(m2_) + "," + std::to_string(n1_) +
         "," + std::to_string(n2_) + ")";
}

AntennaConfig canonicalize(const AntennaConfig& cfg) {
  const int cap = cfg.n1() + cfg.n2();
  return AntennaConfig(cfg.m1(), cfg.m2() < cap ? cfg.m2() : cap, cfg.n1(), cfg.n2());
}

std::vector<AntennaConfig> enumerate_configs(int max_antennas, bool canonical_only, int m2_max) {
  if (max_antennas < 1) throw std::invalid_argument("enumerate_configs: max_antennas < 1");
  if (m2_max < max_antennas) m2_max = max_antennas;
  std::vector<AntennaConfig> out;
  for (int m1 = 1; m1 <= max_antennas; ++m1)
    for (int m2 = 1; m2 <= m2_max; ++m2)
      for (int n1 = 1; n1 <= max_antennas; ++n1)
        for (int n2 = 1; n2 <= max_antennas; ++n2) {
          AntennaConfig cfg(m1, m2, n1, n2);
          if (!canonical_only || cfg.is_canonical()) out.push_back(cfg);
        }
  return out;
}

Alpha::Alpha(Rat value) : value_(std::move(value)) {
  if (value_.sign() < 0) throw std::invalid_argument("Alpha: must be non-negative");
}

}  // namespace zgdof
