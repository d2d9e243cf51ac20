// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include "zgdof/serialize.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "zgdof/achievability.hpp"
#include "zgdof/errors.hpp"

namespace zgdof {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json config_json(const AntennaConfig& cfg) {
  return json{{"m1", cfg.m1()}, {"m2", cfg.m2()}, {"n1", cfg.n1()}, {"n2", cfg.n2()}};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string region_to_json(const RegionDocument& doc) {
  json j;
  j["config"] = config_json(doc.cfg);
  j["alpha"] = doc.alpha.value().wire_str();
  j["halfplanes"] = json::array();
  for (const auto& hp : doc.region.halfplanes()) {
    j["halfplanes"].push_back(
        {{"a1", hp.a1.wire_str()}, {"a2", hp.a2.wire_str()}, {"b", hp.b.wire_str()}});
  }
  j["vertices"] = json::array();
  for (const auto& v : doc.region.vertices()) {
    j["vertices"].push_back(json::array({v.d1.wire_str(), v.d2.wire_str()}));
  }
  return j.dump(2) + "\n";
}

RegionDocument region_from_json(const std::string& text) {
  const json j = json::parse(text);
  const auto& c = j.at("config");
  AntennaConfig cfg(c.at("m1").get<int>(), c.at("m2").get<int>(), c.at("n1").get<int>(),
                    c.at("n2").get<int>());
  Alpha alpha(Rat::parse(j.at("alpha").get<std::string>()));

  std::vector<HalfPlane> hps;
  for (const auto& h : j.at("halfplanes")) {
    hps.emplace_back(Rat::parse(h.at("a1").get<std::string>()),
                     Rat::parse(h.at("a2").get<std::string>()),
                     Rat::parse(h.at("b").get<std::string>()));
  }
  Region2D region = Region2D::intersect(hps);

  std::vector<GdofPoint> listed;
  for (const auto& v : j.at("vertices")) {
    listed.push_back(
        {Rat::parse(v.at(0).get<std::string>()), Rat::parse(v.at(1).get<std::string>())});
  }
  if (listed != region.vertices()) {
    throw std::invalid_argument("region JSON: listed vertices do not match the half-planes");
  }
  return RegionDocument{cfg, alpha, std::move(region)};
}

std::string vertices_to_csv(const Region2D& region) {
  std::string out = "d1,d2\n";
  for (const auto& v : region.vertices()) {
    out += fmt_double(v.d1.to_double()) + "," + fmt_double(v.d2.to_double()) + "\n";
  }
  return out;
}

std::string slope_to_csv(const SlopeEstimate& estimate) {
  std::string out = "log2_rho,mean_bits\n";
  for (std::size_t i = 0; i < estimate.snr_exponents.size(); ++i) {
    out += fmt_double(estimate.snr_exponents[i]) + "," + fmt_double(estimate.mean_rates[i]) +
           "\n";
  }
  return out;
}

std::string verify_record_json(const AntennaConfig& cfg, const Alpha& alpha) {
  json j;
  j["config"] = config_json(cfg);
  j["alpha"] = alpha.value().wire_str();
  const CornerPointSet corners = corner_points(cfg, alpha);
  j["case"] = corners.case_id == CaseId::one ? "I" : "II";
  j["corners"] = json::array();
  for (const auto& alloc : corners.points) {
    j["corners"].push_back({{"d1", alloc.point.d1.wire_str()},
                            {"d2", alloc.point.d2.wire_str()},
                            {"a2", alloc.power.a2.wire_str()},
                            {"d_eta", alloc.power.d_eta.wire_str()}});
  }
  try {
    j["pass"] = verify_inner_equals_outer(cfg, alpha);
  } catch (const VerificationFailure& failure) {
    j["pass"] = false;
    j["error"] = failure.what();
  }
  return j.dump();
}

AntennaConfig parse_config(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) {
    throw std::invalid_argument("config must be \"M1,M2,N1,N2\", got \"" + text + "\"");
  }
  int v[4];
  for (int i = 0; i < 4; ++i) {
    const Rat r = Rat::parse(parts[static_cast<std::size_t>(i)]);
    if (!r.is_integer() || r.sign() <= 0) {
      throw std::invalid_argument("config entries must be positive integers");
    }
    v[i] = static_cast<int>(r.num());
  }
  return AntennaConfig(v[0], v[1], v[2], v[3]);
}

std::vector<Alpha> parse_alpha_grid(const std::string& text) {
  std::vector<Alpha> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("alpha grid must be \"start:end:step\", got \"" + text + "\"");
    }
    const Rat start = Rat::parse(parts[0]);
    const Rat end = Rat::parse(parts[1]);
    const Rat step = Rat::parse(parts[2]);
    if (step.sign() <= 0) throw std::invalid_argument("alpha grid step must be positive");
    if (start > end) throw std::invalid_argument("alpha grid start exceeds end");
    for (Rat v = start; v <= end; v += step) out.emplace_back(v);
    return out;
  }
  for (const auto& part : split(text, ',')) out.emplace_back(Rat::parse(part));
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (!(out[i].value() < out[i + 1].value())) {
      throw std::invalid_argument("alpha grid values must be strictly increasing");
    }
  }
  return out;
}

}  // namespace zgdof
