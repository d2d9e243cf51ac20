// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors
//
// Command line front end: region computation, sum-GDoF sweeps, comparisons,
// corner points, verification sweeps, the rank oracle, Monte Carlo slope
// validation and SVG figures.
//
// Exit codes: 0 success, 1 usage or domain error, 2 verification failure.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "zgdof/achievability.hpp"
#include "zgdof/errors.hpp"
#include "zgdof/montecarlo.hpp"
#include "zgdof/rank_oracle.hpp"
#include "zgdof/regions.hpp"
#include "zgdof/serialize.hpp"
#include "zgdof/svg.hpp"

namespace {

using nlohmann::json;
using namespace zgdof;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("ZGDOF_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void write_artifact(const std::optional<std::string>& path, const std::string& content) {
  if (!path) {
    std::fputs(content.c_str(), stdout);
    return;
  }
  const std::filesystem::path resolved = resolve_output(*path);
  if (resolved.has_parent_path()) std::filesystem::create_directories(resolved.parent_path());
  std::ofstream out(resolved, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + resolved.string());
  out << content;
}

Region2D region_for_csit(const std::string& csit, const AntennaConfig& cfg,
                         const Alpha& alpha) {
  if (csit == "delayed") return delayed_region(cfg, alpha);
  if (csit == "perfect") return perfect_csit_region(cfg, alpha);
  if (csit == "dof") return dof_region_delayed(cfg);
  throw std::invalid_argument("--csit must be delayed, perfect or dof, got \"" + csit + "\"");
}

json corner_set_json(const AntennaConfig& cfg, const Alpha& alpha) {
  const CornerPointSet set = corner_points(cfg, alpha);
  json j;
  j["config"] = {{"m1", cfg.m1()}, {"m2", cfg.m2()}, {"n1", cfg.n1()}, {"n2", cfg.n2()}};
  j["alpha"] = alpha.value().wire_str();
  j["case"] = set.case_id == CaseId::one ? "I" : "II";
  j["corners"] = json::array();
  for (const auto& alloc : set.points) {
    j["corners"].push_back({{"d1", alloc.point.d1.wire_str()},
                            {"d2", alloc.point.d2.wire_str()},
                            {"a2", alloc.power.a2.wire_str()},
                            {"d_eta", alloc.power.d_eta.wire_str()},
                            {"regime", alloc.power.regime == Regime::weak ? "weak" : "strong"}});
  }
  return j;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(',', start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<double> parse_ladder(const std::string& text) {
  std::vector<double> ladder;
  for (const auto& part : split_list(text)) ladder.push_back(Rat::parse(part).to_double());
  return ladder;
}

// ---------------------------------------------------------------- commands

int cmd_region(const std::string& config, const std::string& alpha_text,
               const std::string& csit, const std::string& format,
               const std::optional<std::string>& output) {
  const AntennaConfig cfg = parse_config(config);
  const Alpha alpha(Rat::parse(alpha_text));
  const Region2D region = region_for_csit(csit, cfg, alpha);
  if (format == "json") {
    write_artifact(output, region_to_json(RegionDocument{cfg, alpha, region}));
  } else if (format == "csv") {
    write_artifact(output, vertices_to_csv(region));
  } else if (format == "svg") {
    write_artifact(output, regions_to_svg({{csit, region}}));
  } else {
    throw std::invalid_argument("--format must be json, csv or svg, got \"" + format + "\"");
  }
  return kExitOk;
}

int cmd_sum(const std::string& config, const std::string& grid_text, const std::string& csit,
            const std::string& format, const std::optional<std::string>& output) {
  const AntennaConfig cfg = parse_config(config);
  const std::vector<Alpha> grid = parse_alpha_grid(grid_text);
  const std::vector<std::string> kinds = split_list(csit);
  for (const auto& kind : kinds) {
    if (kind != "delayed" && kind != "perfect") {
      throw std::invalid_argument("--csit entries must be delayed or perfect, got \"" + kind +
                                  "\"");
    }
  }
  const auto value = [&](const std::string& kind, const Alpha& alpha) {
    return kind == "delayed" ? sum_gdof(cfg, alpha) : perfect_sum_gdof(cfg, alpha);
  };

  if (format == "json") {
    json j;
    j["config"] = {{"m1", cfg.m1()}, {"m2", cfg.m2()}, {"n1", cfg.n1()}, {"n2", cfg.n2()}};
    j["alphas"] = json::array();
    for (const auto& alpha : grid) j["alphas"].push_back(alpha.value().wire_str());
    j["series"] = json::object();
    for (const auto& kind : kinds) {
      json values = json::array();
      for (const auto& alpha : grid) values.push_back(value(kind, alpha).wire_str());
      j["series"][kind] = values;
    }
    write_artifact(output, j.dump(2) + "\n");
  } else if (format == "csv") {
    std::string csv = "alpha";
    for (const auto& kind : kinds) csv += "," + kind;
    csv += "\n";
    char buf[40];
    for (const auto& alpha : grid) {
      std::snprintf(buf, sizeof(buf), "%.12g", alpha.value().to_double());
      csv += buf;
      for (const auto& kind : kinds) {
        std::snprintf(buf, sizeof(buf), ",%.12g", value(kind, alpha).to_double());
        csv += buf;
      }
      csv += "\n";
    }
    write_artifact(output, csv);
  } else {
    throw std::invalid_argument("--format must be json or csv for sum, got \"" + format +
                                "\"");
  }
  return kExitOk;
}

int cmd_compare(const std::string& config, const std::string& alpha_text,
                const std::optional<std::string>& svg_path,
                const std::optional<std::string>& output) {
  const AntennaConfig cfg = parse_config(config);
  const Alpha alpha(Rat::parse(alpha_text));
  const Region2D delayed = delayed_region(cfg, alpha);
  const Region2D perfect = perfect_csit_region(cfg, alpha);
  const Region2D dof = dof_region_delayed(cfg);

  if (svg_path) {
    write_artifact(svg_path, regions_to_svg({{"delayed", delayed},
                                             {"perfect", perfect},
                                             {"dof", dof}}));
  }
  json j;
  j["config"] = {{"m1", cfg.m1()}, {"m2", cfg.m2()}, {"n1", cfg.n1()}, {"n2", cfg.n2()}};
  j["alpha"] = alpha.value().wire_str();
  j["delayed_subset_perfect"] = subset(delayed, perfect);
  j["delayed_equals_perfect"] = equals(delayed, perfect);
  j["dof_subset_delayed"] = subset(dof, delayed);
  j["dof_equals_delayed"] = equals(dof, delayed);
  write_artifact(output, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_corners(const std::string& config, const std::string& alpha_text,
                const std::optional<std::string>& output) {
  const AntennaConfig cfg = parse_config(config);
  const Alpha alpha(Rat::parse(alpha_text));
  write_artifact(output, corner_set_json(cfg, alpha).dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(int max_antennas, const std::string& grid_text,
               const std::optional<std::string>& output) {
  const std::vector<Alpha> grid = parse_alpha_grid(grid_text);
  std::string lines;
  long checked = 0, failed = 0;
  for (const auto& cfg : enumerate_configs(max_antennas, /*canonical_only=*/true)) {
    for (const auto& alpha : grid) {
      const std::string line = verify_record_json(cfg, alpha);
      lines += line + "\n";
      ++checked;
      if (json::parse(line)["pass"] != true) ++failed;
    }
  }
  write_artifact(output, lines);
  std::fprintf(stderr, "verify: %ld checked, %ld failed\n", checked, failed);
  return failed == 0 ? kExitOk : kExitVerification;
}

int cmd_oracle_rank(int max_antennas, const std::string& grid_text, int m2_max,
                    const std::optional<std::string>& output) {
  const std::vector<Alpha> grid = parse_alpha_grid(grid_text);
  json failures = json::array();
  long checked = 0, ties = 0;
  for (const auto& cfg : enumerate_configs(max_antennas, /*canonical_only=*/false, m2_max)) {
    for (const auto& alpha : grid) {
      const RankSweep sweep = argmax_weighted_bound(cfg, alpha);
      ++checked;
      ties += sweep.ties;
      if (sweep.r_star != 0) {
        failures.push_back({{"config", cfg.str()},
                            {"alpha", alpha.value().wire_str()},
                            {"r_star", sweep.r_star}});
      }
    }
  }
  json j;
  j["checked"] = checked;
  j["ties"] = ties;
  j["failures"] = failures;
  write_artifact(output, j.dump(2) + "\n");
  return failures.empty() ? kExitOk : kExitVerification;
}

int cmd_validate(const std::string& config, const std::string& alpha_text,
                 const std::string& a2_text, const std::string& term_name,
                 std::uint64_t seed, const std::string& ladder_text, int samples,
                 const std::optional<std::string>& output,
                 const std::optional<std::string>& csv_path) {
  const AntennaConfig cfg = parse_config(config);
  const Alpha alpha(Rat::parse(alpha_text));
  const Rat a2 = Rat::parse(a2_text);
  const RateTerm term = rate_term_from_name(term_name);
  const std::vector<double> ladder =
      ladder_text.empty() ? default_ladder() : parse_ladder(ladder_text);

  const SlopeEstimate est = estimate_slope(cfg, term, alpha, a2, ladder, samples, seed);

  json j;
  j["config"] = {{"m1", cfg.m1()}, {"m2", cfg.m2()}, {"n1", cfg.n1()}, {"n2", cfg.n2()}};
  j["alpha"] = alpha.value().wire_str();
  j["a2"] = a2.wire_str();
  j["term"] = rate_term_name(term);
  j["prediction"] = est.prediction;
  j["slope"] = est.slope;
  j["stderr"] = est.stderr_slope;
  j["ladder"] = est.snr_exponents;
  j["means"] = est.mean_rates;
  j["samples"] = samples;
  j["seed"] = seed;
  write_artifact(output, j.dump(2) + "\n");
  if (csv_path) write_artifact(csv_path, slope_to_csv(est));
  return kExitOk;
}

int cmd_plot(const std::string& config, const std::string& alphas_text,
             const std::string& csit, const std::string& output) {
  const AntennaConfig cfg = parse_config(config);
  const std::vector<Alpha> alphas = parse_alpha_grid(alphas_text);
  std::vector<SvgSeries> series;
  for (const auto& kind : split_list(csit)) {
    for (const auto& alpha : alphas) {
      std::string label = kind;
      if (kind != "dof") label += " a=" + alpha.value().str();
      series.push_back({label, region_for_csit(kind, cfg, alpha)});
      if (kind == "dof") break;  // the DoF region does not depend on alpha
    }
  }
  write_artifact(output, regions_to_svg(series));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GDoF regions of the MIMO Z-interference channel with delayed CSIT"};
  app.require_subcommand(1);

  std::string config, alpha_text = "1", csit = "delayed", format = "json";
  std::string grid_text, a2_text = "0", term_name, ladder_text;
  std::optional<std::string> output, svg_path, csv_path;
  std::string plot_output;
  int max_antennas = 4, m2_max = 0, samples = 200;
  std::uint64_t seed = 1;

  auto* region = app.add_subcommand("region", "Compute one GDoF region");
  region->add_option("--config", config, "antenna tuple M1,M2,N1,N2")->required();
  region->add_option("--alpha", alpha_text, "interference exponent (rational)");
  region->add_option("--csit", csit, "delayed | perfect | dof");
  region->add_option("--format", format, "json | csv | svg");
  region->add_option("--output", output, "output path (default: stdout)");

  auto* sum = app.add_subcommand("sum", "Sum-GDoF sweep over an alpha grid");
  sum->add_option("--config", config)->required();
  sum->add_option("--alpha-grid", grid_text, "start:end:step or comma list")->required();
  sum->add_option("--csit", csit, "comma list of delayed,perfect");
  sum->add_option("--format", format, "json | csv");
  sum->add_option("--output", output);

  auto* compare = app.add_subcommand("compare", "Overlay delayed/perfect/DoF and judge");
  compare->add_option("--config", config)->required();
  compare->add_option("--alpha", alpha_text);
  compare->add_option("--svg", svg_path, "write the overlay SVG here");
  compare->add_option("--output", output, "verdict JSON (default: stdout)");

  auto* corners = app.add_subcommand("corners", "Corner points with power allocations");
  corners->add_option("--config", config)->required();
  corners->add_option("--alpha", alpha_text);
  corners->add_option("--output", output);

  auto* verify = app.add_subcommand("verify", "Sweep: inner hull equals outer bound");
  verify->add_option("--max-antennas", max_antennas, "canonical tuples up to this size");
  verify->add_option("--alpha-grid", grid_text)->required();
  verify->add_option("--output", output, "JSONL report (default: stdout)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  auto* oracle_rank = oracle->add_subcommand("rank", "Covariance rank sweep of the bound");
  oracle_rank->add_option("--max-antennas", max_antennas);
  oracle_rank->add_option("--m2-max", m2_max, "M2 swept beyond max-antennas (uncapped)");
  oracle_rank->add_option("--alpha-grid", grid_text)->required();
  oracle_rank->add_option("--output", output);

  auto* validate = app.add_subcommand("validate", "Monte Carlo log-det slope check");
  validate->add_option("--config", config)->required();
  validate->add_option("--alpha", alpha_text);
  validate->add_option("--a2", a2_text, "power backoff exponent (rational)");
  validate->add_option("--term", term_name,
                       "rc_at_r1 | rc_at_r2 | rc_plus_r1 | r2 | rc_plus_r2")
      ->required();
  validate->add_option("--seed", seed);
  validate->add_option("--ladder", ladder_text, "comma list of log2(rho) values");
  validate->add_option("--samples", samples, "samples per ladder point");
  validate->add_option("--output", output, "result JSON (default: stdout)");
  validate->add_option("--csv", csv_path, "per-point means CSV");

  auto* plot = app.add_subcommand("plot", "Draw regions into an SVG");
  plot->add_option("--config", config)->required();
  plot->add_option("--alphas", grid_text, "comma list of alphas")->required();
  plot->add_option("--csit", csit, "comma list of delayed,perfect,dof");
  plot->add_option("--output", plot_output, "SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (region->parsed()) return cmd_region(config, alpha_text, csit, format, output);
    if (sum->parsed()) return cmd_sum(config, grid_text, csit, format, output);
    if (compare->parsed()) return cmd_compare(config, alpha_text, svg_path, output);
    if (corners->parsed()) return cmd_corners(config, alpha_text, output);
    if (verify->parsed()) return cmd_verify(max_antennas, grid_text, output);
    if (oracle->parsed()) {
      if (!oracle_rank->parsed()) {
        std::fprintf(stderr, "oracle: expected subcommand \"rank\"\n");
        return kExitUsage;
      }
      return cmd_oracle_rank(max_antennas, grid_text, m2_max, output);
    }
    if (validate->parsed()) {
      return cmd_validate(config, alpha_text, a2_text, term_name, seed, ladder_text, samples,
                          output, csv_path);
    }
    if (plot->parsed()) return cmd_plot(config, grid_text, csit, plot_output);
  } catch (const VerificationFailure& e) {
    const json record = {{"error", "verification failure"}, {"detail", e.what()}};
    std::fprintf(stderr, "%s\n", record.dump().c_str());
    return kExitVerification;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
