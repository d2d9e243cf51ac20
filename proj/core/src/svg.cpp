// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include "zgdof/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace zgdof {

namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 56, kRight = 20, kTop = 20, kBottom = 48;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
const char* kDashes[] = {"", "7 4", "3 3", "9 2 2 2", "5 2 1 2", "1 3"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string regions_to_svg(const std::vector<SvgSeries>& series) {
  if (series.empty()) throw std::invalid_argument("regions_to_svg: no series");

  double max_d1 = 0, max_d2 = 0;
  for (const auto& s : series) {
    for (const auto& v : s.region.vertices()) {
      max_d1 = std::max(max_d1, v.d1.to_double());
      max_d2 = std::max(max_d2, v.d2.to_double());
    }
  }
  const double x_max = std::ceil(std::max(1.0, max_d1) + 0.25);
  const double y_max = std::ceil(std::max(1.0, max_d2) + 0.25);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double d1) { return kLeft + d1 / x_max * plot_w; };
  const auto py = [&](double d2) { return kTop + plot_h - d2 / y_max * plot_h; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Grid and ticks at integer GDoF values.
  for (int t = 0; t <= static_cast<int>(x_max); ++t) {
    const std::string x = num(px(t));
    out += "<line x1=\"" + x + "\" y1=\"" + num(py(0)) + "\" x2=\"" + x + "\" y2=\"" +
           num(py(y_max)) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + x + "\" y=\"" + num(py(0) + 18) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
           std::to_string(t) + "</text>\n";
  }
  for (int t = 0; t <= static_cast<int>(y_max); ++t) {
    const std::string y = num(py(t));
    out += "<line x1=\"" + num(px(0)) + "\" y1=\"" + y + "\" x2=\"" + num(px(x_max)) +
           "\" y2=\"" + y + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num(px(0) - 8) + "\" y=\"" + num(py(t) + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" +
           std::to_string(t) + "</text>\n";
  }
  // Axes and labels.
  out += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(px(x_max)) +
         "\" y2=\"" + num(py(0)) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  out += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(px(0)) +
         "\" y2=\"" + num(py(y_max)) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  out += "<text x=\"" + num(px(x_max / 2)) + "\" y=\"" + num(kHeight - 8) +
         "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">d&#8321;"
         "</text>\n";
  out += "<text x=\"16\" y=\"" + num(py(y_max / 2)) +
         "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 16 " +
         num(py(y_max / 2)) + ")\">d&#8322;</text>\n";

  // Regions: first series solid and filled, comparison series dashed.
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % (sizeof(kColors) / sizeof(kColors[0]))];
    const char* dash = kDashes[i % (sizeof(kDashes) / sizeof(kDashes[0]))];
    std::string pts;
    for (const auto& v : series[i].region.vertices()) {
      pts += num(px(v.d1.to_double())) + "," + num(py(v.d2.to_double())) + " ";
    }
    if (!pts.empty()) pts.pop_back();
    out += "<polygon points=\"" + pts + "\" fill=\"" +
           (i == 0 ? std::string(color) : std::string("none")) +
           (i == 0 ? "\" fill-opacity=\"0.10" : "") + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"";
    if (dash[0] != '\0') out += " stroke-dasharray=\"" + std::string(dash) + "\"";
    out += "/>\n";
  }

  // Legend, top right.
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % (sizeof(kColors) / sizeof(kColors[0]))];
    const char* dash = kDashes[i % (sizeof(kDashes) / sizeof(kDashes[0]))];
    const double y = kTop + 16 + 18 * static_cast<double>(i);
    out += "<line x1=\"" + num(kWidth - 180) + "\" y1=\"" + num(y - 4) + "\" x2=\"" +
           num(kWidth - 150) + "\" y2=\"" + num(y - 4) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"";
    if (dash[0] != '\0') out += " stroke-dasharray=\"" + std::string(dash) + "\"";
    out += "/>\n";
    out += "<text x=\"" + num(kWidth - 144) + "\" y=\"" + num(y) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + series[i].label + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace zgdof
