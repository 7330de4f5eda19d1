// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#include "spudgrade/report.hpp"

#include <cstdio>
#include <sstream>

namespace spud::report {

std::string percent_string(int percent_centi) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%d.%02d", percent_centi / 100,
                percent_centi % 100);
  return buf;
}

std::string warning_string(const frame_ref::CaptureWarning& warning) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s: %.2f%% of border ring inside ROI",
                frame_ref::to_string(warning.kind),
                100.0 * warning.border_roi_fraction);
  return buf;
}

nlohmann::ordered_json
grade_json(int width, int height, const GradeReport& report,
           const std::vector<frame_ref::CaptureWarning>& warnings,
           const std::optional<stream_hw::CycleStats>& stats) {
  nlohmann::ordered_json j;
  j["width"] = width;
  j["height"] = height;
  j["roi_pixels"] = report.roi_pixels;
  j["green_pixels"] = report.green_pixels;
  j["green_percent_centi"] = report.percent_centi;
  j["grade"] = to_string(report.grade);
  j["backend"] = to_string(report.backend);
  j["params"] = {{"t_blue", report.thresholds.t_blue},
                 {"t_diff", report.thresholds.t_diff}};
  auto warning_list = nlohmann::ordered_json::array();
  for (const auto& w : warnings) {
    warning_list.push_back(warning_string(w));
  }
  j["warnings"] = warning_list;
  if (stats) {
    j["cycles"] = stats->cycles;
    j["hw_time_ns"] = stats->estimated_time_ns;
  }
  return j;
}

std::string grade_text(const std::string& source, int width, int height,
                       const GradeReport& report,
                       const std::vector<frame_ref::CaptureWarning>& warnings,
                       const std::optional<stream_hw::CycleStats>& stats) {
  std::ostringstream out;
  out << "image:          " << source << "\n";
  out << "size:           " << width << "x" << height << "\n";
  out << "backend:        " << to_string(report.backend) << "\n";
  out << "params:         t_blue=" << report.thresholds.t_blue
      << " t_diff=" << report.thresholds.t_diff << "\n";
  out << "roi pixels:     " << report.roi_pixels << "\n";
  out << "green pixels:   " << report.green_pixels << "\n";
  out << "green percent:  " << percent_string(report.percent_centi) << "%\n";
  out << "grade:          " << to_string(report.grade) << "\n";
  if (stats) {
    char line[96];
    std::snprintf(line, sizeof(line), "hw estimate:    %llu cycles, %.1f ns\n",
                  static_cast<unsigned long long>(stats->cycles),
                  stats->estimated_time_ns);
    out << line;
  }
  if (warnings.empty()) {
    out << "warnings:       none\n";
  } else {
    for (const auto& w : warnings) {
      out << "warning:        " << warning_string(w) << "\n";
    }
  }
  return out.str();
}

nlohmann::ordered_json bench_json(const bench::BenchReport& r) {
  nlohmann::ordered_json j;
  j["width"] = r.width;
  j["height"] = r.height;
  j["iterations"] = r.iterations;
  j["sw_frame_ns_frame"] = r.sw_frame_ns_frame;
  j["sw_frame_ns_stream"] = r.sw_frame_ns_stream;
  j["sw_per_pixel_ns"] = r.sw_per_pixel_ns;
  j["hw_cycles"] = r.hw_cycles;
  j["hw_clock_period_ns"] = r.hw_clock_period_ns;
  j["hw_frame_ns"] = r.hw_frame_ns;
  j["speedup_ratio"] = r.speedup_ratio;
  return j;
}

} // namespace spud::report
