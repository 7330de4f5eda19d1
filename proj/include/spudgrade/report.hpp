// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spudgrade/bench.hpp"
#include "spudgrade/core.hpp"
#include "spudgrade/frame_ref.hpp"
#include "spudgrade/stream_hw.hpp"

namespace spud::report {

/// Stable warning rendering used in both JSON and text reports.
std::string warning_string(const frame_ref::CaptureWarning& warning);

/// Machine-readable grade report. Field set and order are part of the CLI
/// contract: width, height, roi_pixels, green_pixels, green_percent_centi,
/// grade, backend, params, warnings, then cycles and hw_time_ns for the
/// stream backend only.
nlohmann::ordered_json
grade_json(int width, int height, const GradeReport& report,
           const std::vector<frame_ref::CaptureWarning>& warnings,
           const std::optional<stream_hw::CycleStats>& stats);

/// Human-readable single-image report.
std::string grade_text(const std::string& source, int width, int height,
                       const GradeReport& report,
                       const std::vector<frame_ref::CaptureWarning>& warnings,
                       const std::optional<stream_hw::CycleStats>& stats);

/// Machine-readable bench report.
nlohmann::ordered_json bench_json(const bench::BenchReport& report);

/// "33.33" style rendering of centi-percent values.
std::string percent_string(int percent_centi);

} // namespace spud::report
