// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "spudgrade/core.hpp"
#include "spudgrade/stream_hw.hpp"

namespace spud::bench {

/// Reference timings for context: a published Simulink profile of the same
/// per-pixel function (39.1 us per call) against the minimum clock period
/// of its Spartan-3E synthesis. Their ratio is ~3845, usually quoted as
/// "about a thousand times faster" — the conservative rounding is theirs.
inline constexpr double kReferenceSwPerPixelNs = 39101.68587;
inline constexpr double kReferenceClockNs = 10.169;

/// Measured software timings versus the modeled hardware estimate.
struct BenchReport {
  int width = 0;
  int height = 0;
  int iterations = 0;
  double sw_frame_ns_frame = 0.0;  // frame backend, median over iterations
  double sw_frame_ns_stream = 0.0; // stream backend, median over iterations
  double sw_per_pixel_ns = 0.0;    // stream median / pixel count
  std::uint64_t hw_cycles = 0;
  double hw_clock_period_ns = 0.0;
  double hw_frame_ns = 0.0;
  double speedup_ratio = 0.0; // sw_per_pixel_ns / hw_clock_period_ns
};

/// The definitional ratio used everywhere a speedup is reported.
double speedup_ratio(double sw_per_pixel_ns, double hw_clock_period_ns);

/// Times both software backends over `iterations` runs (median), derives
/// the per-pixel time from the stream backend (the software analog of the
/// per-pixel hardware function), and fills the hardware estimate from the
/// cycle model. `per_run_hook`, when set, runs inside every timed region
/// (test instrumentation). Throws invalid_argument when iterations < 3.
BenchReport run_bench(const Frame& frame, const Thresholds& thresholds,
                      const stream_hw::ClockConfig& clock, int iterations,
                      const std::function<void()>& per_run_hook = {});

/// Two-table text rendering (software timing, hardware estimate) plus the
/// reference-figure context line.
std::string render_bench_text(const BenchReport& report);

} // namespace spud::bench
