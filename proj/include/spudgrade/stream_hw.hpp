// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "spudgrade/core.hpp"

namespace spud::stream_hw {

/// Pixels in emission order: row-major, top row first, left to right.
struct PixelStream {
  int width = 0;
  int height = 0;
  std::vector<RgbPixel> pixels;

  friend bool operator==(const PixelStream&, const PixelStream&) = default;
};

/// Registers of the pixel-serial datapath. Counter widths are modeled
/// with 64-bit integers; required_counter_bits() reports the hardware
/// width needed for a given frame size.
struct PipelineState {
  std::uint64_t roi_counter = 0;
  std::uint64_t green_counter = 0;
  std::uint64_t pixels_seen = 0;
};

/// Smallest counter width that can hold width*height (ceil(log2(w*h + 1))).
int required_counter_bits(int width, int height);

/// Cycle accounting for one frame pass.
struct CycleStats {
  std::uint64_t cycles = 0;     // width*height + latency
  int latency = 0;              // modeled register stages
  double clock_period_ns = 0.0; // per-cycle period
  double estimated_time_ns = 0.0;
};

/// Clock used to convert cycles into time. The default period is the
/// minimum period reported by a Spartan-3E synthesis of this datapath.
struct ClockConfig {
  double period_ns = 10.169;
};

/// Register stages modeled between pixel input and overlay output:
/// compare, count, output.
inline constexpr int kPipelineLatency = 3;

/// Row-major serialization of a frame (top row first, x fastest).
PixelStream serialize(const Frame& frame);

/// Inverse of serialize. Throws length_mismatch when the pixel count
/// disagrees with the stated dimensions.
Frame deserialize(const PixelStream& stream);

/// What one clocked step produces besides the state update.
struct StepOutput {
  RgbPixel overlay_pixel;
  bool is_green = false;
};

/// One pixel through the datapath: one unsigned comparator (b < t_blue),
/// one signed 9-bit subtract plus comparator (r - g < t_diff), counter
/// increments, and the overlay mux. No division, multiplication, or
/// floating point.
StepOutput step(PipelineState& state, RgbPixel pixel,
                const Thresholds& thresholds);

/// Full result of one streaming pass.
struct StreamResult {
  GradeReport report;
  Frame overlay;
  CycleStats stats;
};

/// Folds step over the stream once, then computes the grade division-free
/// (2*green > roi, 4*green > roi) and the percentage in a single frame-end
/// stage. Throws no_roi when the ROI counter is zero; throws
/// length_mismatch on an inconsistent stream.
StreamResult run_stream(const PixelStream& stream, const Thresholds& thresholds,
                        const ClockConfig& clock,
                        int latency = kPipelineLatency);

/// cycles * period_ns.
double estimate_hw_time(std::uint64_t cycles, const ClockConfig& clock);

} // namespace spud::stream_hw
