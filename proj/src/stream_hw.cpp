// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#include "spudgrade/stream_hw.hpp"

#include <bit>
#include <string>

namespace spud::stream_hw {

int required_counter_bits(int width, int height) {
  const auto pixels =
      static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
  return static_cast<int>(std::bit_width(pixels));
}

PixelStream serialize(const Frame& frame) {
  return PixelStream{frame.width, frame.height, frame.pixels};
}

Frame deserialize(const PixelStream& stream) {
  const auto expected = static_cast<std::uint64_t>(stream.width) *
                        static_cast<std::uint64_t>(stream.height);
  if (stream.pixels.size() != expected) {
    fail(Errc::length_mismatch,
         "stream holds " + std::to_string(stream.pixels.size()) +
             " pixels, dimensions require " + std::to_string(expected));
  }
  Frame frame;
  frame.width = stream.width;
  frame.height = stream.height;
  frame.pixels = stream.pixels;
  return frame;
}

StepOutput step(PipelineState& state, RgbPixel pixel,
                const Thresholds& thresholds) {
  // Comparator 1: unsigned blue cut.
  const bool in_roi = pixel.b < thresholds.t_blue;
  // Subtractor + comparator 2: signed r - g, range [-255, 255].
  const int diff = static_cast<int>(pixel.r) - static_cast<int>(pixel.g);
  const bool is_green = in_roi && diff < thresholds.t_diff;

  state.pixels_seen += 1;
  if (in_roi) {
    state.roi_counter += 1;
  }
  if (is_green) {
    state.green_counter += 1;
  }

  StepOutput out;
  out.is_green = is_green;
  out.overlay_pixel = is_green ? thresholds.marker : pixel;
  return out;
}

StreamResult run_stream(const PixelStream& stream, const Thresholds& thresholds,
                        const ClockConfig& clock, int latency) {
  const auto expected = static_cast<std::uint64_t>(stream.width) *
                        static_cast<std::uint64_t>(stream.height);
  if (stream.pixels.size() != expected) {
    fail(Errc::length_mismatch,
         "stream holds " + std::to_string(stream.pixels.size()) +
             " pixels, dimensions require " + std::to_string(expected));
  }

  PipelineState state;
  PixelStream overlay_stream{stream.width, stream.height, {}};
  overlay_stream.pixels.reserve(stream.pixels.size());
  for (const RgbPixel& pixel : stream.pixels) {
    const StepOutput out = step(state, pixel, thresholds);
    overlay_stream.pixels.push_back(out.overlay_pixel);
  }

  if (state.roi_counter == 0) {
    fail(Errc::no_roi, "no pixels below the blue threshold: nothing to grade");
  }

  // Frame-end stage: division-free grade, one exact division for display.
  StreamResult result;
  result.report.roi_pixels = state.roi_counter;
  result.report.green_pixels = state.green_counter;
  result.report.grade = classify_grade(state.green_counter, state.roi_counter);
  result.report.percent_centi =
      percentage_centi(state.green_counter, state.roi_counter);
  result.report.backend = Backend::stream;
  result.report.thresholds = thresholds;

  result.overlay = deserialize(overlay_stream);

  result.stats.cycles = state.pixels_seen + static_cast<std::uint64_t>(latency);
  result.stats.latency = latency;
  result.stats.clock_period_ns = clock.period_ns;
  result.stats.estimated_time_ns = estimate_hw_time(result.stats.cycles, clock);
  return result;
}

double estimate_hw_time(std::uint64_t cycles, const ClockConfig& clock) {
  return static_cast<double>(cycles) * clock.period_ns;
}

} // namespace spud::stream_hw
