// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "spudgrade/core.hpp"

namespace spud::frame_ref {

/// Per-pixel boolean raster with the dimensions of its source frame.
struct BitMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits; // 0 or 1, row-major

  BitMask() = default;
  BitMask(int w, int h)
      : width(w), height(h),
        bits(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {}

  bool test(int x, int y) const {
    return bits[static_cast<std::size_t>(y) * width + x] != 0;
  }
  void set(int x, int y, bool value) {
    bits[static_cast<std::size_t>(y) * width + x] = value ? 1 : 0;
  }
  std::uint64_t count() const;

  friend bool operator==(const BitMask&, const BitMask&) = default;
};

/// Capture-quality advisories. Informational only; grading is unaffected.
struct CaptureWarning {
  enum class Kind {
    background_not_white,
    suspected_shadow,
  };
  Kind kind;
  double border_roi_fraction; // fraction of border-ring pixels inside the ROI

  friend bool operator==(const CaptureWarning&, const CaptureWarning&) =
      default;
};

const char* to_string(CaptureWarning::Kind kind);

/// Everything analyze_frame produces: the report plus both masks for
/// inspection and overlay rendering.
struct FrameAnalysis {
  GradeReport report;
  BitMask roi;
  BitMask green;
};

/// ROI mask: bit set at (x, y) iff pixel.b < t_blue.
BitMask roi_mask(const Frame& frame, int t_blue);

/// Green mask: bit set iff the ROI bit is set and signed r - g < t_diff.
BitMask green_mask(const Frame& frame, const BitMask& roi, int t_diff);

/// Frame-at-once reference analysis: materializes both masks, counts them,
/// and grades via core. Throws no_roi when the ROI is empty.
FrameAnalysis analyze_frame(const Frame& frame, const Thresholds& thresholds);

/// Copy of frame with marker painted wherever the green bit is set.
Frame render_overlay(const Frame& frame, const BitMask& green,
                     RgbPixel marker);

/// Scans the 1-pixel border ring; if more than 5% of it falls inside the
/// ROI the background is suspect (not white, or a shadow reaches the edge).
/// Both explanations are reported with the measured fraction.
std::vector<CaptureWarning> validate_capture(const Frame& frame,
                                             const Thresholds& thresholds);

} // namespace spud::frame_ref
