// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#include "spudgrade/frame_ref.hpp"

#include <algorithm>
#include <numeric>

namespace spud::frame_ref {

std::uint64_t BitMask::count() const {
  return std::accumulate(bits.begin(), bits.end(), std::uint64_t{0});
}

const char* to_string(CaptureWarning::Kind kind) {
  switch (kind) {
  case CaptureWarning::Kind::background_not_white:
    return "background_not_white";
  case CaptureWarning::Kind::suspected_shadow:
    return "suspected_shadow";
  }
  return "unknown";
}

BitMask roi_mask(const Frame& frame, int t_blue) {
  BitMask mask(frame.width, frame.height);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    mask.bits[i] = frame.pixels[i].b < t_blue ? 1 : 0;
  }
  return mask;
}

BitMask green_mask(const Frame& frame, const BitMask& roi, int t_diff) {
  BitMask mask(frame.width, frame.height);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const int diff =
        static_cast<int>(frame.pixels[i].r) - static_cast<int>(frame.pixels[i].g);
    mask.bits[i] = (roi.bits[i] != 0 && diff < t_diff) ? 1 : 0;
  }
  return mask;
}

FrameAnalysis analyze_frame(const Frame& frame, const Thresholds& thresholds) {
  FrameAnalysis out;
  out.roi = roi_mask(frame, thresholds.t_blue);
  out.green = green_mask(frame, out.roi, thresholds.t_diff);

  const std::uint64_t roi_pixels = out.roi.count();
  const std::uint64_t green_pixels = out.green.count();
  if (roi_pixels == 0) {
    fail(Errc::no_roi, "no pixels below the blue threshold: nothing to grade");
  }

  out.report.roi_pixels = roi_pixels;
  out.report.green_pixels = green_pixels;
  out.report.percent_centi = percentage_centi(green_pixels, roi_pixels);
  out.report.grade = classify_grade(green_pixels, roi_pixels);
  out.report.backend = Backend::frame;
  out.report.thresholds = thresholds;
  return out;
}

Frame render_overlay(const Frame& frame, const BitMask& green,
                     RgbPixel marker) {
  Frame out = frame;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (green.bits[i] != 0) {
      out.pixels[i] = marker;
    }
  }
  return out;
}

std::vector<CaptureWarning> validate_capture(const Frame& frame,
                                             const Thresholds& thresholds) {
  std::uint64_t ring = 0;
  std::uint64_t ring_in_roi = 0;
  for (int y = 0; y < frame.height; ++y) {
    for (int x = 0; x < frame.width; ++x) {
      const bool on_ring = x == 0 || y == 0 || x == frame.width - 1 ||
                           y == frame.height - 1;
      if (!on_ring) {
        continue;
      }
      ++ring;
      if (frame.at(x, y).b < thresholds.t_blue) {
        ++ring_in_roi;
      }
    }
  }

  std::vector<CaptureWarning> warnings;
  if (ring == 0) {
    return warnings;
  }
  const double fraction =
      static_cast<double>(ring_in_roi) / static_cast<double>(ring);
  if (fraction > 0.05) {
    // The pixel data cannot distinguish a colored backdrop from a shadow
    // that reaches the edge; report both candidate causes.
    warnings.push_back(
        {CaptureWarning::Kind::background_not_white, fraction});
    warnings.push_back({CaptureWarning::Kind::suspected_shadow, fraction});
  }
  return warnings;
}

} // namespace spud::frame_ref
