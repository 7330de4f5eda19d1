// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spud {

/// Error categories surfaced by the toolkit. The CLI maps these onto its
/// exit-code contract: no_roi means "image cannot be graded" (exit 1),
/// everything else is an operational failure (exit 2).
enum class Errc {
  no_roi,             // ROI is empty, percentage undefined
  bad_magic,          // not a P6 PPM
  unsupported_maxval, // PPM maxval other than 255
  truncated,          // raster shorter than 3*w*h
  malformed,          // unparseable header fields
  unknown_format,     // unsupported file extension
  length_mismatch,    // stream length != width*height
  invalid_spec,       // synthetic generator spec violates its invariants
  invalid_config,     // HDL emitter config out of range
  invalid_argument,   // bad operation argument (e.g. bench iterations < 3)
  io_failure,         // file open/read/write failed
};

const char* to_string(Errc code);

/// Single exception type carrying a typed code; what() carries detail.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

/// One 8-bit-per-channel color sample.
struct RgbPixel {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const RgbPixel&, const RgbPixel&) = default;
};

/// Row-major raster (x fastest, top row first).
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<RgbPixel> pixels; // size == width * height

  Frame() = default;
  Frame(int w, int h, RgbPixel fill = RgbPixel{})
      : width(w), height(h),
        pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h),
               fill) {}

  std::size_t size() const { return pixels.size(); }

  RgbPixel& at(int x, int y) {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  const RgbPixel& at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// The two comparator constants of the datapath plus the overlay marker.
/// A pixel is in the ROI iff b < t_blue; an ROI pixel is green iff the
/// signed difference r - g < t_diff. Both comparisons are strict.
struct Thresholds {
  int t_blue = 200;                  // valid range [0, 256]
  int t_diff = 20;                   // valid range [-255, 256]
  RgbPixel marker{0, 255, 0};        // paint color for detected green pixels

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

bool thresholds_in_range(const Thresholds& t);

/// USDA aggregate-surface classes. Damaged when green covers more than 25%
/// of the ROI, seriously damaged when more than 50% (strict comparisons;
/// the serious class wins when both hold).
enum class Grade {
  not_damaged,
  damaged,
  seriously_damaged,
};

const char* to_string(Grade grade);

/// Which implementation produced a report.
enum class Backend {
  frame,  // frame-at-once reference implementation
  stream, // pixel-serial hardware model
};

const char* to_string(Backend backend);

/// Result of grading one image.
struct GradeReport {
  std::uint64_t roi_pixels = 0;
  std::uint64_t green_pixels = 0;
  int percent_centi = 0; // hundredths of a percent, [0, 10000]
  Grade grade = Grade::not_damaged;
  Backend backend = Backend::frame;
  Thresholds thresholds; // echo of the parameters used

  friend bool operator==(const GradeReport&, const GradeReport&) = default;
};

/// Classifies a green/ROI pixel-count pair against the USDA limits using
/// cross-multiplication only: seriously damaged iff 2*green > roi, else
/// damaged iff 4*green > roi. Exact at the 25%/50% boundaries, no division.
/// Throws Errc::no_roi when roi == 0.
Grade classify_grade(std::uint64_t green, std::uint64_t roi);

/// Green fraction in integer hundredths of a percent, rounded half up:
/// (10000*green + roi/2) / roi in exact integer arithmetic.
/// Throws Errc::no_roi when roi == 0.
int percentage_centi(std::uint64_t green, std::uint64_t roi);

} // namespace spud
