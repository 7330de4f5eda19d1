// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#include "spudgrade/core.hpp"

namespace spud {

const char* to_string(Errc code) {
  switch (code) {
  case Errc::no_roi: return "no_roi";
  case Errc::bad_magic: return "bad_magic";
  case Errc::unsupported_maxval: return "unsupported_maxval";
  case Errc::truncated: return "truncated";
  case Errc::malformed: return "malformed";
  case Errc::unknown_format: return "unknown_format";
  case Errc::length_mismatch: return "length_mismatch";
  case Errc::invalid_spec: return "invalid_spec";
  case Errc::invalid_config: return "invalid_config";
  case Errc::invalid_argument: return "invalid_argument";
  case Errc::io_failure: return "io_failure";
  }
  return "unknown";
}

const char* to_string(Grade grade) {
  switch (grade) {
  case Grade::not_damaged: return "not_damaged";
  case Grade::damaged: return "damaged";
  case Grade::seriously_damaged: return "seriously_damaged";
  }
  return "unknown";
}

const char* to_string(Backend backend) {
  switch (backend) {
  case Backend::frame: return "frame";
  case Backend::stream: return "stream";
  }
  return "unknown";
}

bool thresholds_in_range(const Thresholds& t) {
  return t.t_blue >= 0 && t.t_blue <= 256 && t.t_diff >= -255 &&
         t.t_diff <= 256;
}

Grade classify_grade(std::uint64_t green, std::uint64_t roi) {
  if (roi == 0) {
    fail(Errc::no_roi, "empty ROI: green percentage is undefined");
  }
  if (green > roi) {
    fail(Errc::invalid_argument, "green count exceeds ROI count");
  }
  if (2 * green > roi) {
    return Grade::seriously_damaged;
  }
  if (4 * green > roi) {
    return Grade::damaged;
  }
  return Grade::not_damaged;
}

int percentage_centi(std::uint64_t green, std::uint64_t roi) {
  if (roi == 0) {
    fail(Errc::no_roi, "empty ROI: green percentage is undefined");
  }
  if (green > roi) {
    fail(Errc::invalid_argument, "green count exceeds ROI count");
  }
  return static_cast<int>((10000 * green + roi / 2) / roi);
}

} // namespace spud
