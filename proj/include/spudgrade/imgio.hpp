// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "spudgrade/core.hpp"

namespace spud::imgio {

/// Parsed P6 header. Only maxval 255 rasters are accepted.
struct PpmHeader {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::size_t raster_offset = 0; // first raster byte in the source buffer
};

/// Parses and validates the header alone.
/// Errors: bad_magic, unsupported_maxval, malformed.
PpmHeader read_ppm_header(std::span<const std::uint8_t> bytes);

/// Parses a binary PPM (P6, maxval 255). Header tokens may be separated by
/// any whitespace and '#' comments; exactly one whitespace byte separates
/// the maxval from the raster.
/// Errors: bad_magic, unsupported_maxval, truncated, malformed.
Frame read_ppm(std::span<const std::uint8_t> bytes);

/// Canonical serialization: "P6\n<w> <h>\n255\n" + raster. read_ppm is an
/// exact inverse.
std::vector<std::uint8_t> write_ppm(const Frame& frame);

/// Loads an image by extension. ".ppm" is the supported format; anything
/// else raises unknown_format. File-open failures raise io_failure.
Frame load_image(const std::filesystem::path& path);

/// Writes frame to path in canonical PPM form. Raises io_failure.
void save_image(const std::filesystem::path& path, const Frame& frame);

} // namespace spud::imgio
