// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#include "spudgrade/imgio.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <string>

namespace spud::imgio {

namespace {

bool is_ppm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

// Advances past whitespace and '#' comment lines.
void skip_separators(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    if (is_ppm_space(bytes[pos])) {
      ++pos;
    } else if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') {
        ++pos;
      }
    } else {
      break;
    }
  }
}

// Reads one decimal header field. The PNM convention allows comments
// between fields but not inside a number.
long parse_header_int(std::span<const std::uint8_t> bytes, std::size_t& pos,
                      const char* field) {
  skip_separators(bytes, pos);
  if (pos >= bytes.size() || !std::isdigit(bytes[pos])) {
    fail(Errc::malformed,
         std::string("PPM header: expected numeric ") + field);
  }
  long value = 0;
  while (pos < bytes.size() && std::isdigit(bytes[pos])) {
    value = value * 10 + (bytes[pos] - '0');
    if (value > 1'000'000'000L) {
      fail(Errc::malformed, std::string("PPM header: ") + field + " too large");
    }
    ++pos;
  }
  return value;
}

} // namespace

PpmHeader read_ppm_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
    fail(Errc::bad_magic, "not a binary PPM (magic \"P6\" missing)");
  }
  std::size_t pos = 2;
  const long width = parse_header_int(bytes, pos, "width");
  const long height = parse_header_int(bytes, pos, "height");
  const long maxval = parse_header_int(bytes, pos, "maxval");
  if (width < 1 || height < 1) {
    fail(Errc::malformed, "PPM header: dimensions must be >= 1");
  }
  if (maxval != 255) {
    fail(Errc::unsupported_maxval,
         "PPM maxval " + std::to_string(maxval) + " unsupported (need 255)");
  }
  // Exactly one whitespace byte separates the header from the raster.
  if (pos >= bytes.size() || !is_ppm_space(bytes[pos])) {
    fail(Errc::malformed, "PPM header: missing raster separator");
  }
  ++pos;
  return PpmHeader{static_cast<int>(width), static_cast<int>(height),
                   static_cast<int>(maxval), pos};
}

Frame read_ppm(std::span<const std::uint8_t> bytes) {
  const PpmHeader header = read_ppm_header(bytes);
  const std::size_t expected = 3 * static_cast<std::size_t>(header.width) *
                               static_cast<std::size_t>(header.height);
  if (bytes.size() - header.raster_offset < expected) {
    fail(Errc::truncated,
         "PPM raster truncated: need " + std::to_string(expected) +
             " bytes, have " +
             std::to_string(bytes.size() - header.raster_offset));
  }

  Frame frame(header.width, header.height);
  const std::size_t pos = header.raster_offset;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    frame.pixels[i] = RgbPixel{bytes[pos + 3 * i], bytes[pos + 3 * i + 1],
                               bytes[pos + 3 * i + 2]};
  }
  return frame;
}

std::vector<std::uint8_t> write_ppm(const Frame& frame) {
  char header[64];
  const int n = std::snprintf(header, sizeof(header), "P6\n%d %d\n255\n",
                              frame.width, frame.height);
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n) + 3 * frame.size());
  out.insert(out.end(), header, header + n);
  for (const RgbPixel& p : frame.pixels) {
    out.push_back(p.r);
    out.push_back(p.g);
    out.push_back(p.b);
  }
  return out;
}

Frame load_image(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext != ".ppm") {
    fail(Errc::unknown_format,
         "unsupported image extension \"" + ext + "\" (expected .ppm)");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(Errc::io_failure, "cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    fail(Errc::io_failure, "read error on " + path.string());
  }
  return read_ppm(bytes);
}

void save_image(const std::filesystem::path& path, const Frame& frame) {
  const auto bytes = write_ppm(frame);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    fail(Errc::io_failure, "cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    fail(Errc::io_failure, "write error on " + path.string());
  }
}

} // namespace spud::imgio
