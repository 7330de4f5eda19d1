// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "spudgrade/frame_ref.hpp"

using namespace spud;
using frame_ref::BitMask;

namespace {

const RgbPixel kWhite{255, 255, 255};
const RgbPixel kRusset{150, 100, 60};
const RgbPixel kGreen{90, 140, 60};

// 4x4 fixture: top row white, two russet rows, bottom row green.
Frame mixed_frame() {
  Frame f(4, 4, kRusset);
  for (int x = 0; x < 4; ++x) {
    f.at(x, 0) = kWhite;
    f.at(x, 3) = kGreen;
  }
  return f;
}

Frame random_frame(std::mt19937_64& rng, int max_dim) {
  const int w = 1 + static_cast<int>(rng() % max_dim);
  const int h = 1 + static_cast<int>(rng() % max_dim);
  Frame f(w, h);
  for (auto& p : f.pixels) {
    const std::uint64_t v = rng();
    p = RgbPixel{static_cast<std::uint8_t>(v),
                 static_cast<std::uint8_t>(v >> 8),
                 static_cast<std::uint8_t>(v >> 16)};
  }
  return f;
}

bool subset_of(const BitMask& inner, const BitMask& outer) {
  for (std::size_t i = 0; i < inner.bits.size(); ++i) {
    if (inner.bits[i] != 0 && outer.bits[i] == 0) {
      return false;
    }
  }
  return true;
}

// Brute-force oracle: per-pixel double loop, no masks.
struct Counts {
  std::uint64_t roi = 0;
  std::uint64_t green = 0;
};

Counts count_oracle(const Frame& f, const Thresholds& t) {
  Counts c;
  for (int y = 0; y < f.height; ++y) {
    for (int x = 0; x < f.width; ++x) {
      const RgbPixel p = f.at(x, y);
      if (p.b < t.t_blue) {
        ++c.roi;
        if (static_cast<int>(p.r) - static_cast<int>(p.g) < t.t_diff) {
          ++c.green;
        }
      }
    }
  }
  return c;
}

} // namespace

TEST_CASE("roi mask thresholds the blue channel strictly") {
  Frame f(3, 1);
  f.at(0, 0) = kWhite;               // excluded
  f.at(1, 0) = kRusset;              // included, 60 < 200
  f.at(2, 0) = RgbPixel{0, 0, 200};  // boundary: excluded
  const BitMask roi = frame_ref::roi_mask(f, 200);
  CHECK_FALSE(roi.test(0, 0));
  CHECK(roi.test(1, 0));
  CHECK_FALSE(roi.test(2, 0));
}

TEST_CASE("green mask is the conjunction of roi and the r-g cut") {
  Frame f(3, 1);
  f.at(0, 0) = RgbPixel{0, 255, 0}; // pure green, diff -255
  f.at(1, 0) = kRusset;             // diff +50, not green
  f.at(2, 0) = RgbPixel{0, 255, 255}; // green diff, but outside ROI
  const BitMask roi = frame_ref::roi_mask(f, 200);
  const BitMask green = frame_ref::green_mask(f, roi, 20);
  CHECK(green.test(0, 0));
  CHECK_FALSE(green.test(1, 0));
  CHECK_FALSE(roi.test(2, 0));
  CHECK_FALSE(green.test(2, 0));
}

TEST_CASE("analyze_frame on the 4x4 fixture") {
  const auto analysis = frame_ref::analyze_frame(mixed_frame(), Thresholds{});
  CHECK(analysis.report.roi_pixels == 12);
  CHECK(analysis.report.green_pixels == 4);
  CHECK(analysis.report.percent_centi == 3333);
  CHECK(analysis.report.grade == Grade::damaged);
  CHECK(analysis.report.backend == Backend::frame);
}

TEST_CASE("all-white frame has no ROI") {
  Frame f(4, 4, kWhite);
  CHECK_THROWS_AS(frame_ref::analyze_frame(f, Thresholds{}), Error);
  try {
    frame_ref::analyze_frame(f, Thresholds{});
  } catch (const Error& err) {
    CHECK(err.code() == Errc::no_roi);
  }
}

TEST_CASE("fully green ROI grades seriously damaged at 100 percent") {
  Frame f(4, 4, kWhite);
  f.at(1, 1) = kGreen;
  f.at(2, 1) = kGreen;
  const auto analysis = frame_ref::analyze_frame(f, Thresholds{});
  CHECK(analysis.report.percent_centi == 10000);
  CHECK(analysis.report.grade == Grade::seriously_damaged);
}

TEST_CASE("overlay painting") {
  const Frame f = mixed_frame();
  const auto analysis = frame_ref::analyze_frame(f, Thresholds{});
  const RgbPixel marker{0, 255, 0};

  SUBCASE("empty mask is identity") {
    const BitMask empty(4, 4);
    CHECK(frame_ref::render_overlay(f, empty, marker) == f);
  }
  SUBCASE("full mask paints everything") {
    BitMask full(4, 4);
    for (auto& b : full.bits) {
      b = 1;
    }
    const Frame out = frame_ref::render_overlay(f, full, marker);
    for (const auto& p : out.pixels) {
      CHECK(p == marker);
    }
  }
  SUBCASE("fixture paints exactly the bottom row") {
    const Frame out = frame_ref::render_overlay(f, analysis.green, marker);
    int painted = 0;
    for (int y = 0; y < 4; ++y) {
      for (int x = 0; x < 4; ++x) {
        if (out.at(x, y) == marker) {
          ++painted;
          CHECK(y == 3);
        } else {
          CHECK(out.at(x, y) == f.at(x, y));
        }
      }
    }
    CHECK(painted == 4);
    CHECK(f == mixed_frame()); // input untouched
  }
}

TEST_CASE("capture validation scans the border ring") {
  SUBCASE("clean synthetic border stays quiet") {
    Frame f(20, 10, kWhite);
    for (int y = 2; y < 8; ++y) {
      for (int x = 2; x < 18; ++x) {
        f.at(x, y) = kRusset;
      }
    }
    CHECK(frame_ref::validate_capture(f, Thresholds{}).empty());
  }
  SUBCASE("russet left column trips the 5 percent cut") {
    Frame f(20, 10, kWhite);
    for (int y = 0; y < 10; ++y) {
      f.at(0, y) = kRusset;
    }
    const auto warnings = frame_ref::validate_capture(f, Thresholds{});
    REQUIRE(!warnings.empty());
    // ring = 2*(20+10) - 4 = 56, offending column contributes height/56
    const double bound = 10.0 / 56.0;
    for (const auto& w : warnings) {
      CHECK(w.border_roi_fraction >= bound);
      CHECK(w.border_roi_fraction <= 1.0);
    }
  }
  SUBCASE("all-white frame yields no warnings") {
    Frame f(8, 8, kWhite);
    CHECK(frame_ref::validate_capture(f, Thresholds{}).empty());
  }
}

TEST_CASE("mask properties on random frames") {
  std::mt19937_64 rng(321);
  const int t_levels_blue[] = {0, 64, 128, 200, 256};
  const int t_levels_diff[] = {-255, -64, 0, 20, 256};

  for (int i = 0; i < 50; ++i) {
    const Frame f = random_frame(rng, 32);

    // green subset of roi, for every threshold pair
    for (int tb : t_levels_blue) {
      const BitMask roi = frame_ref::roi_mask(f, tb);
      for (int td : t_levels_diff) {
        const BitMask green = frame_ref::green_mask(f, roi, td);
        REQUIRE(subset_of(green, roi));
      }
    }
    // monotone in t_blue
    for (std::size_t a = 0; a + 1 < std::size(t_levels_blue); ++a) {
      const BitMask lo = frame_ref::roi_mask(f, t_levels_blue[a]);
      const BitMask hi = frame_ref::roi_mask(f, t_levels_blue[a + 1]);
      REQUIRE(subset_of(lo, hi));
    }
    // monotone in t_diff under a fixed roi
    const BitMask roi = frame_ref::roi_mask(f, 200);
    for (std::size_t a = 0; a + 1 < std::size(t_levels_diff); ++a) {
      const BitMask lo = frame_ref::green_mask(f, roi, t_levels_diff[a]);
      const BitMask hi = frame_ref::green_mask(f, roi, t_levels_diff[a + 1]);
      REQUIRE(subset_of(lo, hi));
      REQUIRE(lo.count() <= hi.count());
    }
  }
}

TEST_CASE("threshold extremes") {
  std::mt19937_64 rng(99);
  const Frame f = random_frame(rng, 24);
  CHECK(frame_ref::roi_mask(f, 0).count() == 0);
  CHECK(frame_ref::roi_mask(f, 256).count() == f.size());
  const BitMask roi = frame_ref::roi_mask(f, 200);
  CHECK(frame_ref::green_mask(f, roi, -255).count() == 0);
  CHECK(frame_ref::green_mask(f, roi, 256).count() == roi.count());
}

TEST_CASE("counts match the brute-force oracle on random frames") {
  std::mt19937_64 rng(7777);
  for (int i = 0; i < 60; ++i) {
    const Frame f = random_frame(rng, 64);
    Thresholds t;
    t.t_blue = static_cast<int>(rng() % 257);
    t.t_diff = static_cast<int>(rng() % 512) - 255;
    const Counts expected = count_oracle(f, t);
    if (expected.roi == 0) {
      CHECK_THROWS_AS(frame_ref::analyze_frame(f, t), Error);
      continue;
    }
    const auto analysis = frame_ref::analyze_frame(f, t);
    REQUIRE(analysis.report.roi_pixels == expected.roi);
    REQUIRE(analysis.report.green_pixels == expected.green);
  }
}
