// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "spudgrade/frame_ref.hpp"
#include "spudgrade/stream_hw.hpp"

using namespace spud;
using namespace spud::stream_hw;

namespace {

const RgbPixel kWhite{255, 255, 255};
const RgbPixel kRusset{150, 100, 60};
const RgbPixel kGreen{90, 140, 60};

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

} // namespace

TEST_CASE("serialize emits row-major, top row first") {
  Frame f(2, 2);
  f.at(0, 0) = RgbPixel{1, 0, 0};
  f.at(1, 0) = RgbPixel{2, 0, 0};
  f.at(0, 1) = RgbPixel{3, 0, 0};
  f.at(1, 1) = RgbPixel{4, 0, 0};
  const PixelStream s = serialize(f);
  REQUIRE(s.pixels.size() == 4);
  CHECK(s.pixels[0].r == 1);
  CHECK(s.pixels[1].r == 2);
  CHECK(s.pixels[2].r == 3);
  CHECK(s.pixels[3].r == 4);
}

TEST_CASE("serialize and deserialize invert each other") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    const Frame f = random_frame(rng, 32);
    REQUIRE(deserialize(serialize(f)) == f);
  }
  Frame one(1, 1, kGreen);
  CHECK(deserialize(serialize(one)) == one);
}

TEST_CASE("640x480 stream carries 307200 pixels") {
  Frame f(640, 480, kRusset);
  CHECK(serialize(f).pixels.size() == 307200);
}

TEST_CASE("deserialize rejects inconsistent lengths") {
  PixelStream s;
  s.width = 2;
  s.height = 2;
  s.pixels.assign(3, kRusset);
  CHECK_THROWS_AS(deserialize(s), Error);
  try {
    deserialize(s);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::length_mismatch);
  }
}

TEST_CASE("step updates counters like the comparators say") {
  const Thresholds t;
  PipelineState state;

  SUBCASE("white pixel only advances pixels_seen") {
    const StepOutput out = step(state, kWhite, t);
    CHECK(state.pixels_seen == 1);
    CHECK(state.roi_counter == 0);
    CHECK(state.green_counter == 0);
    CHECK_FALSE(out.is_green);
    CHECK(out.overlay_pixel == kWhite);
  }
  SUBCASE("green pixel bumps both counters and paints the marker") {
    const StepOutput out = step(state, kGreen, t);
    CHECK(state.roi_counter == 1);
    CHECK(state.green_counter == 1);
    CHECK(out.is_green);
    CHECK(out.overlay_pixel == t.marker);
  }
  SUBCASE("russet pixel bumps only the roi counter") {
    const StepOutput out = step(state, kRusset, t);
    CHECK(state.roi_counter == 1);
    CHECK(state.green_counter == 0);
    CHECK_FALSE(out.is_green);
    CHECK(out.overlay_pixel == kRusset);
  }
}

TEST_CASE("state counters never decrease and order as documented") {
  std::mt19937_64 rng(4242);
  const Thresholds t;
  PipelineState state;
  PipelineState prev;
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t v = rng();
    const RgbPixel p{static_cast<std::uint8_t>(v),
                     static_cast<std::uint8_t>(v >> 8),
                     static_cast<std::uint8_t>(v >> 16)};
    step(state, p, t);
    REQUIRE(state.pixels_seen == prev.pixels_seen + 1);
    REQUIRE(state.roi_counter >= prev.roi_counter);
    REQUIRE(state.green_counter >= prev.green_counter);
    REQUIRE(state.green_counter <= state.roi_counter);
    REQUIRE(state.roi_counter <= state.pixels_seen);
    prev = state;
  }
}

TEST_CASE("run_stream matches the frame backend bit for bit") {
  std::mt19937_64 rng(2025);
  const ClockConfig clock;
  int compared = 0;
  while (compared < 40) {
    const Frame f = random_frame(rng, 48);
    Thresholds t;
    t.t_blue = static_cast<int>(rng() % 257);
    t.t_diff = static_cast<int>(rng() % 512) - 255;

    bool frame_no_roi = false;
    frame_ref::FrameAnalysis analysis;
    try {
      analysis = frame_ref::analyze_frame(f, t);
    } catch (const Error&) {
      frame_no_roi = true;
    }
    if (frame_no_roi) {
      CHECK_THROWS_AS(run_stream(serialize(f), t, clock), Error);
      continue;
    }
    const StreamResult result = run_stream(serialize(f), t, clock);
    REQUIRE(result.report.roi_pixels == analysis.report.roi_pixels);
    REQUIRE(result.report.green_pixels == analysis.report.green_pixels);
    REQUIRE(result.report.percent_centi == analysis.report.percent_centi);
    REQUIRE(result.report.grade == analysis.report.grade);
    REQUIRE(result.report.backend == Backend::stream);
    REQUIRE(result.overlay ==
            frame_ref::render_overlay(f, analysis.green, t.marker));
    ++compared;
  }
}

TEST_CASE("cycle accounting fixture at 640x480") {
  Frame f(640, 480, kRusset);
  const StreamResult result = run_stream(serialize(f), Thresholds{}, ClockConfig{});
  CHECK(result.stats.cycles == 307203);
  CHECK(result.stats.latency == kPipelineLatency);
  CHECK(result.stats.clock_period_ns == doctest::Approx(10.169));
  // (307200 + 3) * 10.169, pinned to +-0.1 ns
  CHECK(std::abs(result.stats.estimated_time_ns - 3123947.3) <= 0.1);

  // linear in the clock period
  const StreamResult doubled =
      run_stream(serialize(f), Thresholds{}, ClockConfig{2 * 10.169});
  CHECK(doubled.stats.estimated_time_ns ==
        doctest::Approx(2 * result.stats.estimated_time_ns));
}

TEST_CASE("hardware time estimate") {
  CHECK(estimate_hw_time(307200, ClockConfig{10.169}) ==
        doctest::Approx(3123916.8).epsilon(1e-12));
  CHECK(estimate_hw_time(0, ClockConfig{10.169}) == 0.0);
  CHECK(estimate_hw_time(1, ClockConfig{10.169}) == doctest::Approx(10.169));
}

TEST_CASE("counter width covers the worst case frame") {
  CHECK(required_counter_bits(640, 480) == 19);
  CHECK(required_counter_bits(1, 1) == 1);

  // all-green full frame drives the counters to their maximum
  Frame f(640, 480, kGreen);
  const StreamResult result = run_stream(serialize(f), Thresholds{}, ClockConfig{});
  CHECK(result.report.roi_pixels == 307200);
  CHECK(result.report.green_pixels == 307200);
  CHECK(result.report.green_pixels < (1ull << 19));
  CHECK(result.report.grade == Grade::seriously_damaged);
}

TEST_CASE("empty ROI stream raises no_roi") {
  Frame f(8, 8, kWhite);
  CHECK_THROWS_AS(run_stream(serialize(f), Thresholds{}, ClockConfig{}), Error);
}
