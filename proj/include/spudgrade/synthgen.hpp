// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spudgrade/core.hpp"

namespace spud::synthgen {

/// Recipe for one synthetic tuber image: a white backdrop, an elliptical
/// body, and a seeded connected green patch grown until it covers
/// target_fraction of the body.
struct SynthSpec {
  int width = 640;
  int height = 480;
  int center_x = 320;
  int center_y = 240;
  int semi_axis_x = 200;
  int semi_axis_y = 150;
  RgbPixel body_color{150, 100, 60};   // russet skin
  RgbPixel patch_color{90, 140, 60};   // greened skin
  RgbPixel background{255, 255, 255};
  double target_fraction = 0.0; // in [0, 1]
  std::uint64_t seed = 0;       // drives patch placement
  int patch_count = 1;          // flood seeds; >1 grows several patches
};

/// Exact per-pixel truth recorded by the generator's own paint loop.
struct GroundTruth {
  std::uint64_t roi_pixels = 0;
  std::uint64_t green_pixels = 0;
  std::vector<std::pair<int, int>> green_coordinates;
};

/// One corpus element, named for deterministic on-disk layout.
struct CorpusEntry {
  std::string name;
  SynthSpec spec;
  Frame frame;
  GroundTruth truth;
};

/// Paints the image and records ground truth from the same loop.
/// Validates the spec against the given thresholds first: the background
/// must sit outside the ROI, the body inside the ROI but not green, the
/// patch inside the ROI and green, and the ellipse must keep a 1-pixel
/// clear border. Throws invalid_spec otherwise.
std::pair<Frame, GroundTruth> generate(const SynthSpec& spec,
                                       const Thresholds& thresholds = {});

/// Deterministic corpus with fractions spanning [0, 1]: always 0 and 1,
/// values bracketing 0.25 and 0.5 (when count >= 6), and evenly spread
/// fillers; axes and centers vary per entry. Same seed, same corpus.
/// fixed_fraction, when set, replaces the schedule for every entry.
std::vector<CorpusEntry> generate_corpus(int count, int width, int height,
                                         std::uint64_t seed,
                                         const Thresholds& thresholds = {},
                                         std::optional<double> fixed_fraction = {});

/// Writes <name>.ppm plus <name>.truth.json side files for each entry.
void write_corpus(const std::filesystem::path& dir,
                  const std::vector<CorpusEntry>& entries);

} // namespace spud::synthgen
