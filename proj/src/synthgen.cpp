// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#include "spudgrade/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "spudgrade/imgio.hpp"

namespace spud::synthgen {

namespace {

// Bounded draw on the raw engine output. std::uniform_int_distribution is
// implementation-defined, so corpus bytes would not be portable with it.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

int draw_range(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

bool inside_ellipse(const SynthSpec& s, int x, int y) {
  const std::int64_t dx = x - s.center_x;
  const std::int64_t dy = y - s.center_y;
  const std::int64_t a = s.semi_axis_x;
  const std::int64_t b = s.semi_axis_y;
  return dx * dx * b * b + dy * dy * a * a <= a * a * b * b;
}

void validate_spec(const SynthSpec& s, const Thresholds& t) {
  if (!thresholds_in_range(t)) {
    fail(Errc::invalid_spec, "thresholds out of range");
  }
  if (s.width < 3 || s.height < 3) {
    fail(Errc::invalid_spec, "frame too small to hold a bordered ellipse");
  }
  if (s.semi_axis_x < 1 || s.semi_axis_y < 1) {
    fail(Errc::invalid_spec, "ellipse semi-axes must be >= 1");
  }
  if (s.center_x - s.semi_axis_x < 1 ||
      s.center_x + s.semi_axis_x > s.width - 2 ||
      s.center_y - s.semi_axis_y < 1 ||
      s.center_y + s.semi_axis_y > s.height - 2) {
    fail(Errc::invalid_spec, "ellipse must stay strictly inside the border ring");
  }
  if (!(s.target_fraction >= 0.0 && s.target_fraction <= 1.0)) {
    fail(Errc::invalid_spec, "target_fraction must lie in [0, 1]");
  }
  if (s.patch_count < 1) {
    fail(Errc::invalid_spec, "patch_count must be >= 1");
  }
  // Oracle separations: each role color must land on the intended side of
  // both comparators, or generated truth would disagree with analysis.
  if (s.background.b < t.t_blue) {
    fail(Errc::invalid_spec, "background color falls inside the ROI");
  }
  if (s.body_color.b >= t.t_blue) {
    fail(Errc::invalid_spec, "body color falls outside the ROI");
  }
  if (static_cast<int>(s.body_color.r) - static_cast<int>(s.body_color.g) <
      t.t_diff) {
    fail(Errc::invalid_spec, "body color reads as green");
  }
  if (s.patch_color.b >= t.t_blue) {
    fail(Errc::invalid_spec, "patch color falls outside the ROI");
  }
  if (static_cast<int>(s.patch_color.r) - static_cast<int>(s.patch_color.g) >=
      t.t_diff) {
    fail(Errc::invalid_spec, "patch color does not read as green");
  }
}

} // namespace

std::pair<Frame, GroundTruth> generate(const SynthSpec& spec,
                                       const Thresholds& thresholds) {
  validate_spec(spec, thresholds);

  Frame frame(spec.width, spec.height, spec.background);

  // Body pass: paint the ellipse and collect its pixel indices.
  std::vector<std::size_t> ellipse;
  std::vector<std::uint8_t> in_ellipse(frame.size(), 0);
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      if (inside_ellipse(spec, x, y)) {
        const auto idx = static_cast<std::size_t>(y) * spec.width + x;
        frame.pixels[idx] = spec.body_color;
        in_ellipse[idx] = 1;
        ellipse.push_back(idx);
      }
    }
  }

  const std::uint64_t roi = ellipse.size();
  std::uint64_t needed = 0;
  if (spec.target_fraction >= 1.0) {
    needed = roi;
  } else {
    needed = static_cast<std::uint64_t>(
        std::ceil(spec.target_fraction * static_cast<double>(roi)));
    needed = std::min(needed, roi);
  }

  // Patch pass: seeded flood growth, one pixel per step, until the painted
  // count reaches the target. Frontier pops are random draws so the patch
  // shape varies with the seed while staying connected per flood seed.
  GroundTruth truth;
  truth.roi_pixels = roi;
  std::vector<std::uint8_t> painted(frame.size(), 0);
  std::mt19937_64 rng(spec.seed);

  std::vector<std::size_t> frontier;
  if (needed > 0) {
    const int seeds = static_cast<int>(
        std::min<std::uint64_t>(spec.patch_count, needed));
    for (int i = 0; i < seeds; ++i) {
      frontier.push_back(ellipse[draw(rng, roi)]);
    }
  }

  std::uint64_t painted_count = 0;
  while (painted_count < needed) {
    if (frontier.empty()) {
      frontier.push_back(ellipse[draw(rng, roi)]);
    }
    const std::size_t pick = draw(rng, frontier.size());
    const std::size_t idx = frontier[pick];
    frontier[pick] = frontier.back();
    frontier.pop_back();
    if (painted[idx] != 0) {
      continue;
    }
    painted[idx] = 1;
    ++painted_count;
    frame.pixels[idx] = spec.patch_color;

    const int x = static_cast<int>(idx % spec.width);
    const int y = static_cast<int>(idx / spec.width);
    truth.green_coordinates.emplace_back(x, y);

    const int nx[4] = {x - 1, x + 1, x, x};
    const int ny[4] = {y, y, y - 1, y + 1};
    for (int k = 0; k < 4; ++k) {
      if (nx[k] < 0 || nx[k] >= spec.width || ny[k] < 0 ||
          ny[k] >= spec.height) {
        continue;
      }
      const auto nidx =
          static_cast<std::size_t>(ny[k]) * spec.width + nx[k];
      if (in_ellipse[nidx] != 0 && painted[nidx] == 0) {
        frontier.push_back(nidx);
      }
    }
  }

  truth.green_pixels = painted_count;
  std::sort(truth.green_coordinates.begin(), truth.green_coordinates.end(),
            [](const auto& lhs, const auto& rhs) {
              return lhs.second != rhs.second ? lhs.second < rhs.second
                                              : lhs.first < rhs.first;
            });
  return {std::move(frame), std::move(truth)};
}

std::vector<CorpusEntry> generate_corpus(int count, int width, int height,
                                         std::uint64_t seed,
                                         const Thresholds& thresholds,
                                         std::optional<double> fixed_fraction) {
  if (count < 1) {
    fail(Errc::invalid_spec, "corpus count must be >= 1");
  }
  if (width < 5 || height < 5) {
    fail(Errc::invalid_spec, "corpus dimensions must be at least 5x5");
  }

  // Fraction schedule: grade-boundary brackets plus even fillers.
  std::vector<double> fractions;
  if (fixed_fraction) {
    fractions.assign(static_cast<std::size_t>(count), *fixed_fraction);
  } else if (count >= 6) {
    fractions = {0.0, 0.24, 0.26, 0.45, 0.55, 1.0};
    const int extra = count - 6;
    for (int k = 1; k <= extra; ++k) {
      fractions.push_back(static_cast<double>(k) / (extra + 1));
    }
  } else {
    for (int i = 0; i < count; ++i) {
      fractions.push_back(count == 1 ? 0.0
                                     : static_cast<double>(i) / (count - 1));
    }
  }
  std::sort(fractions.begin(), fractions.end());

  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> entries;
  entries.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    SynthSpec spec;
    spec.width = width;
    spec.height = height;
    const int ax_hi = (width - 3) / 2;
    const int ay_hi = (height - 3) / 2;
    spec.semi_axis_x = draw_range(rng, std::max(1, ax_hi / 2), ax_hi);
    spec.semi_axis_y = draw_range(rng, std::max(1, ay_hi / 2), ay_hi);
    spec.center_x = draw_range(rng, 1 + spec.semi_axis_x,
                               width - 2 - spec.semi_axis_x);
    spec.center_y = draw_range(rng, 1 + spec.semi_axis_y,
                               height - 2 - spec.semi_axis_y);
    spec.target_fraction = fractions[static_cast<std::size_t>(i)];
    spec.seed = rng();

    CorpusEntry entry;
    char name[32];
    std::snprintf(name, sizeof(name), "synth_%03d", i);
    entry.name = name;
    entry.spec = spec;
    auto [frame, truth] = generate(spec, thresholds);
    entry.frame = std::move(frame);
    entry.truth = std::move(truth);
    entries.push_back(std::move(entry));
  }
  return entries;
}

void write_corpus(const std::filesystem::path& dir,
                  const std::vector<CorpusEntry>& entries) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    fail(Errc::io_failure, "cannot create " + dir.string() + ": " + ec.message());
  }
  for (const CorpusEntry& entry : entries) {
    imgio::save_image(dir / (entry.name + ".ppm"), entry.frame);

    const auto truth_path = dir / (entry.name + ".truth.json");
    std::ofstream out(truth_path, std::ios::trunc);
    if (!out) {
      fail(Errc::io_failure, "cannot open " + truth_path.string());
    }
    out << "{\"roi_pixels\":" << entry.truth.roi_pixels
        << ",\"green_pixels\":" << entry.truth.green_pixels << "}\n";
    if (!out) {
      fail(Errc::io_failure, "write error on " + truth_path.string());
    }
  }
}

} // namespace spud::synthgen
