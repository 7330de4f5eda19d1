// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#include "spudgrade/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <vector>

#include "spudgrade/frame_ref.hpp"

namespace spud::bench {

namespace {

double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  if (n % 2 == 1) {
    return samples[n / 2];
  }
  return 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

template <typename Fn>
double time_runs_ns(int iterations, const std::function<void()>& hook,
                    Fn&& body) {
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(iterations));
  for (int i = 0; i < iterations; ++i) {
    const auto start = std::chrono::steady_clock::now();
    if (hook) {
      hook();
    }
    body();
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(
        std::chrono::duration<double, std::nano>(stop - start).count());
  }
  return median(std::move(samples));
}

std::string format_ns(double ns) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", ns);
  return buf;
}

} // namespace

double speedup_ratio(double sw_per_pixel_ns, double hw_clock_period_ns) {
  return sw_per_pixel_ns / hw_clock_period_ns;
}

BenchReport run_bench(const Frame& frame, const Thresholds& thresholds,
                      const stream_hw::ClockConfig& clock, int iterations,
                      const std::function<void()>& per_run_hook) {
  if (iterations < 3) {
    fail(Errc::invalid_argument, "bench needs at least 3 iterations");
  }

  BenchReport report;
  report.width = frame.width;
  report.height = frame.height;
  report.iterations = iterations;

  // Keep results observable so the timed calls cannot be optimized away.
  volatile std::uint64_t sink = 0;

  report.sw_frame_ns_frame =
      time_runs_ns(iterations, per_run_hook, [&frame, &thresholds, &sink] {
        const auto analysis = frame_ref::analyze_frame(frame, thresholds);
        sink = sink + analysis.report.green_pixels;
      });

  const auto stream = stream_hw::serialize(frame);
  stream_hw::CycleStats stats;
  report.sw_frame_ns_stream = time_runs_ns(
      iterations, per_run_hook, [&stream, &thresholds, &clock, &stats, &sink] {
        const auto result = stream_hw::run_stream(stream, thresholds, clock);
        stats = result.stats;
        sink = sink + result.report.green_pixels;
      });

  const auto pixels = static_cast<double>(frame.size());
  report.sw_per_pixel_ns = report.sw_frame_ns_stream / pixels;
  report.hw_cycles = stats.cycles;
  report.hw_clock_period_ns = stats.clock_period_ns;
  report.hw_frame_ns = stats.estimated_time_ns;
  report.speedup_ratio =
      speedup_ratio(report.sw_per_pixel_ns, report.hw_clock_period_ns);
  return report;
}

std::string render_bench_text(const BenchReport& r) {
  std::ostringstream out;
  out << "SOFTWARE TIMING (median of " << r.iterations << " runs, "
      << r.width << "x" << r.height << ")\n";
  out << "  backend   frame time (ns)      per pixel (ns)\n";
  out << "  frame     " << format_ns(r.sw_frame_ns_frame) << "\n";
  out << "  stream    " << format_ns(r.sw_frame_ns_stream) << "      "
      << format_ns(r.sw_per_pixel_ns) << "\n";
  out << "\n";
  out << "HARDWARE ESTIMATE (cycle model)\n";
  out << "  clock period (ns)     " << format_ns(r.hw_clock_period_ns) << "\n";
  out << "  cycles per frame      " << r.hw_cycles << "\n";
  out << "  frame time (ns)       " << format_ns(r.hw_frame_ns) << "\n";
  out << "\n";
  out << "SPEEDUP (sw per pixel / hw clock period)\n";
  out << "  measured    " << format_ns(r.speedup_ratio) << "\n";
  char ref[128];
  std::snprintf(ref, sizeof(ref),
                "  reference   %.3f  (%.5f ns/pixel vs %.3f ns clock)\n",
                speedup_ratio(kReferenceSwPerPixelNs, kReferenceClockNs),
                kReferenceSwPerPixelNs, kReferenceClockNs);
  out << ref;
  return out.str();
}

} // namespace spud::bench
