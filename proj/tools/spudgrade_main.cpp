// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0
//
// spudgrade — batch-oriented potato greening grader.
//
// Exit codes: 0 graded, 1 image has no gradable ROI, 2 operational failure
// (I/O, parse, bad usage). Capture warnings never change the exit code.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spudgrade/bench.hpp"
#include "spudgrade/core.hpp"
#include "spudgrade/frame_ref.hpp"
#include "spudgrade/hdl_emit.hpp"
#include "spudgrade/imgio.hpp"
#include "spudgrade/report.hpp"
#include "spudgrade/stream_hw.hpp"
#include "spudgrade/synthgen.hpp"

namespace fs = std::filesystem;
using namespace spud;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoRoi = 1;
constexpr int kExitFailure = 2;

int exit_code_for(const Error& err) {
  return err.code() == Errc::no_roi ? kExitNoRoi : kExitFailure;
}

struct GradeFlags {
  int t_blue = Thresholds{}.t_blue;
  int t_diff = Thresholds{}.t_diff;
  std::string backend = "stream";
  std::string overlay_path;
  bool json = false;
  double clock_ns = stream_hw::ClockConfig{}.period_ns;
};

void add_grade_flags(CLI::App* cmd, GradeFlags& flags) {
  cmd->add_option("--t-blue", flags.t_blue, "blue ROI cut, pixel in ROI iff b < t-blue")
      ->check(CLI::Range(0, 256))
      ->capture_default_str();
  cmd->add_option("--t-diff", flags.t_diff, "green cut, ROI pixel green iff r - g < t-diff")
      ->check(CLI::Range(-255, 256))
      ->capture_default_str();
  cmd->add_option("--backend", flags.backend, "implementation to run")
      ->check(CLI::IsMember({"frame", "stream"}))
      ->capture_default_str();
  cmd->add_flag("--json", flags.json, "emit a JSON report instead of text");
  cmd->add_option("--clock-ns", flags.clock_ns, "modeled clock period in ns (stream backend)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

Thresholds thresholds_from(const GradeFlags& flags) {
  Thresholds t;
  t.t_blue = flags.t_blue;
  t.t_diff = flags.t_diff;
  return t;
}

struct GradeOutcome {
  GradeReport report;
  std::vector<frame_ref::CaptureWarning> warnings;
  std::optional<stream_hw::CycleStats> stats;
  Frame overlay;
  int width = 0;
  int height = 0;
};

GradeOutcome grade_one(const fs::path& path, const GradeFlags& flags) {
  const Frame frame = imgio::load_image(path);
  const Thresholds thresholds = thresholds_from(flags);

  GradeOutcome out;
  out.width = frame.width;
  out.height = frame.height;
  out.warnings = frame_ref::validate_capture(frame, thresholds);

  if (flags.backend == "frame") {
    auto analysis = frame_ref::analyze_frame(frame, thresholds);
    out.report = analysis.report;
    out.overlay =
        frame_ref::render_overlay(frame, analysis.green, thresholds.marker);
  } else {
    stream_hw::ClockConfig clock{flags.clock_ns};
    auto result =
        stream_hw::run_stream(stream_hw::serialize(frame), thresholds, clock);
    out.report = result.report;
    out.overlay = std::move(result.overlay);
    out.stats = result.stats;
  }
  return out;
}

int cmd_grade(const std::string& path, const GradeFlags& flags) {
  try {
    const GradeOutcome out = grade_one(path, flags);
    if (!flags.overlay_path.empty()) {
      imgio::save_image(flags.overlay_path, out.overlay);
    }
    if (flags.json) {
      std::cout << report::grade_json(out.width, out.height, out.report,
                                      out.warnings, out.stats)
                       .dump()
                << "\n";
    } else {
      std::cout << report::grade_text(path, out.width, out.height, out.report,
                                      out.warnings, out.stats);
    }
    return kExitOk;
  } catch (const Error& err) {
    std::cerr << "spudgrade: " << path << ": " << err.what() << "\n";
    return exit_code_for(err);
  }
}

int batch_jobs(int requested) {
  int jobs = requested > 0
                 ? requested
                 : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, jobs);
  if (const char* cap_env = std::getenv("SPUDGRADE_THREADS")) {
    const int cap = std::atoi(cap_env);
    if (cap >= 1) {
      jobs = std::min(jobs, cap);
    }
  }
  return jobs;
}

int cmd_batch(const std::string& dir, const GradeFlags& flags, int jobs_flag) {
  std::vector<fs::path> files;
  try {
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".ppm") {
        files.push_back(entry.path());
      }
    }
  } catch (const fs::filesystem_error& err) {
    std::cerr << "spudgrade: " << err.what() << "\n";
    return kExitFailure;
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });

  struct FileResult {
    std::string line;
    int exit_code = kExitOk;
    Grade grade = Grade::not_damaged;
  };
  std::vector<FileResult> results(files.size());

  const int jobs = batch_jobs(jobs_flag);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= files.size()) {
        return;
      }
      FileResult& slot = results[i];
      const std::string name = files[i].filename().string();
      try {
        const GradeOutcome out = grade_one(files[i], flags);
        nlohmann::ordered_json j;
        j["file"] = name;
        j.update(report::grade_json(out.width, out.height, out.report,
                                    out.warnings, out.stats));
        slot.line = j.dump();
        slot.grade = out.report.grade;
      } catch (const Error& err) {
        nlohmann::ordered_json j;
        j["file"] = name;
        j["error"] = err.what();
        j["code"] = to_string(err.code());
        slot.line = j.dump();
        slot.exit_code = exit_code_for(err);
      }
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < jobs && t < static_cast<int>(files.size()); ++t) {
    pool.emplace_back(worker);
  }
  for (auto& t : pool) {
    t.join();
  }

  int exit_code = kExitOk;
  std::size_t graded = 0;
  std::size_t counts[3] = {0, 0, 0};
  std::size_t failed = 0;
  for (const FileResult& r : results) {
    std::cout << r.line << "\n";
    if (r.exit_code == kExitOk) {
      ++graded;
      ++counts[static_cast<int>(r.grade)];
    } else {
      ++failed;
      exit_code = std::max(exit_code, r.exit_code);
    }
  }
  std::cout << "summary: " << files.size() << " files, " << graded
            << " graded (" << counts[0] << " not_damaged, " << counts[1]
            << " damaged, " << counts[2] << " seriously_damaged), " << failed
            << " failed\n";
  return exit_code;
}

int cmd_synth(const std::string& out_dir, int count, const std::string& dims,
              std::optional<double> fraction, std::uint64_t seed) {
  int width = 0;
  int height = 0;
  if (std::sscanf(dims.c_str(), "%dx%d", &width, &height) != 2) {
    std::cerr << "spudgrade: bad --dims \"" << dims << "\" (expected WxH)\n";
    return kExitFailure;
  }
  try {
    const auto entries =
        synthgen::generate_corpus(count, width, height, seed, {}, fraction);
    synthgen::write_corpus(out_dir, entries);
    for (const auto& entry : entries) {
      std::cout << entry.name << ".ppm roi_pixels=" << entry.truth.roi_pixels
                << " green_pixels=" << entry.truth.green_pixels << "\n";
    }
    std::cout << "wrote " << entries.size() << " frame(s) to " << out_dir
              << "\n";
    return kExitOk;
  } catch (const Error& err) {
    std::cerr << "spudgrade: " << err.what() << "\n";
    return kExitFailure;
  }
}

int cmd_bench(const std::string& path, bool synthetic, int iterations,
              double clock_ns, bool json) {
  try {
    Frame frame;
    if (!path.empty()) {
      frame = imgio::load_image(path);
    } else if (synthetic) {
      synthgen::SynthSpec spec;
      spec.target_fraction = 0.3;
      spec.seed = 42;
      frame = synthgen::generate(spec).first;
    } else {
      std::cerr << "spudgrade: bench needs an image path or --synthetic\n";
      return kExitFailure;
    }
    const auto report = bench::run_bench(frame, Thresholds{},
                                         stream_hw::ClockConfig{clock_ns},
                                         iterations);
    if (json) {
      std::cout << report::bench_json(report).dump() << "\n";
    } else {
      std::cout << bench::render_bench_text(report);
    }
    return kExitOk;
  } catch (const Error& err) {
    std::cerr << "spudgrade: " << err.what() << "\n";
    return err.code() == Errc::no_roi ? kExitNoRoi : kExitFailure;
  }
}

int cmd_emit_hdl(const std::string& out_path, int t_blue, int t_diff,
                 const std::string& dims, const std::string& module_name) {
  hdl_emit::EmitConfig config;
  config.thresholds.t_blue = t_blue;
  config.thresholds.t_diff = t_diff;
  config.module_name = module_name;
  if (std::sscanf(dims.c_str(), "%dx%d", &config.width, &config.height) != 2) {
    std::cerr << "spudgrade: bad --dims \"" << dims << "\" (expected WxH)\n";
    return kExitFailure;
  }
  try {
    const std::string text = hdl_emit::emit_pipeline(config);
    FILE* out = std::fopen(out_path.c_str(), "wb");
    if (out == nullptr) {
      std::cerr << "spudgrade: cannot open " << out_path << " for writing\n";
      return kExitFailure;
    }
    const std::size_t written = std::fwrite(text.data(), 1, text.size(), out);
    const bool close_ok = std::fclose(out) == 0;
    if (written != text.size() || !close_ok) {
      std::cerr << "spudgrade: write error on " << out_path << "\n";
      return kExitFailure;
    }
    std::cout << "wrote " << out_path << " (module " << config.module_name
              << ", counter width " << hdl_emit::counter_bits(config) << ")\n";
    return kExitOk;
  } catch (const Error& err) {
    std::cerr << "spudgrade: " << err.what() << "\n";
    return kExitFailure;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"potato greening grader with a pixel-serial hardware model"};
  app.require_subcommand(1);

  // grade
  auto* grade = app.add_subcommand("grade", "grade one image");
  std::string grade_path;
  GradeFlags grade_flags;
  grade->add_option("path", grade_path, "input image (.ppm)")->required();
  add_grade_flags(grade, grade_flags);
  grade->add_option("--overlay", grade_flags.overlay_path,
                    "write overlay image with green pixels marked");

  // batch
  auto* batch = app.add_subcommand("batch", "grade every .ppm in a directory");
  std::string batch_dir;
  GradeFlags batch_flags;
  int batch_jobs_flag = 0;
  batch->add_option("dir", batch_dir, "input directory")->required();
  add_grade_flags(batch, batch_flags);
  batch->add_option("--jobs", batch_jobs_flag,
                    "worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);

  // synth
  auto* synth = app.add_subcommand("synth", "write a synthetic test corpus");
  std::string synth_out;
  int synth_count = 9;
  std::string synth_dims = "640x480";
  double synth_fraction = -1.0;
  std::uint64_t synth_seed = 7;
  synth->add_option("--out-dir", synth_out, "output directory")->required();
  synth->add_option("--count", synth_count, "number of frames")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth->add_option("--dims", synth_dims, "frame dimensions WxH")
      ->capture_default_str();
  synth->add_option("--fraction", synth_fraction,
                    "fixed green fraction for every frame (default: spanning schedule)")
      ->check(CLI::Range(0.0, 1.0));
  synth->add_option("--seed", synth_seed, "corpus seed")->capture_default_str();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "time software backends vs the cycle model");
  std::string bench_path;
  bool bench_synthetic = false;
  int bench_iterations = 5;
  double bench_clock = stream_hw::ClockConfig{}.period_ns;
  bool bench_json_flag = false;
  bench_cmd->add_option("path", bench_path, "input image (.ppm)");
  bench_cmd->add_flag("--synthetic", bench_synthetic,
                      "bench a generated 640x480 frame instead of a file");
  bench_cmd->add_option("--iterations", bench_iterations, "timed runs per backend (>= 3)")
      ->check(CLI::Range(3, 1000000))
      ->capture_default_str();
  bench_cmd->add_option("--clock-ns", bench_clock, "modeled clock period in ns")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_flag("--json", bench_json_flag, "emit a JSON report instead of text");

  // emit-hdl
  auto* emit = app.add_subcommand("emit-hdl", "write the pipeline as Verilog");
  std::string emit_out = "pipeline.v";
  int emit_t_blue = Thresholds{}.t_blue;
  int emit_t_diff = Thresholds{}.t_diff;
  std::string emit_dims = "640x480";
  std::string emit_module = "greening_pipeline";
  emit->add_option("--out", emit_out, "output file")->capture_default_str();
  emit->add_option("--t-blue", emit_t_blue, "blue ROI cut")
      ->check(CLI::Range(0, 256))
      ->capture_default_str();
  emit->add_option("--t-diff", emit_t_diff, "green cut")
      ->check(CLI::Range(-255, 256))
      ->capture_default_str();
  emit->add_option("--dims", emit_dims, "frame dimensions WxH")
      ->capture_default_str();
  emit->add_option("--module-name", emit_module, "Verilog module name")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e); // prints the error and usage hint
    return kExitFailure;
  }

  if (grade->parsed()) {
    return cmd_grade(grade_path, grade_flags);
  }
  if (batch->parsed()) {
    return cmd_batch(batch_dir, batch_flags, batch_jobs_flag);
  }
  if (synth->parsed()) {
    std::optional<double> fraction;
    if (synth->count("--fraction") > 0) {
      fraction = synth_fraction;
    }
    return cmd_synth(synth_out, synth_count, synth_dims, fraction, synth_seed);
  }
  if (bench_cmd->parsed()) {
    return cmd_bench(bench_path, bench_synthetic, bench_iterations,
                     bench_clock, bench_json_flag);
  }
  if (emit->parsed()) {
    return cmd_emit_hdl(emit_out, emit_t_blue, emit_t_diff, emit_dims,
                        emit_module);
  }
  return kExitFailure;
}
