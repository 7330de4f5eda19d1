// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#include "spudgrade/hdl_emit.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <vector>

namespace spud::hdl_emit {

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty()) {
    return false;
  }
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    return false;
  }
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
      return false;
    }
  }
  return true;
}

void validate_config(const EmitConfig& c) {
  if (c.width < 1 || c.height < 1) {
    fail(Errc::invalid_config, "frame dimensions must be >= 1");
  }
  const auto pixels = static_cast<std::uint64_t>(c.width) *
                      static_cast<std::uint64_t>(c.height);
  if (pixels > 0x7FFFFFFFull) {
    fail(Errc::invalid_config, "frame too large for 32-bit pixel literals");
  }
  if (!thresholds_in_range(c.thresholds)) {
    fail(Errc::invalid_config, "thresholds out of range");
  }
  if (!valid_identifier(c.module_name)) {
    fail(Errc::invalid_config,
         "module name \"" + c.module_name + "\" is not a valid identifier");
  }
}

std::string signed_literal(int value) {
  // 10-bit signed covers the full cut range [-255, 256].
  if (value < 0) {
    return "-10'sd" + std::to_string(-value);
  }
  return "10'sd" + std::to_string(value);
}

} // namespace

int counter_bits(const EmitConfig& config) {
  const auto pixels = static_cast<std::uint64_t>(config.width) *
                      static_cast<std::uint64_t>(config.height);
  return static_cast<int>(std::bit_width(pixels));
}

std::string emit_pipeline(const EmitConfig& config) {
  validate_config(config);

  const int bits = counter_bits(config);
  const auto pixels = static_cast<std::uint64_t>(config.width) *
                      static_cast<std::uint64_t>(config.height);
  const Thresholds& t = config.thresholds;

  std::ostringstream v;
  v << "// Pixel-serial potato greening datapath.\n"
       "// Generated by the spudgrade HDL emitter; edit the config, not this file.\n"
       "//\n"
       "// Per pixel: one unsigned comparator (blue ROI cut), one signed 9-bit\n"
       "// subtractor plus comparator (R-G green cut), two counters, overlay mux.\n"
       "// Frame end: grade by shift-compare, so the design needs no divider.\n"
       "\n";
  v << "module " << config.module_name << " #(\n"
       "    parameter integer COUNTER_BITS = " << bits << "\n"
       ") (\n"
       "    input  wire                    clk,\n"
       "    input  wire                    rst,\n"
       "    input  wire                    pixel_valid,\n"
       "    input  wire [7:0]              pixel_r,\n"
       "    input  wire [7:0]              pixel_g,\n"
       "    input  wire [7:0]              pixel_b,\n"
       "    output reg  [7:0]              out_r,\n"
       "    output reg  [7:0]              out_g,\n"
       "    output reg  [7:0]              out_b,\n"
       "    output reg                     out_green,\n"
       "    output reg  [1:0]              grade,\n"
       "    output reg                     grade_valid,\n"
       "    output wire [COUNTER_BITS-1:0] roi_count,\n"
       "    output wire [COUNTER_BITS-1:0] green_count\n"
       ");\n"
       "\n";
  v << "  // frame geometry\n"
       "  localparam [31:0]              FRAME_WIDTH  = " << config.width << ";\n"
       "  localparam [31:0]              FRAME_HEIGHT = " << config.height << ";\n"
       "  localparam [COUNTER_BITS-1:0]  FRAME_PIXELS = " << pixels << ";\n"
       "\n"
       "  // comparator cuts (strict: b < T_BLUE, r - g < T_DIFF)\n"
       "  localparam [8:0]               T_BLUE = 9'd" << t.t_blue << ";\n"
       "  localparam signed [9:0]        T_DIFF = " << signed_literal(t.t_diff)
    << ";\n"
       "\n"
       "  // overlay marker color\n"
       "  localparam [7:0]               MARKER_R = 8'd"
    << static_cast<int>(t.marker.r) << ";\n"
       "  localparam [7:0]               MARKER_G = 8'd"
    << static_cast<int>(t.marker.g) << ";\n"
       "  localparam [7:0]               MARKER_B = 8'd"
    << static_cast<int>(t.marker.b) << ";\n"
       "\n"
       "  // grade encoding\n"
       "  localparam [1:0]               GRADE_NOT_DAMAGED       = 2'd0;\n"
       "  localparam [1:0]               GRADE_DAMAGED           = 2'd1;\n"
       "  localparam [1:0]               GRADE_SERIOUSLY_DAMAGED = 2'd2;\n"
       "\n";
  v << "  // stage 1: comparators\n"
       "  wire              in_roi   = {1'b0, pixel_b} < T_BLUE;\n"
       "  wire signed [8:0] rg_diff  = $signed({1'b0, pixel_r}) - $signed({1'b0, pixel_g});\n"
       "  wire              is_green = in_roi && (rg_diff < T_DIFF);\n"
       "\n"
       "  // stage 2: counters\n"
       "  reg [COUNTER_BITS-1:0] roi_count_q;\n"
       "  reg [COUNTER_BITS-1:0] green_count_q;\n"
       "  reg [COUNTER_BITS-1:0] pixels_seen_q;\n"
       "\n"
       "  assign roi_count   = roi_count_q;\n"
       "  assign green_count = green_count_q;\n"
       "\n"
       "  wire frame_done = pixels_seen_q == FRAME_PIXELS;\n"
       "\n"
       "  // frame-end grade: green/roi > 1/2 and > 1/4 as shift-compares\n"
       "  wire [COUNTER_BITS:0]   green_x2 = {green_count_q, 1'b0};  // green << 1\n"
       "  wire [COUNTER_BITS+1:0] green_x4 = {green_count_q, 2'b00}; // green << 2\n"
       "  wire seriously_damaged = green_x2 > {1'b0, roi_count_q};\n"
       "  wire damaged           = green_x4 > {2'b00, roi_count_q};\n"
       "\n";
  v << "  always @(posedge clk) begin\n"
       "    if (rst) begin\n"
       "      roi_count_q   <= {COUNTER_BITS{1'b0}};\n"
       "      green_count_q <= {COUNTER_BITS{1'b0}};\n"
       "      pixels_seen_q <= {COUNTER_BITS{1'b0}};\n"
       "      out_r         <= 8'd0;\n"
       "      out_g         <= 8'd0;\n"
       "      out_b         <= 8'd0;\n"
       "      out_green     <= 1'b0;\n"
       "      grade         <= GRADE_NOT_DAMAGED;\n"
       "      grade_valid   <= 1'b0;\n"
       "    end else begin\n"
       "      if (pixel_valid && !frame_done) begin\n"
       "        pixels_seen_q <= pixels_seen_q + 1'b1;\n"
       "        if (in_roi) begin\n"
       "          roi_count_q <= roi_count_q + 1'b1;\n"
       "        end\n"
       "        if (is_green) begin\n"
       "          green_count_q <= green_count_q + 1'b1;\n"
       "        end\n"
       "        // stage 3: overlay mux\n"
       "        out_r     <= is_green ? MARKER_R : pixel_r;\n"
       "        out_g     <= is_green ? MARKER_G : pixel_g;\n"
       "        out_b     <= is_green ? MARKER_B : pixel_b;\n"
       "        out_green <= is_green;\n"
       "      end\n"
       "      if (frame_done && !grade_valid) begin\n"
       "        grade <= seriously_damaged ? GRADE_SERIOUSLY_DAMAGED\n"
       "                                   : (damaged ? GRADE_DAMAGED : GRADE_NOT_DAMAGED);\n"
       "        grade_valid <= 1'b1;\n"
       "      end\n"
       "    end\n"
       "  end\n"
       "\n"
       "endmodule\n";
  return v.str();
}

bool structurally_balanced(const std::string& text) {
  enum class Block { module_block, begin_block, case_block };
  std::vector<Block> stack;

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    // comments
    if (text[i] == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') {
        ++i;
      }
      continue;
    }
    if (text[i] == '/' && i + 1 < n && text[i + 1] == '*') {
      i += 2;
      while (i + 1 < n && !(text[i] == '*' && text[i + 1] == '/')) {
        ++i;
      }
      i = std::min(n, i + 2);
      continue;
    }
    if (!(std::isalpha(static_cast<unsigned char>(text[i])) ||
          text[i] == '_')) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                     text[i] == '_' || text[i] == '$')) {
      ++i;
    }
    const std::string token = text.substr(start, i - start);
    if (token == "module") {
      stack.push_back(Block::module_block);
    } else if (token == "begin") {
      stack.push_back(Block::begin_block);
    } else if (token == "case" || token == "casez" || token == "casex") {
      stack.push_back(Block::case_block);
    } else if (token == "end") {
      if (stack.empty() || stack.back() != Block::begin_block) {
        return false;
      }
      stack.pop_back();
    } else if (token == "endmodule") {
      if (stack.empty() || stack.back() != Block::module_block) {
        return false;
      }
      stack.pop_back();
    } else if (token == "endcase") {
      if (stack.empty() || stack.back() != Block::case_block) {
        return false;
      }
      stack.pop_back();
    }
  }
  return stack.empty();
}

} // namespace spud::hdl_emit
