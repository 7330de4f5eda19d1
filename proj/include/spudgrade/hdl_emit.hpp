// Copyright Contributors to the spudgrade project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "spudgrade/core.hpp"

namespace spud::hdl_emit {

/// Parameters of the emitted pipeline. counter_bits is derived from the
/// frame size: ceil(log2(width*height + 1)).
struct EmitConfig {
  Thresholds thresholds;
  int width = 640;
  int height = 480;
  std::string module_name = "greening_pipeline";
};

int counter_bits(const EmitConfig& config);

/// Renders the pixel-serial datapath as one synthesizable Verilog-2001
/// module: clock/reset/pixel-valid inputs, 8-bit RGB channels, the two
/// threshold comparators as literal constants, a signed 9-bit subtractor,
/// two frame-sized counters, shift-compare grade logic, a 2-bit grade
/// output, and the overlay mux. Deterministic text; throws invalid_config.
std::string emit_pipeline(const EmitConfig& config);

/// Token-level structural check on emitted text: module/endmodule,
/// begin/end, and case/endcase must nest and balance. Comments are skipped.
bool structurally_balanced(const std::string& text);

} // namespace spud::hdl_emit
