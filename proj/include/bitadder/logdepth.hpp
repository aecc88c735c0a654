// Logarithmic-depth bit addition: parallel full-adder rounds compress every
// significance layer until no layer holds more than two wires, and a
// Brent-Kung prefix adder finishes the remaining two numbers.
#pragma once

#include <optional>

#include "bitadder/generators.hpp"

namespace bitadder {

struct LogDepthStats {
  // Maximum layer height before each parallel round.
  std::vector<uint32_t> round_max_heights;
};

// Compresses the seeded layers and returns the output wires in increasing
// significance order (not marked). Rounds use a strict barrier: wires
// produced in a round are not consumed before the next one.
std::vector<WeightedWire> reduce_logdepth(Circuit& c,
                                          const std::vector<WeightedWire>& seeds,
                                          LogDepthStats* stats = nullptr);

Circuit generate_ba_logdepth(const std::vector<uint32_t>& s,
                             GenOptions opt = {},
                             LogDepthStats* stats = nullptr);

// Adds two binary numbers aligned at `base_significance`; unequal lengths
// are padded with constant 0 at no gate cost. Emits k+1 outputs where k is
// the longer length. Size is at most ~5.5k gates and depth at most
// 2*ceil(log2 k) combine levels plus a constant.
std::vector<WeightedWire> emit_brent_kung(Circuit& c,
                                          const std::vector<WireRef>& a,
                                          const std::vector<WireRef>& b,
                                          uint32_t base_significance);

// Partial products followed by the log-depth reduction.
Circuit generate_mult_logdepth(uint32_t n, LogDepthStats* stats = nullptr);

}  // namespace bitadder
