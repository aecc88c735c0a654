// Bit-adder synthesis for arbitrary significance vectors: the layer-by-layer
// HA/FA reduction (size <= 5n - 3m) and the MDFA-based reduction
// (size <= floor(4.5n) - 2m).
#pragma once

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "bitadder/blocks.hpp"
#include "bitadder/circuit.hpp"

namespace bitadder {

struct WeightedWire {
  WireRef wire;
  uint32_t significance;
};

// Layer storage is indexed by significance, so huge sparse weights are
// rejected up front.
inline constexpr uint32_t kDefaultSignificanceLimit = 1u << 20;

struct GenOptions {
  uint32_t significance_limit = kDefaultSignificanceLimit;
};

void check_significances(const std::vector<uint32_t>& s, const GenOptions& opt);

// HA/FA reduction over the seeded layers. Outputs are returned in strictly
// increasing significance order and are not marked on the circuit. When
// `cap` is set, the layer at that significance is combined carry-free
// (callers must guarantee the discarded carries are identically zero).
std::vector<WeightedWire> reduce_dadda(Circuit& c,
                                       const std::vector<WeightedWire>& seeds,
                                       std::optional<uint32_t> cap = {});

std::vector<WeightedWire> reduce_efficient(
    Circuit& c, const std::vector<WeightedWire>& seeds,
    std::optional<uint32_t> cap = {});

Circuit generate_ba_dadda(const std::vector<uint32_t>& s, GenOptions opt = {});
Circuit generate_ba_efficient(const std::vector<uint32_t>& s,
                              GenOptions opt = {});

// Step-wise interface to the MDFA-based reduction. Construction runs the
// pairing phase (one XOR per pair, rep = the earlier wire); each
// reduce_min_layer() call empties the minimum non-empty layer and yields
// exactly one output.
class EfficientReducer {
 public:
  EfficientReducer(Circuit& c, const std::vector<WeightedWire>& seeds,
                   std::optional<uint32_t> cap = {});

  bool done() const { return layers_.empty(); }
  WeightedWire reduce_min_layer();
  void transfer_carry(uint32_t significance, WireRef carry);

  size_t pair_count(uint32_t significance) const;
  bool has_unpaired(uint32_t significance) const;

 private:
  struct Layer {
    std::deque<BitPair> pairs;
    std::optional<WireRef> unpaired;
    size_t bit_count() const {
      return 2 * pairs.size() + (unpaired ? 1 : 0);
    }
  };

  Circuit& c_;
  std::map<uint32_t, Layer> layers_;
  std::optional<uint32_t> cap_;
};

}  // namespace bitadder
