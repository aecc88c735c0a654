// Gate-level circuits over the full binary basis: two-input gates on top of
// input variables and the constants 0/1, with significance-tagged outputs.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bitadder {

using BigUint = boost::multiprecision::cpp_int;

// One of the 16 binary Boolean functions, keyed by its 4-bit truth table.
// Bit (2a + b) of `tt` holds the value on the input pair (a, b), so the rows
// are ordered 00, 01, 10, 11.
struct BinOp {
  uint8_t tt = 0;

  constexpr bool eval(bool a, bool b) const {
    return (tt >> ((a ? 2 : 0) | (b ? 1 : 0))) & 1;
  }

  // Applies the op lane-wise to 64 packed evaluations.
  uint64_t eval_words(uint64_t a, uint64_t b) const {
    switch (tt) {
      case 0x6: return a ^ b;
      case 0x8: return a & b;
      case 0xe: return a | b;
      case 0x4: return a & ~b;
      case 0x9: return ~(a ^ b);
      case 0x1: return ~(a | b);
      case 0x7: return ~(a & b);
      default: {
        uint64_t r = 0;
        if (tt & 1) r |= ~a & ~b;
        if (tt & 2) r |= ~a & b;
        if (tt & 4) r |= a & ~b;
        if (tt & 8) r |= a & b;
        return r;
      }
    }
  }

  constexpr bool operator==(const BinOp&) const = default;
};

inline constexpr BinOp OP_FALSE{0x0};
inline constexpr BinOp OP_NOR{0x1};
inline constexpr BinOp OP_LT{0x2};    // ~a & b
inline constexpr BinOp OP_NOT_A{0x3};
inline constexpr BinOp OP_GT{0x4};    // a & ~b
inline constexpr BinOp OP_NOT_B{0x5};
inline constexpr BinOp OP_XOR{0x6};
inline constexpr BinOp OP_NAND{0x7};
inline constexpr BinOp OP_AND{0x8};
inline constexpr BinOp OP_XNOR{0x9};
inline constexpr BinOp OP_B{0xa};
inline constexpr BinOp OP_LE{0xb};    // ~a | b
inline constexpr BinOp OP_A{0xc};
inline constexpr BinOp OP_GE{0xd};    // a | ~b
inline constexpr BinOp OP_OR{0xe};
inline constexpr BinOp OP_TRUE{0xf};

const char* op_name(BinOp op);

enum class WireKind : uint8_t { input = 0, constant = 1, gate = 2 };

// Reference to a source of a Boolean value: an input, one of the two
// constant nodes, or an earlier gate.
struct WireRef {
  WireKind kind = WireKind::constant;
  uint32_t index = 0;

  static constexpr WireRef input(uint32_t i) { return {WireKind::input, i}; }
  static constexpr WireRef constant(bool v) {
    return {WireKind::constant, v ? 1u : 0u};
  }
  static constexpr WireRef gate(uint32_t i) { return {WireKind::gate, i}; }

  constexpr bool operator==(const WireRef&) const = default;
};

struct Gate {
  BinOp op;
  WireRef a, b;
};

struct Output {
  WireRef wire;
  uint32_t significance;
};

// An acyclic circuit under construction: gates may only reference inputs,
// constants, and earlier gates, so list order doubles as topological order.
// After construction the circuit is treated as immutable; evaluation is
// read-only and uses caller-local scratch.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(uint32_t input_count) : input_count_(input_count) {}

  uint32_t input_count() const { return input_count_; }
  size_t size() const { return gates_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<Output>& outputs() const { return outputs_; }

  WireRef input(uint32_t i) const {
    if (i >= input_count_)
      throw std::invalid_argument("input index out of range");
    return WireRef::input(i);
  }

  // Appends one gate; operands must already exist.
  WireRef add_gate(BinOp op, WireRef a, WireRef b) {
    check_ref(a);
    check_ref(b);
    if (op.tt > 0xf) throw std::invalid_argument("bad opcode");
    gates_.push_back({op, a, b});
    return WireRef::gate(static_cast<uint32_t>(gates_.size() - 1));
  }

  // Marks `w` as the next output; significances must strictly increase.
  void mark_output(WireRef w, uint32_t significance) {
    check_ref(w);
    if (!outputs_.empty() && significance <= outputs_.back().significance)
      throw std::invalid_argument("non-monotone output significance");
    outputs_.push_back({w, significance});
  }

  bool valid_ref(WireRef w) const {
    switch (w.kind) {
      case WireKind::input: return w.index < input_count_;
      case WireKind::constant: return w.index <= 1;
      case WireKind::gate: return w.index < gates_.size();
    }
    return false;
  }

  std::vector<uint8_t> evaluate(const std::vector<uint8_t>& assignment) const;
  BigUint weighted_output_value(const std::vector<uint8_t>& assignment) const;

  // Longest path (in gates) from any source to a marked output; 0 when all
  // outputs are inputs or constants.
  size_t depth() const;
  std::vector<uint32_t> gate_depths() const;

 private:
  void check_ref(WireRef w) const {
    if (!valid_ref(w)) throw std::invalid_argument("invalid wire reference");
  }

  uint32_t input_count_ = 0;
  std::vector<Gate> gates_;
  std::vector<Output> outputs_;
};

// Rewrites the circuit with constant operands propagated and single-operand
// gates absorbed into their consumers. Preserves the computed function and
// never increases size. Unreferenced gates are kept (no dead-code sweep).
Circuit fold_constants(const Circuit& c);

// Structural lint: true when some gate is unreachable from every output.
bool has_dangling_gates(const Circuit& c);

// Drops gates unreachable from the outputs, preserving relative order.
// Purely structural; gate functions are untouched.
Circuit sweep_dangling(const Circuit& c);

}  // namespace bitadder
