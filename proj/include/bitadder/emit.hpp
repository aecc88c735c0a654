// Folding gate emission. A Lit is a constant or a possibly-negated wire;
// emit_op() builds a gate only when the result genuinely depends on two
// distinct wires, absorbing constants and operand negations into the opcode.
#pragma once

#include "bitadder/circuit.hpp"

namespace bitadder {

struct Lit {
  enum class Tag : uint8_t { zero, one, wire };
  Tag tag = Tag::zero;
  WireRef w{};
  bool neg = false;

  static constexpr Lit zero() { return {}; }
  static constexpr Lit one() { return {Tag::one, {}, false}; }
  static constexpr Lit constant(bool v) { return v ? one() : zero(); }
  static constexpr Lit wire(WireRef w, bool neg = false) {
    return {Tag::wire, w, neg};
  }

  constexpr bool is_const() const { return tag != Tag::wire; }
  constexpr bool const_val() const { return tag == Tag::one; }
  constexpr bool operator==(const Lit&) const = default;
};

// Converts a raw reference: constant refs become constant lits.
inline Lit lit_of(WireRef w) {
  if (w.kind == WireKind::constant) return Lit::constant(w.index != 0);
  return Lit::wire(w);
}

inline Lit lit_not(Lit l) {
  if (l.is_const()) return Lit::constant(!l.const_val());
  l.neg = !l.neg;
  return l;
}

// Truth-table algebra on the 4-bit opcode.
constexpr uint8_t tt_neg_a(uint8_t tt) {
  return static_cast<uint8_t>(((tt & 0x3) << 2) | ((tt >> 2) & 0x3));
}
constexpr uint8_t tt_neg_b(uint8_t tt) {
  return static_cast<uint8_t>(((tt & 0x5) << 1) | ((tt >> 1) & 0x5));
}

// Emits `op(a, b)`, adding at most one gate.
Lit emit_op(Circuit& c, BinOp op, Lit a, Lit b);

// Turns a lit into a plain wire reference; a negated lit costs one gate
// (XOR with constant 1), constants map to the constant nodes.
WireRef materialize(Circuit& c, Lit l);

}  // namespace bitadder
