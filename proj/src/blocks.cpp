#include "bitadder/blocks.hpp"

namespace bitadder {

namespace {

struct BudgetGuard {
  Circuit& c;
  size_t start;
  size_t expected;
  BudgetGuard(Circuit& c, size_t expected)
      : c(c), start(c.size()), expected(expected) {}
  ~BudgetGuard() noexcept(false) {
    if (c.size() - start != expected)
      throw std::logic_error("block emitter broke its gate budget");
  }
};

}  // namespace

SumCarry emit_half_adder(Circuit& c, WireRef a, WireRef b) {
  BudgetGuard guard(c, 2);
  WireRef sum = c.add_gate(OP_XOR, a, b);
  WireRef carry = c.add_gate(OP_AND, a, b);
  return {sum, carry};
}

SumCarry emit_full_adder(Circuit& c, WireRef a, WireRef b, WireRef d) {
  BudgetGuard guard(c, 5);
  WireRef g1 = c.add_gate(OP_XOR, a, b);
  WireRef g2 = c.add_gate(OP_XOR, b, d);
  WireRef g3 = c.add_gate(OP_OR, g1, g2);
  WireRef sum = c.add_gate(OP_XOR, g1, d);
  WireRef carry = c.add_gate(OP_XOR, g3, sum);
  return {sum, carry};
}

SumCarry emit_full_adder_reusing_parity(Circuit& c, BitPair pair, WireRef d) {
  BudgetGuard guard(c, 4);
  WireRef g2 = c.add_gate(OP_XOR, pair.rep, d);
  WireRef g3 = c.add_gate(OP_OR, pair.parity, g2);
  WireRef sum = c.add_gate(OP_XOR, pair.parity, d);
  WireRef carry = c.add_gate(OP_XOR, g3, sum);
  return {sum, carry};
}

WireRef emit_pair_carry(Circuit& c, BitPair pair) {
  BudgetGuard guard(c, 1);
  return c.add_gate(OP_GT, pair.rep, pair.parity);
}

MdfaResult emit_mdfa(Circuit& c, BitPair pair1, WireRef t, BitPair pair2) {
  BudgetGuard guard(c, 8);
  WireRef p1 = pair1.parity, q1 = pair1.rep;
  WireRef p2 = pair2.parity, q2 = pair2.rep;
  WireRef g2 = c.add_gate(OP_XOR, q1, t);
  WireRef g3 = c.add_gate(OP_OR, p1, g2);
  WireRef g4 = c.add_gate(OP_XOR, p1, t);
  WireRef a1 = c.add_gate(OP_XOR, g3, g4);
  WireRef g6 = c.add_gate(OP_XOR, q2, g4);
  WireRef b0 = c.add_gate(OP_XOR, p2, g4);
  WireRef g8 = c.add_gate(OP_GT, g6, p2);
  WireRef a1b1 = c.add_gate(OP_XOR, g3, g8);
  return {b0, {a1b1, a1}};
}

MdfaResult emit_mdfa_prime(Circuit& c, BitPair pair1, BitPair pair2) {
  BudgetGuard guard(c, 6);
  WireRef p1 = pair1.parity, q1 = pair1.rep;
  WireRef p2 = pair2.parity, q2 = pair2.rep;
  WireRef g3 = c.add_gate(OP_OR, p1, q1);
  WireRef a1 = c.add_gate(OP_XOR, g3, p1);
  WireRef g6 = c.add_gate(OP_XOR, q2, p1);
  WireRef b0 = c.add_gate(OP_XOR, p2, p1);
  WireRef g8 = c.add_gate(OP_GT, g6, p2);
  WireRef a1b1 = c.add_gate(OP_XOR, g3, g8);
  return {b0, {a1b1, a1}};
}

}  // namespace bitadder
