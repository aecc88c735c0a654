// Fixed building blocks for bit addition, each with an exact gate budget
// that is checked on every call: HA (2), FA (5), FA reusing a precomputed
// parity (4), pair carry (1), MDFA (8), MDFA' (6).
#pragma once

#include <utility>

#include "bitadder/circuit.hpp"

namespace bitadder {

// Two bits (u, v) kept in the encoding (parity, rep) = (u ^ v, u). Neither
// virtual bit needs its own wire besides `rep`; decode() recovers both.
struct BitPair {
  WireRef parity;
  WireRef rep;
};

struct SumCarry {
  WireRef sum;
  WireRef carry;
};

struct MdfaResult {
  WireRef b0;
  BitPair next;  // one significance level up, pair-encoded
};

// sum = a ^ b, carry = a & b. Adds exactly 2 gates.
SumCarry emit_half_adder(Circuit& c, WireRef a, WireRef b);

// a + b + d = sum + 2*carry. Adds exactly 5 gates.
SumCarry emit_full_adder(Circuit& c, WireRef a, WireRef b, WireRef d);

// Full adder over a pair-encoded (u, v) plus d; the parity wire u^v is
// already available, so only 4 gates are added.
SumCarry emit_full_adder_reusing_parity(Circuit& c, BitPair pair, WireRef d);

// carry = u & v, computed as rep > parity. Adds exactly 1 gate; the pair's
// parity wire is the surviving sum bit.
WireRef emit_pair_carry(Circuit& c, BitPair pair);

// u1 + u2 + t + u4 + u5 = b0 + 2*(a1 + b1), with both input pairs and the
// output pair in the (parity, rep) encoding. Adds exactly 8 gates.
MdfaResult emit_mdfa(Circuit& c, BitPair pair1, WireRef t, BitPair pair2);

// The 4-input variant: u1 + u2 + u4 + u5 = b0 + 2*(a1 + b1). Adds exactly
// 6 gates (the MDFA netlist with t fixed to constant 0 and folded).
MdfaResult emit_mdfa_prime(Circuit& c, BitPair pair1, BitPair pair2);

}  // namespace bitadder
