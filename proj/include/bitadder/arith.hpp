// Named-function generators on top of the bit-adder reductions: SUM_n,
// ADD_n, adding a single bit to an n-bit number, and multipliers (Dadda,
// MDFA, Karatsuba hybrids).
#pragma once

#include <vector>

#include "bitadder/generators.hpp"

namespace bitadder {

enum class BaMethod { dadda, mdfa };

struct MultMethod {
  enum class Kind { dadda, mdfa, karatsuba };
  enum class Base { dadda, mdfa, pure };

  Kind kind = Kind::mdfa;
  Base base = Base::mdfa;    // karatsuba only
  uint32_t threshold = 20;   // karatsuba only; recursion stops at n <= threshold

  static MultMethod dadda() { return {Kind::dadda, Base::dadda, 20}; }
  static MultMethod mdfa() { return {Kind::mdfa, Base::mdfa, 20}; }
  static MultMethod karatsuba(Base base = Base::mdfa, uint32_t threshold = 20) {
    return {Kind::karatsuba, base, threshold};
  }
};

// SUM_n: the all-zeros significance vector.
Circuit generate_sum(uint32_t n, BaMethod method);

// ADD_n: s = (0..n-1, 0..n-1); 2n inputs, n+1 outputs.
Circuit generate_add(uint32_t n, BaMethod method);

// Adds one bit to an n-bit number as a chain of n half adders; size is
// exactly 2n. Input 0 is the extra bit, inputs 1..n the number.
Circuit generate_add_bit(uint32_t n);

// Emits the n*n partial products x_i & y_j at significances i + j.
std::vector<WeightedWire> generate_partial_products(
    Circuit& c, const std::vector<WireRef>& x, const std::vector<WireRef>& y);

// MULT_n: 2n inputs (x = inputs 0..n-1, y = inputs n..2n-1); outputs are the
// product bits, with provably-zero top positions omitted.
Circuit generate_mult(uint32_t n, const MultMethod& method);

}  // namespace bitadder
