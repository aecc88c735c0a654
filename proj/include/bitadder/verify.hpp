// Arithmetic oracle and equivalence checking. The oracle is plain
// big-integer arithmetic on the significance vector, independent of circuit
// evaluation; checking runs bit-parallel, 64 assignments per machine word.
#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "bitadder/circuit.hpp"

namespace bitadder {

BigUint oracle_value(const std::vector<uint32_t>& s,
                     const std::vector<uint8_t>& assignment);

struct Counterexample {
  std::vector<uint8_t> assignment;
  BigUint expected;
  BigUint actual;
};

struct VerificationReport {
  enum class Mode { exhaustive, random };
  Mode mode = Mode::exhaustive;
  uint64_t cases_checked = 0;
  uint64_t mismatches = 0;
  std::optional<Counterexample> first_counterexample;
  std::chrono::duration<double> elapsed{0};

  bool ok() const { return mismatches == 0; }
  std::string summary() const;
};

// Sweeps all 2^n assignments, stopping at the first mismatching block.
// Throws when n exceeds limit_bits.
VerificationReport verify_exhaustive(const Circuit& c,
                                     const std::vector<uint32_t>& s,
                                     uint32_t limit_bits = 24);

// Uniform assignments from a fixed-seed PRNG; bit-reproducible.
VerificationReport verify_random(const Circuit& c,
                                 const std::vector<uint32_t>& s,
                                 uint64_t trials, uint64_t seed);

// Same checks against the integer-product oracle for MULT circuits
// (inputs 0..n-1 = x, n..2n-1 = y).
VerificationReport verify_mult_exhaustive(const Circuit& c, uint32_t n,
                                          uint32_t limit_bits = 24);
VerificationReport verify_mult_random(const Circuit& c, uint32_t n,
                                      uint64_t trials, uint64_t seed);

struct BenchRow {
  std::string function;
  uint64_t n = 0;
  std::string method;
  uint64_t size = 0;
  uint64_t depth = 0;
};

// which: 1 = SUM sizes (FA vs MDFA), 2 = MULT sizes (five designs),
// 3 = log-depth size/depth for SUM, ADD and MULT.
std::vector<BenchRow> reproduce_table(int which);
// Multiplier size sweep for 40 <= n <= 300 (step 20), five designs.
std::vector<BenchRow> reproduce_fig10();

// Header `function,n,method,size,depth`, LF line endings.
std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace bitadder
