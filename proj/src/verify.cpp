#include "bitadder/verify.hpp"

#include <bit>
#include <random>
#include <sstream>

#include "bitadder/arith.hpp"
#include "bitadder/logdepth.hpp"

namespace bitadder {

BigUint oracle_value(const std::vector<uint32_t>& s,
                     const std::vector<uint8_t>& assignment) {
  if (s.size() != assignment.size())
    throw std::invalid_argument("assignment length mismatch");
  BigUint v = 0;
  for (size_t i = 0; i < s.size(); ++i)
    if (assignment[i]) v += BigUint(1) << s[i];
  return v;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << "mode=" << (mode == Mode::exhaustive ? "exhaustive" : "random")
     << " cases=" << cases_checked << " mismatches=" << mismatches
     << " elapsed=" << elapsed.count() << "s";
  if (first_counterexample) {
    os << "\ncounterexample: x=";
    for (uint8_t b : first_counterexample->assignment)
      os << (b ? '1' : '0');
    os << " expected=" << first_counterexample->expected
       << " actual=" << first_counterexample->actual;
  }
  return os.str();
}

namespace {

constexpr uint64_t kLanePatterns[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

void eval_block(const Circuit& c, const std::vector<uint64_t>& in_words,
                std::vector<uint64_t>& gate_words,
                std::vector<uint64_t>& out_words) {
  gate_words.resize(c.size());
  auto value = [&](WireRef w) -> uint64_t {
    switch (w.kind) {
      case WireKind::input: return in_words[w.index];
      case WireKind::constant: return w.index ? ~0ull : 0ull;
      case WireKind::gate: return gate_words[w.index];
    }
    return 0;
  };
  const std::vector<Gate>& gates = c.gates();
  for (size_t i = 0; i < gates.size(); ++i)
    gate_words[i] = gates[i].op.eval_words(value(gates[i].a), value(gates[i].b));
  out_words.resize(c.outputs().size());
  for (size_t j = 0; j < c.outputs().size(); ++j)
    out_words[j] = value(c.outputs()[j].wire);
}

std::vector<uint8_t> lane_assignment(const std::vector<uint64_t>& in_words,
                                     unsigned lane) {
  std::vector<uint8_t> a(in_words.size());
  for (size_t i = 0; i < in_words.size(); ++i)
    a[i] = static_cast<uint8_t>((in_words[i] >> lane) & 1);
  return a;
}

BigUint lane_actual(const Circuit& c, const std::vector<uint64_t>& out_words,
                    unsigned lane) {
  BigUint v = 0;
  for (size_t j = 0; j < out_words.size(); ++j)
    if ((out_words[j] >> lane) & 1)
      v += BigUint(1) << c.outputs()[j].significance;
  return v;
}

// Checks one 64-lane block against the weighted-sum oracle, accumulated in
// bit-sliced form (slice t holds bit t of all 64 lane sums).
class WeightedOracleChecker {
 public:
  WeightedOracleChecker(const Circuit& c, const std::vector<uint32_t>& s)
      : c_(c), s_(s) {
    uint32_t top = 0;
    BigUint total = 0;
    for (uint32_t v : s) total += BigUint(1) << v;
    if (total > 0) top = static_cast<uint32_t>(boost::multiprecision::msb(total));
    slices_.resize(top + 2, 0);
    covered_.assign(top + 2, 0);
    for (const Output& o : c.outputs())
      if (o.significance < covered_.size()) covered_[o.significance] = 1;
  }

  // Returns a lane mask of mismatches (restricted to valid_lanes).
  uint64_t check(const std::vector<uint64_t>& in_words,
                 const std::vector<uint64_t>& out_words, uint64_t valid_lanes) {
    std::fill(slices_.begin(), slices_.end(), 0);
    for (size_t i = 0; i < s_.size(); ++i) {
      uint64_t carry = in_words[i] & valid_lanes;
      size_t idx = s_[i];
      while (carry) {
        uint64_t nc = slices_[idx] & carry;
        slices_[idx] ^= carry;
        carry = nc;
        ++idx;
      }
    }
    uint64_t bad = 0;
    const std::vector<Output>& outs = c_.outputs();
    for (size_t j = 0; j < outs.size(); ++j) {
      uint64_t want = outs[j].significance < slices_.size()
                          ? slices_[outs[j].significance]
                          : 0;
      bad |= (out_words[j] ^ want);
    }
    for (size_t t = 0; t < slices_.size(); ++t)
      if (!covered_[t]) bad |= slices_[t];
    return bad & valid_lanes;
  }

 private:
  const Circuit& c_;
  const std::vector<uint32_t>& s_;
  std::vector<uint64_t> slices_;
  std::vector<uint8_t> covered_;
};

template <class MakeInputs, class CheckBlock>
VerificationReport run_blocks(const Circuit& c, VerificationReport::Mode mode,
                              uint64_t total_cases, MakeInputs make_inputs,
                              CheckBlock check_block, bool stop_at_first) {
  VerificationReport rep;
  rep.mode = mode;
  auto t0 = std::chrono::steady_clock::now();
  uint64_t blocks = (total_cases + 63) / 64;
  std::vector<uint64_t> in_words(c.input_count()), gate_words, out_words;
  for (uint64_t b = 0; b < blocks; ++b) {
    uint64_t lanes_here = std::min<uint64_t>(64, total_cases - b * 64);
    uint64_t valid = lanes_here == 64 ? ~0ull : ((1ull << lanes_here) - 1);
    make_inputs(b, in_words);
    eval_block(c, in_words, gate_words, out_words);
    uint64_t bad = check_block(b, in_words, out_words, valid);
    if (bad) {
      unsigned lane = static_cast<unsigned>(std::countr_zero(bad));
      if (!rep.first_counterexample) {
        Counterexample ce;
        ce.assignment = lane_assignment(in_words, lane);
        ce.actual = lane_actual(c, out_words, lane);
        rep.first_counterexample = std::move(ce);
      }
      rep.mismatches += std::popcount(bad);
      if (stop_at_first) {
        rep.cases_checked = b * 64 + lane + 1;
        rep.mismatches = 1;
        auto t1 = std::chrono::steady_clock::now();
        rep.elapsed = t1 - t0;
        return rep;
      }
    }
  }
  rep.cases_checked = total_cases;
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

void exhaustive_inputs(uint64_t block, std::vector<uint64_t>& in_words) {
  for (size_t i = 0; i < in_words.size(); ++i) {
    if (i < 6)
      in_words[i] = kLanePatterns[i];
    else
      in_words[i] = ((block >> (i - 6)) & 1) ? ~0ull : 0ull;
  }
}

}  // namespace

VerificationReport verify_exhaustive(const Circuit& c,
                                     const std::vector<uint32_t>& s,
                                     uint32_t limit_bits) {
  if (s.size() != c.input_count())
    throw std::invalid_argument("significance vector length mismatch");
  if (c.input_count() > limit_bits)
    throw std::invalid_argument("too many inputs for exhaustive check");
  WeightedOracleChecker checker(c, s);
  uint64_t total = 1ull << c.input_count();
  auto rep = run_blocks(
      c, VerificationReport::Mode::exhaustive, total, exhaustive_inputs,
      [&](uint64_t, const std::vector<uint64_t>& in,
          const std::vector<uint64_t>& out,
          uint64_t valid) { return checker.check(in, out, valid); },
      /*stop_at_first=*/true);
  if (rep.first_counterexample)
    rep.first_counterexample->expected =
        oracle_value(s, rep.first_counterexample->assignment);
  return rep;
}

VerificationReport verify_random(const Circuit& c,
                                 const std::vector<uint32_t>& s,
                                 uint64_t trials, uint64_t seed) {
  if (s.size() != c.input_count())
    throw std::invalid_argument("significance vector length mismatch");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  WeightedOracleChecker checker(c, s);
  std::mt19937_64 rng(seed);
  auto rep = run_blocks(
      c, VerificationReport::Mode::random, trials,
      [&](uint64_t, std::vector<uint64_t>& in) {
        for (uint64_t& w : in) w = rng();
      },
      [&](uint64_t, const std::vector<uint64_t>& in,
          const std::vector<uint64_t>& out,
          uint64_t valid) { return checker.check(in, out, valid); },
      /*stop_at_first=*/false);
  if (rep.first_counterexample)
    rep.first_counterexample->expected =
        oracle_value(s, rep.first_counterexample->assignment);
  return rep;
}

namespace {

// Product-oracle check for one block; lanes assemble x and y as integers.
uint64_t check_product_block(const Circuit& c, uint32_t n,
                             const std::vector<uint64_t>& in_words,
                             const std::vector<uint64_t>& out_words,
                             uint64_t valid) {
  uint64_t bad = 0;
  for (unsigned lane = 0; lane < 64; ++lane) {
    if (!((valid >> lane) & 1)) continue;
    BigUint x = 0, y = 0;
    for (uint32_t i = 0; i < n; ++i) {
      if ((in_words[i] >> lane) & 1) x += BigUint(1) << i;
      if ((in_words[n + i] >> lane) & 1) y += BigUint(1) << i;
    }
    BigUint expect = x * y;
    BigUint actual = 0;
    for (size_t j = 0; j < out_words.size(); ++j)
      if ((out_words[j] >> lane) & 1)
        actual += BigUint(1) << c.outputs()[j].significance;
    if (actual != expect) bad |= 1ull << lane;
  }
  return bad;
}

}  // namespace

VerificationReport verify_mult_exhaustive(const Circuit& c, uint32_t n,
                                          uint32_t limit_bits) {
  if (c.input_count() != 2 * n)
    throw std::invalid_argument("not a multiplier circuit");
  if (c.input_count() > limit_bits)
    throw std::invalid_argument("too many inputs for exhaustive check");
  uint64_t total = 1ull << c.input_count();
  auto rep = run_blocks(
      c, VerificationReport::Mode::exhaustive, total, exhaustive_inputs,
      [&](uint64_t, const std::vector<uint64_t>& in,
          const std::vector<uint64_t>& out, uint64_t valid) {
        return check_product_block(c, n, in, out, valid);
      },
      /*stop_at_first=*/true);
  if (rep.first_counterexample) {
    const std::vector<uint8_t>& a = rep.first_counterexample->assignment;
    BigUint x = 0, y = 0;
    for (uint32_t i = 0; i < n; ++i) {
      if (a[i]) x += BigUint(1) << i;
      if (a[n + i]) y += BigUint(1) << i;
    }
    rep.first_counterexample->expected = x * y;
  }
  return rep;
}

VerificationReport verify_mult_random(const Circuit& c, uint32_t n,
                                      uint64_t trials, uint64_t seed) {
  if (c.input_count() != 2 * n)
    throw std::invalid_argument("not a multiplier circuit");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::mt19937_64 rng(seed);
  auto rep = run_blocks(
      c, VerificationReport::Mode::random, trials,
      [&](uint64_t, std::vector<uint64_t>& in) {
        for (uint64_t& w : in) w = rng();
      },
      [&](uint64_t, const std::vector<uint64_t>& in,
          const std::vector<uint64_t>& out, uint64_t valid) {
        return check_product_block(c, n, in, out, valid);
      },
      /*stop_at_first=*/false);
  if (rep.first_counterexample) {
    const std::vector<uint8_t>& a = rep.first_counterexample->assignment;
    BigUint x = 0, y = 0;
    for (uint32_t i = 0; i < n; ++i) {
      if (a[i]) x += BigUint(1) << i;
      if (a[n + i]) y += BigUint(1) << i;
    }
    rep.first_counterexample->expected = x * y;
  }
  return rep;
}

namespace {

BenchRow row_of(const char* function, uint64_t n, const char* method,
                const Circuit& c) {
  return {function, n, method, c.size(), c.depth()};
}

std::vector<BenchRow> mult_design_rows(uint64_t n) {
  uint32_t un = static_cast<uint32_t>(n);
  std::vector<BenchRow> rows;
  rows.push_back(row_of("mult", n, "dadda", generate_mult(un, MultMethod::dadda())));
  rows.push_back(row_of("mult", n, "mdfa", generate_mult(un, MultMethod::mdfa())));
  rows.push_back(row_of(
      "mult", n, "karatsuba",
      generate_mult(un, MultMethod::karatsuba(MultMethod::Base::pure))));
  rows.push_back(row_of(
      "mult", n, "karatsuba-dadda",
      generate_mult(un, MultMethod::karatsuba(MultMethod::Base::dadda))));
  rows.push_back(row_of(
      "mult", n, "karatsuba-mdfa",
      generate_mult(un, MultMethod::karatsuba(MultMethod::Base::mdfa))));
  return rows;
}

}  // namespace

std::vector<BenchRow> reproduce_table(int which) {
  std::vector<BenchRow> rows;
  switch (which) {
    case 1:
      for (uint64_t n : {7, 31, 127, 511, 2047, 8191, 32767, 131071}) {
        uint32_t un = static_cast<uint32_t>(n);
        rows.push_back(row_of("sum", n, "fa", generate_sum(un, BaMethod::dadda)));
        rows.push_back(row_of("sum", n, "mdfa", generate_sum(un, BaMethod::mdfa)));
      }
      break;
    case 2:
      for (uint64_t n : {40, 80, 120, 160, 200, 240, 280})
        for (BenchRow& r : mult_design_rows(n)) rows.push_back(std::move(r));
      break;
    case 3:
      for (uint64_t n : {10, 20, 30, 40, 60, 80, 160, 320}) {
        uint32_t un = static_cast<uint32_t>(n);
        std::vector<uint32_t> s_add;
        for (uint32_t r = 0; r < 2; ++r)
          for (uint32_t i = 0; i < un; ++i) s_add.push_back(i);
        rows.push_back(row_of("add", n, "logdepth",
                              generate_ba_logdepth(s_add)));
        rows.push_back(row_of("sum", n, "logdepth",
                              generate_ba_logdepth(std::vector<uint32_t>(un, 0))));
        rows.push_back(row_of("mult", n, "logdepth", generate_mult_logdepth(un)));
      }
      break;
    default:
      throw std::invalid_argument("unknown table");
  }
  return rows;
}

std::vector<BenchRow> reproduce_fig10() {
  std::vector<BenchRow> rows;
  for (uint64_t n = 40; n <= 300; n += 20)
    for (BenchRow& r : mult_design_rows(n)) rows.push_back(std::move(r));
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "function,n,method,size,depth\n";
  for (const BenchRow& r : rows)
    os << r.function << ',' << r.n << ',' << r.method << ',' << r.size << ','
       << r.depth << '\n';
  return os.str();
}

}  // namespace bitadder
