#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bitadder/logdepth.hpp"
#include "bitadder/verify.hpp"

using namespace bitadder;

namespace {

std::vector<uint32_t> zeros(uint32_t n) { return std::vector<uint32_t>(n, 0); }

std::vector<uint32_t> add_shape(uint32_t n) {
  std::vector<uint32_t> s;
  for (uint32_t r = 0; r < 2; ++r)
    for (uint32_t i = 0; i < n; ++i) s.push_back(i);
  return s;
}

uint32_t log2ceil(uint32_t n) {
  uint32_t l = 0;
  while ((1u << l) < n) ++l;
  return l;
}

}  // namespace

TEST_CASE("brent-kung k=1 is a half adder") {
  Circuit c(2);
  auto outs = emit_brent_kung(c, {c.input(0)}, {c.input(1)}, 0);
  CHECK(c.size() == 2);
  REQUIRE(outs.size() == 2);
  for (const auto& o : outs) c.mark_output(o.wire, o.significance);
  CHECK(c.weighted_output_value({1, 1}) == 2);
}

TEST_CASE("brent-kung full carry propagation: 255 + 1 = 256") {
  Circuit c(16);
  std::vector<WireRef> a, b;
  for (uint32_t i = 0; i < 8; ++i) a.push_back(c.input(i));
  for (uint32_t i = 0; i < 8; ++i) b.push_back(c.input(8 + i));
  auto outs = emit_brent_kung(c, a, b, 0);
  REQUIRE(outs.size() == 9);
  for (const auto& o : outs) c.mark_output(o.wire, o.significance);
  std::vector<uint8_t> in(16, 0);
  for (uint32_t i = 0; i < 8; ++i) in[i] = 1;  // a = 255
  in[8] = 1;                                   // b = 1
  CHECK(c.weighted_output_value(in) == 256);
}

TEST_CASE("brent-kung adds exhaustively for k <= 6") {
  for (uint32_t k : {2u, 3u, 5u, 6u}) {
    Circuit c(2 * k);
    std::vector<WireRef> a, b;
    for (uint32_t i = 0; i < k; ++i) a.push_back(c.input(i));
    for (uint32_t i = 0; i < k; ++i) b.push_back(c.input(k + i));
    for (const auto& o : emit_brent_kung(c, a, b, 0))
      c.mark_output(o.wire, o.significance);
    for (uint32_t x = 0; x < (1u << k); ++x)
      for (uint32_t y = 0; y < (1u << k); ++y) {
        std::vector<uint8_t> in(2 * k);
        for (uint32_t i = 0; i < k; ++i) {
          in[i] = (x >> i) & 1;
          in[k + i] = (y >> i) & 1;
        }
        CHECK(c.weighted_output_value(in) == x + y);
      }
    CHECK(c.depth() <= 2 * log2ceil(k) * 2 + 4);
  }
}

TEST_CASE("brent-kung pads the shorter operand for free") {
  Circuit c(8);
  std::vector<WireRef> a, b;
  for (uint32_t i = 0; i < 6; ++i) a.push_back(c.input(i));
  for (uint32_t i = 0; i < 2; ++i) b.push_back(c.input(6 + i));
  size_t before = c.size();
  auto outs = emit_brent_kung(c, a, b, 3);
  CHECK(outs.size() == 7);
  CHECK(outs.front().significance == 3);
  // against a same-width addition, the padded positions cost strictly less
  Circuit c2(12);
  std::vector<WireRef> a2, b2;
  for (uint32_t i = 0; i < 6; ++i) a2.push_back(c2.input(i));
  for (uint32_t i = 0; i < 6; ++i) b2.push_back(c2.input(6 + i));
  emit_brent_kung(c2, a2, b2, 0);
  CHECK(c.size() - before < c2.size());
  for (const auto& o : outs) c.mark_output(o.wire, o.significance);
  std::vector<uint32_t> s;
  for (uint32_t i = 0; i < 6; ++i) s.push_back(3 + i);
  for (uint32_t i = 0; i < 2; ++i) s.push_back(3 + i);
  CHECK(verify_exhaustive(c, s).mismatches == 0);
}

TEST_CASE("logdepth generator equals the oracle on a small corpus") {
  std::vector<std::vector<uint32_t>> corpus = {
      zeros(1), zeros(2), zeros(7), zeros(13), add_shape(3), add_shape(6),
      {2, 3, 3}, {0, 1, 1, 5, 5, 5, 6}, {0, 0, 1, 2, 3}, {4, 4, 4, 4, 4, 4}};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    uint32_t n = 1 + static_cast<uint32_t>(rng() % 13);
    std::vector<uint32_t> s(n);
    for (auto& v : s) v = static_cast<uint32_t>(rng() % 6);
    corpus.push_back(s);
  }
  for (const auto& s : corpus) {
    Circuit c = generate_ba_logdepth(s);
    CHECK(!has_dangling_gates(c));
    CHECK(verify_exhaustive(c, s).mismatches == 0);
  }
}

TEST_CASE("one bit per layer needs no gates") {
  std::vector<uint32_t> s;
  for (uint32_t i = 0; i < 12; ++i) s.push_back(i);
  Circuit c = generate_ba_logdepth(s);
  CHECK(c.size() == 0);
  CHECK(c.depth() == 0);
  CHECK(c.outputs().size() == 12);
}

TEST_CASE("round contract: heights fall by two thirds") {
  for (uint32_t n : {50u, 320u, 1000u}) {
    LogDepthStats stats;
    generate_ba_logdepth(zeros(n), {}, &stats);
    REQUIRE(stats.round_max_heights.size() >= 2);
    for (size_t r = 0; r + 1 < stats.round_max_heights.size(); ++r) {
      uint32_t h = stats.round_max_heights[r];
      uint32_t next = stats.round_max_heights[r + 1];
      CHECK(next <= (2 * h + 2) / 3 + 1);
    }
  }
}

TEST_CASE("depth ceilings for the benchmark range") {
  for (uint32_t n : {10u, 20u, 40u, 80u}) {
    CHECK(generate_ba_logdepth(zeros(n)).depth() <= 4 * log2ceil(n));
    CHECK(generate_ba_logdepth(add_shape(n)).depth() <= 5 * log2ceil(n));
    CHECK(generate_mult_logdepth(n).depth() <= 10 * log2ceil(n));
  }
}

TEST_CASE("logdepth sum size stays linear") {
  for (uint32_t n : {10u, 64u, 320u, 1024u})
    CHECK(generate_ba_logdepth(zeros(n)).size() <= 9 * n);
}

TEST_CASE("logdepth multiplier is exhaustively correct up to n = 6") {
  for (uint32_t n = 1; n <= 6; ++n) {
    Circuit c = generate_mult_logdepth(n);
    CHECK(verify_mult_exhaustive(c, n).mismatches == 0);
    CHECK(!has_dangling_gates(c));
  }
}
