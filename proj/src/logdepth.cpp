#include "bitadder/logdepth.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <map>

#include "bitadder/arith.hpp"
#include "bitadder/emit.hpp"

namespace bitadder {

namespace {

uint32_t bitlen(const BigUint& v) {
  return v == 0 ? 0 : static_cast<uint32_t>(boost::multiprecision::msb(v)) + 1;
}

// Group-propagate terms are built on demand: when an entire segment's
// generate signal folds to constant 0 the P product is never consumed, and
// emitting it eagerly would leave dead gates behind.
struct LazyP {
  Lit value;
  bool ready = false;
  std::function<Lit(Circuit&)> make;

  static std::shared_ptr<LazyP> of(Lit v) {
    auto n = std::make_shared<LazyP>();
    n->value = v;
    n->ready = true;
    return n;
  }
  static std::shared_ptr<LazyP> product(std::shared_ptr<LazyP> hi,
                                        std::shared_ptr<LazyP> lo) {
    auto n = std::make_shared<LazyP>();
    n->make = [hi, lo](Circuit& c) {
      return emit_op(c, OP_AND, hi->get(c), lo->get(c));
    };
    return n;
  }
  Lit get(Circuit& c) {
    if (!ready) {
      value = make(c);
      ready = true;
    }
    return value;
  }
};

// Prefix network core over lits. p/g folding makes constant-0 padding and
// gap positions free.
std::vector<Lit> brent_kung_lits(Circuit& c, std::vector<Lit> a,
                                 std::vector<Lit> b, bool want_carry_out) {
  size_t k = std::max(a.size(), b.size());
  if (k == 0) return want_carry_out ? std::vector<Lit>{Lit::zero()}
                                    : std::vector<Lit>{};
  a.resize(k, Lit::zero());
  b.resize(k, Lit::zero());

  std::vector<Lit> p(k), G(k);
  std::vector<std::shared_ptr<LazyP>> P(k);
  for (size_t i = 0; i < k; ++i) {
    p[i] = emit_op(c, OP_XOR, a[i], b[i]);
    // g of the top position only feeds the carry-out chain
    G[i] = (!want_carry_out && i + 1 == k) ? Lit::zero()
                                           : emit_op(c, OP_AND, a[i], b[i]);
    P[i] = LazyP::of(p[i]);
  }

  auto combine_g = [&](size_t i, size_t j) {
    if (G[j] == Lit::zero()) return;  // nothing to propagate
    Lit t = emit_op(c, OP_AND, P[i]->get(c), G[j]);
    G[i] = emit_op(c, OP_OR, G[i], t);
  };

  size_t max_step = 0;
  for (size_t step = 1; 2 * step - 1 < k; step <<= 1) {
    max_step = step;
    for (size_t i = 2 * step - 1; i < k; i += 2 * step) {
      if (!want_carry_out && i + 1 == k) continue;
      combine_g(i, i - step);
      // a node whose segment starts at 0 is a finished prefix; its P is
      // never consumed
      if (i != 2 * step - 1) P[i] = LazyP::product(P[i], P[i - step]);
    }
  }
  for (size_t step = max_step; step >= 1; step >>= 1) {
    for (size_t i = 3 * step - 1; i < k; i += 2 * step) {
      if (!want_carry_out && i + 1 == k) continue;
      combine_g(i, i - step);
    }
  }

  std::vector<Lit> out;
  out.reserve(k + 1);
  out.push_back(p[0]);
  for (size_t i = 1; i < k; ++i) out.push_back(emit_op(c, OP_XOR, p[i], G[i - 1]));
  if (want_carry_out) out.push_back(G[k - 1]);
  return out;
}

struct LdWire {
  WireRef w;
  uint64_t seq;
};

}  // namespace

std::vector<WeightedWire> reduce_logdepth(Circuit& c,
                                          const std::vector<WeightedWire>& seeds,
                                          LogDepthStats* stats) {
  if (seeds.empty()) return {};

  // Balanced full adder: the last operand feeds the positions that add the
  // least depth (sum +1, carry +2), which keeps the round-to-round growth of
  // the carry chains at two levels.
  auto full_adder = [&](WireRef x, WireRef y, WireRef d) {
    WireRef t2 = c.add_gate(OP_XOR, x, y);
    WireRef sum = c.add_gate(OP_XOR, t2, d);
    WireRef t1 = c.add_gate(OP_AND, x, y);
    WireRef t3 = c.add_gate(OP_AND, t2, d);
    WireRef carry = c.add_gate(OP_OR, t1, t3);
    return std::pair{sum, carry};
  };

  std::map<uint32_t, std::vector<LdWire>> layers;
  uint64_t seq = 0;
  BigUint total = 0;
  for (const WeightedWire& s : seeds) {
    layers[s.significance].push_back({s.wire, seq++});
    total += BigUint(1) << s.significance;
  }
  const uint32_t max_out_sig = bitlen(total) - 1;

  auto max_height = [&] {
    size_t h = 0;
    for (const auto& [sig, wires] : layers) h = std::max(h, wires.size());
    return h;
  };
  size_t h = max_height();
  while (h > 3) {
    if (stats) stats->round_max_heights.push_back(static_cast<uint32_t>(h));
    std::vector<std::pair<uint32_t, WireRef>> pending;
    for (auto& [sig, wires] : layers) {
      size_t nfa = wires.size() / 3;
      for (size_t t = 0; t < nfa; ++t) {
        const LdWire &w0 = wires[3 * t], &w1 = wires[3 * t + 1],
                     &w2 = wires[3 * t + 2];
        auto [sum, carry] = full_adder(w0.w, w1.w, w2.w);
        pending.emplace_back(sig, sum);
        pending.emplace_back(sig + 1, carry);
      }
      wires.erase(wires.begin(), wires.begin() + 3 * nfa);
    }
    for (auto& [sig, w] : pending)
      layers[sig].push_back({w, seq++});
    std::erase_if(layers, [](const auto& kv) { return kv.second.empty(); });
    h = max_height();
  }
  if (stats) stats->round_max_heights.push_back(static_cast<uint32_t>(h));

  // One more parallel step so that every layer holds at most two wires
  // counting the carries this step itself creates.
  {
    std::vector<std::pair<uint32_t, WireRef>> pending;
    bool carry_into_next = false;
    uint32_t carry_sig = 0;
    for (auto& [sig, wires] : layers) {
      bool incoming = carry_into_next && carry_sig == sig;
      carry_into_next = false;
      if (wires.size() == 3) {
        auto [sum, carry] = full_adder(wires[0].w, wires[1].w, wires[2].w);
        wires.clear();
        pending.emplace_back(sig, sum);
        pending.emplace_back(sig + 1, carry);
        carry_into_next = true;
        carry_sig = sig + 1;
      } else if (wires.size() == 2 && incoming) {
        WireRef s = c.add_gate(OP_XOR, wires[0].w, wires[1].w);
        WireRef cy = c.add_gate(OP_AND, wires[0].w, wires[1].w);
        wires.clear();
        pending.emplace_back(sig, s);
        pending.emplace_back(sig + 1, cy);
        carry_into_next = true;
        carry_sig = sig + 1;
      }
    }
    for (auto& [sig, w] : pending)
      layers[sig].push_back({w, seq++});
    std::erase_if(layers, [](const auto& kv) { return kv.second.empty(); });
  }

  // Split the remainder into two aligned numbers: per layer, the older wire
  // goes to A and the younger to B; holes are constant 0.
  uint32_t base = layers.begin()->first;
  uint32_t top = layers.rbegin()->first;
  size_t k = top - base + 1;
  std::vector<Lit> A(k, Lit::zero()), B(k, Lit::zero());
  for (auto& [sig, wires] : layers) {
    if (wires.size() > 2) throw std::logic_error("layer not flattened");
    std::sort(wires.begin(), wires.end(),
              [](const LdWire& x, const LdWire& y) { return x.seq < y.seq; });
    if (!wires.empty()) A[sig - base] = lit_of(wires[0].w);
    if (wires.size() == 2) B[sig - base] = lit_of(wires[1].w);
  }
  bool want_carry = top + 1 <= max_out_sig;
  std::vector<Lit> sums = brent_kung_lits(c, A, B, want_carry);

  std::vector<WeightedWire> out;
  for (size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] == Lit::zero()) continue;
    out.push_back({materialize(c, sums[i]), base + static_cast<uint32_t>(i)});
  }
  return out;
}

Circuit generate_ba_logdepth(const std::vector<uint32_t>& s, GenOptions opt,
                             LogDepthStats* stats) {
  check_significances(s, opt);
  Circuit c(static_cast<uint32_t>(s.size()));
  std::vector<WeightedWire> seeds;
  seeds.reserve(s.size());
  for (uint32_t i = 0; i < s.size(); ++i) seeds.push_back({c.input(i), s[i]});
  for (const WeightedWire& o : reduce_logdepth(c, seeds, stats))
    c.mark_output(o.wire, o.significance);
  return c;
}

std::vector<WeightedWire> emit_brent_kung(Circuit& c,
                                          const std::vector<WireRef>& a,
                                          const std::vector<WireRef>& b,
                                          uint32_t base_significance) {
  std::vector<Lit> la, lb;
  la.reserve(a.size());
  lb.reserve(b.size());
  for (WireRef w : a) la.push_back(lit_of(w));
  for (WireRef w : b) lb.push_back(lit_of(w));
  std::vector<Lit> sums = brent_kung_lits(c, la, lb, true);
  std::vector<WeightedWire> out;
  out.reserve(sums.size());
  for (size_t i = 0; i < sums.size(); ++i)
    out.push_back(
        {materialize(c, sums[i]), base_significance + static_cast<uint32_t>(i)});
  return out;
}

Circuit generate_mult_logdepth(uint32_t n, LogDepthStats* stats) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Circuit c(2 * n);
  std::vector<WireRef> x, y;
  for (uint32_t i = 0; i < n; ++i) x.push_back(c.input(i));
  for (uint32_t i = 0; i < n; ++i) y.push_back(c.input(n + i));
  std::vector<WeightedWire> pp = generate_partial_products(c, x, y);
  for (const WeightedWire& o : reduce_logdepth(c, pp, stats))
    c.mark_output(o.wire, o.significance);
  return c;
}

}  // namespace bitadder
