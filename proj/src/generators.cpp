#include "bitadder/generators.hpp"

#include "bitadder/emit.hpp"

namespace bitadder {

void check_significances(const std::vector<uint32_t>& s,
                         const GenOptions& opt) {
  for (uint32_t v : s)
    if (v > opt.significance_limit)
      throw std::invalid_argument("significance exceeds configured limit");
}

namespace {

// Left fold with XOR; used for the carry-free top layer of capped
// reductions.
Lit xor_fold(Circuit& c, const std::vector<Lit>& lits) {
  Lit acc = Lit::zero();
  bool first = true;
  for (const Lit& l : lits) {
    if (first) {
      acc = l;
      first = false;
    } else {
      acc = emit_op(c, OP_XOR, acc, l);
    }
  }
  return acc;
}

std::vector<WeightedWire> seeds_of_inputs(Circuit& c,
                                          const std::vector<uint32_t>& s) {
  std::vector<WeightedWire> seeds;
  seeds.reserve(s.size());
  for (uint32_t i = 0; i < s.size(); ++i) seeds.push_back({c.input(i), s[i]});
  return seeds;
}

}  // namespace

std::vector<WeightedWire> reduce_dadda(Circuit& c,
                                       const std::vector<WeightedWire>& seeds,
                                       std::optional<uint32_t> cap) {
  std::map<uint32_t, std::deque<WireRef>> layers;
  for (const WeightedWire& w : seeds) layers[w.significance].push_back(w.wire);

  std::vector<WeightedWire> out;
  while (!layers.empty()) {
    auto it = layers.begin();
    uint32_t sig = it->first;
    std::deque<WireRef>& q = it->second;
    if (cap && sig == *cap) {
      std::vector<Lit> lits;
      lits.reserve(q.size());
      for (WireRef w : q) lits.push_back(lit_of(w));
      Lit r = xor_fold(c, lits);
      if (!(r == Lit::zero())) out.push_back({materialize(c, r), sig});
      layers.erase(it);
      continue;
    }
    while (q.size() >= 3) {
      WireRef a = q[0], b = q[1], d = q[2];
      q.pop_front();
      q.pop_front();
      q.pop_front();
      SumCarry r = emit_full_adder(c, a, b, d);
      q.push_back(r.sum);
      layers[sig + 1].push_back(r.carry);
    }
    if (q.size() == 2) {
      SumCarry r = emit_half_adder(c, q[0], q[1]);
      q.clear();
      q.push_back(r.sum);
      layers[sig + 1].push_back(r.carry);
    }
    if (q.size() == 1) out.push_back({q[0], sig});
    layers.erase(layers.begin());
  }
  return out;
}

Circuit generate_ba_dadda(const std::vector<uint32_t>& s, GenOptions opt) {
  check_significances(s, opt);
  Circuit c(static_cast<uint32_t>(s.size()));
  std::vector<WeightedWire> outs = reduce_dadda(c, seeds_of_inputs(c, s));
  for (const WeightedWire& o : outs) c.mark_output(o.wire, o.significance);
  return c;
}

EfficientReducer::EfficientReducer(Circuit& c,
                                   const std::vector<WeightedWire>& seeds,
                                   std::optional<uint32_t> cap)
    : c_(c), cap_(cap) {
  std::map<uint32_t, std::vector<WireRef>> raw;
  for (const WeightedWire& w : seeds) raw[w.significance].push_back(w.wire);
  for (auto& [sig, wires] : raw) {
    Layer& layer = layers_[sig];
    size_t i = 0;
    for (; i + 1 < wires.size(); i += 2) {
      WireRef parity = c_.add_gate(OP_XOR, wires[i], wires[i + 1]);
      layer.pairs.push_back({parity, wires[i]});
    }
    if (i < wires.size()) layer.unpaired = wires[i];
  }
}

void EfficientReducer::transfer_carry(uint32_t significance, WireRef carry) {
  Layer& layer = layers_[significance];
  if (layer.unpaired) {
    WireRef parity = c_.add_gate(OP_XOR, *layer.unpaired, carry);
    layer.pairs.push_back({parity, carry});
    layer.unpaired.reset();
  } else {
    layer.unpaired = carry;
  }
}

WeightedWire EfficientReducer::reduce_min_layer() {
  if (layers_.empty()) throw std::logic_error("reduce on empty state");
  auto it = layers_.begin();
  uint32_t sig = it->first;
  Layer layer = std::move(it->second);
  layers_.erase(it);

  if (cap_ && sig == *cap_) {
    // Top layer of a width-capped reduction: combine carry-free. Each pair
    // already carries its parity, so the layer's sum is the XOR of the
    // parities and the unpaired wire.
    std::vector<Lit> lits;
    for (const BitPair& p : layer.pairs) lits.push_back(lit_of(p.parity));
    if (layer.unpaired) lits.push_back(lit_of(*layer.unpaired));
    Lit r = xor_fold(c_, lits);
    return {materialize(c_, r), sig};
  }

  size_t l = layer.bit_count();
  if (l == 0) throw std::logic_error("empty layer in state");
  if (l == 1) return {*layer.unpaired, sig};

  if (l == 2) {  // one pair: its parity is the sum, the carry moves up
    WireRef carry = emit_pair_carry(c_, layer.pairs.front());
    WireRef sum = layer.pairs.front().parity;
    transfer_carry(sig + 1, carry);
    return {sum, sig};
  }
  if (l == 3) {  // pair + unpaired
    SumCarry r =
        emit_full_adder_reusing_parity(c_, layer.pairs.front(), *layer.unpaired);
    transfer_carry(sig + 1, r.carry);
    return {r.sum, sig};
  }

  std::optional<WireRef> t = layer.unpaired;
  std::deque<BitPair>& pairs = layer.pairs;
  if (!t) {
    if (pairs.size() % 2 == 0) {
      // l = 4k: MDFA' on the first two pairs produces the running bit.
      MdfaResult r = emit_mdfa_prime(c_, pairs[0], pairs[1]);
      pairs.pop_front();
      pairs.pop_front();
      layers_[sig + 1].pairs.push_back(r.next);
      t = r.b0;
    } else {
      // l = 4k + 2: peel one pair with a single AND-like gate; its parity
      // becomes the unpaired bit and the carry moves up.
      WireRef carry = emit_pair_carry(c_, pairs.front());
      t = pairs.front().parity;
      pairs.pop_front();
      transfer_carry(sig + 1, carry);
    }
  } else if (pairs.size() % 2 == 1) {
    // l = 4k + 3: full adder over one pair and the unpaired bit.
    SumCarry r = emit_full_adder_reusing_parity(c_, pairs.front(), *t);
    pairs.pop_front();
    transfer_carry(sig + 1, r.carry);
    t = r.sum;
  }
  // l = 4k + 1 from here: chain MDFAs, threading the running bit through t.
  while (!pairs.empty()) {
    MdfaResult r = emit_mdfa(c_, pairs[0], *t, pairs[1]);
    pairs.pop_front();
    pairs.pop_front();
    layers_[sig + 1].pairs.push_back(r.next);
    t = r.b0;
  }
  return {*t, sig};
}

size_t EfficientReducer::pair_count(uint32_t significance) const {
  auto it = layers_.find(significance);
  return it == layers_.end() ? 0 : it->second.pairs.size();
}

bool EfficientReducer::has_unpaired(uint32_t significance) const {
  auto it = layers_.find(significance);
  return it != layers_.end() && it->second.unpaired.has_value();
}

std::vector<WeightedWire> reduce_efficient(
    Circuit& c, const std::vector<WeightedWire>& seeds,
    std::optional<uint32_t> cap) {
  EfficientReducer red(c, seeds, cap);
  std::vector<WeightedWire> out;
  while (!red.done()) out.push_back(red.reduce_min_layer());
  return out;
}

Circuit generate_ba_efficient(const std::vector<uint32_t>& s, GenOptions opt) {
  check_significances(s, opt);
  Circuit c(static_cast<uint32_t>(s.size()));
  std::vector<WeightedWire> outs = reduce_efficient(c, seeds_of_inputs(c, s));
  for (const WeightedWire& o : outs) c.mark_output(o.wire, o.significance);
  return c;
}

}  // namespace bitadder
