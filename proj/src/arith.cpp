#include "bitadder/arith.hpp"

#include <map>
#include <deque>

#include "bitadder/emit.hpp"

namespace bitadder {

namespace {

uint32_t bitlen(const BigUint& v) {
  return v == 0 ? 0 : static_cast<uint32_t>(boost::multiprecision::msb(v)) + 1;
}

BigUint mask_bits(uint32_t w) { return (BigUint(1) << w) - 1; }

// A (possibly partially known) nonnegative number: bit i of the value is
// bits[i], and the value never exceeds max. Bits are wires or constant 0.
struct Number {
  std::vector<Lit> bits;
  BigUint max = 0;
};

Number slice(const Number& x, uint32_t from, uint32_t count) {
  Number r;
  for (uint32_t i = from; i < x.bits.size() && i < from + count; ++i)
    r.bits.push_back(x.bits[i]);
  r.max = x.max >> from;
  BigUint cap = mask_bits(static_cast<uint32_t>(r.bits.size()));
  if (r.max > cap) r.max = cap;
  return r;
}

std::vector<WeightedWire> number_seeds(Circuit& c, const Number& x,
                                       uint32_t shift = 0) {
  std::vector<WeightedWire> seeds;
  for (uint32_t i = 0; i < x.bits.size(); ++i) {
    const Lit& l = x.bits[i];
    if (l == Lit::zero()) continue;
    seeds.push_back({materialize(c, l), shift + i});
  }
  return seeds;
}

Number from_outputs(const std::vector<WeightedWire>& outs, uint32_t width,
                    BigUint max) {
  Number r;
  r.bits.assign(width, Lit::zero());
  for (const WeightedWire& o : outs) r.bits[o.significance] = lit_of(o.wire);
  r.max = std::move(max);
  return r;
}

Number add_numbers(Circuit& c, const Number& a, const Number& b) {
  BigUint max = a.max + b.max;
  uint32_t w = bitlen(max);
  if (w == 0) return {{}, 0};
  std::vector<WeightedWire> seeds = number_seeds(c, a);
  for (const WeightedWire& s : number_seeds(c, b)) seeds.push_back(s);
  std::vector<WeightedWire> outs = reduce_efficient(c, seeds, w - 1);
  return from_outputs(outs, w, std::move(max));
}

std::pair<Lit, Lit> lit_ha(Circuit& c, Lit a, Lit b) {
  if (a.is_const() || b.is_const()) {
    if (a.is_const() && b.is_const()) {
      int t = (a.const_val() ? 1 : 0) + (b.const_val() ? 1 : 0);
      return {Lit::constant(t & 1), Lit::constant(t >> 1)};
    }
    Lit w = a.is_const() ? b : a;
    bool cv = (a.is_const() ? a : b).const_val();
    if (!cv) return {w, Lit::zero()};
    return {lit_not(w), w};
  }
  return {emit_op(c, OP_XOR, a, b), emit_op(c, OP_AND, a, b)};
}

std::pair<Lit, Lit> lit_fa(Circuit& c, Lit a, Lit b, Lit d) {
  Lit ws[3];
  int nw = 0, cv = 0;
  for (Lit l : {a, b, d}) {
    if (l.is_const())
      cv += l.const_val() ? 1 : 0;
    else
      ws[nw++] = l;
  }
  if (nw == 0) return {Lit::constant(cv & 1), Lit::constant((cv >> 1) & 1)};
  if (nw == 1) {
    if (cv == 0) return {ws[0], Lit::zero()};
    if (cv == 1) return {lit_not(ws[0]), ws[0]};
    return {ws[0], Lit::one()};
  }
  if (nw == 2) {
    if (cv == 0) return lit_ha(c, ws[0], ws[1]);
    return {emit_op(c, OP_XNOR, ws[0], ws[1]),
            emit_op(c, OP_OR, ws[0], ws[1])};
  }
  Lit g1 = emit_op(c, OP_XOR, ws[0], ws[1]);
  Lit g2 = emit_op(c, OP_XOR, ws[1], ws[2]);
  Lit g3 = emit_op(c, OP_OR, g1, g2);
  Lit sum = emit_op(c, OP_XOR, g1, ws[2]);
  Lit carry = emit_op(c, OP_XOR, g3, sum);
  return {sum, carry};
}

// (zm + ~z0 + ~z2 + 2) mod 2^w, i.e. zm - z0 - z2 in two's complement with
// the overflow bits discarded. Complement bits beyond an operand's width are
// constant 1 and cost nothing.
Number modadd_middle(Circuit& c, const Number& zm, const Number& z0,
                     const Number& z2, uint32_t w) {
  std::map<uint32_t, std::deque<Lit>> layers;
  auto push = [&](uint32_t sig, Lit l) {
    if (l == Lit::zero()) return;
    layers[sig].push_back(l);
  };
  for (uint32_t i = 0; i < zm.bits.size() && i < w; ++i) push(i, zm.bits[i]);
  for (uint32_t i = 0; i < w; ++i) {
    push(i, lit_not(i < z0.bits.size() ? z0.bits[i] : Lit::zero()));
    push(i, lit_not(i < z2.bits.size() ? z2.bits[i] : Lit::zero()));
  }
  if (w >= 2) push(1, Lit::one());

  Number r;
  r.bits.assign(w, Lit::zero());
  while (!layers.empty()) {
    auto it = layers.begin();
    uint32_t sig = it->first;
    std::deque<Lit>& q = it->second;
    if (sig == w - 1) {
      Lit acc = Lit::zero();
      for (const Lit& l : q) acc = emit_op(c, OP_XOR, acc, l);
      r.bits[sig] = acc;
      layers.erase(it);
      continue;
    }
    while (q.size() >= 3) {
      auto [sum, carry] = lit_fa(c, q[0], q[1], q[2]);
      q.pop_front();
      q.pop_front();
      q.pop_front();
      if (!(sum == Lit::zero())) q.push_back(sum);
      push(sig + 1, carry);
    }
    if (q.size() == 2) {
      auto [sum, carry] = lit_ha(c, q[0], q[1]);
      q.clear();
      if (!(sum == Lit::zero())) q.push_back(sum);
      push(sig + 1, carry);
    }
    if (q.size() == 1) r.bits[sig] = q[0];
    layers.erase(layers.begin());
  }
  return r;
}

bool use_dadda_reducer(const MultMethod& m) {
  if (m.kind == MultMethod::Kind::dadda) return true;
  return m.kind == MultMethod::Kind::karatsuba &&
         m.base == MultMethod::Base::dadda;
}

std::vector<WeightedWire> reduce_for(Circuit& c, const MultMethod& m,
                                     const std::vector<WeightedWire>& seeds,
                                     std::optional<uint32_t> cap) {
  return use_dadda_reducer(m) ? reduce_dadda(c, seeds, cap)
                              : reduce_efficient(c, seeds, cap);
}

// Product of two numbers as a number of at most `cap_width` bits (the value
// is taken mod 2^cap_width; callers only cap where that is sound).
Number mult_number(Circuit& c, const Number& x, const Number& y,
                   const MultMethod& m, std::optional<uint32_t> cap_width) {
  BigUint natural_max = x.max * y.max;
  uint32_t w = bitlen(natural_max);
  if (cap_width && *cap_width < w) w = *cap_width;
  if (w == 0) return {{}, 0};
  BigUint result_max = natural_max;
  if (result_max > mask_bits(w)) result_max = mask_bits(w);

  uint32_t n = static_cast<uint32_t>(std::max(x.bits.size(), y.bits.size()));
  uint32_t base_at =
      m.kind != MultMethod::Kind::karatsuba
          ? UINT32_MAX
          : (m.base == MultMethod::Base::pure ? 4 : m.threshold);

  if (n <= base_at) {
    std::vector<WeightedWire> seeds;
    for (uint32_t i = 0; i < x.bits.size(); ++i) {
      if (x.bits[i] == Lit::zero()) continue;
      for (uint32_t j = 0; j < y.bits.size(); ++j) {
        if (i + j >= w) continue;  // provably dropped by the width cap
        Lit p = emit_op(c, OP_AND, x.bits[i], y.bits[j]);
        if (p == Lit::zero()) continue;
        seeds.push_back({materialize(c, p), i + j});
      }
    }
    std::vector<WeightedWire> outs = reduce_for(c, m, seeds, w - 1);
    return from_outputs(outs, w, std::move(result_max));
  }

  uint32_t k = (n + 1) / 2;
  Number lo_x = slice(x, 0, k), hi_x = slice(x, k, n - k);
  Number lo_y = slice(y, 0, k), hi_y = slice(y, k, n - k);

  Number z0 = mult_number(c, lo_x, lo_y, m, w);

  // The middle term is computed mod 2^wm; z2 must cover both its share of
  // the recombination and the low bits consumed by the subtraction.
  BigUint mid_max = lo_x.max * hi_y.max + hi_x.max * lo_y.max;
  uint32_t wm = w > k ? std::min(bitlen(mid_max), w - k) : 0;
  uint32_t z2_cap = std::max(w > 2 * k ? w - 2 * k : 0, wm);
  Number z2;
  if (z2_cap > 0) z2 = mult_number(c, hi_x, hi_y, m, z2_cap);

  Number middle;
  if (wm > 0) {
    Number sx = add_numbers(c, lo_x, hi_x);
    Number sy = add_numbers(c, lo_y, hi_y);
    Number zm = mult_number(c, sx, sy, m, wm);
    middle = modadd_middle(c, zm, z0, z2, wm);
    middle.max = mid_max > mask_bits(wm) ? mask_bits(wm) : mid_max;
  }

  std::vector<WeightedWire> seeds = number_seeds(c, z0);
  for (const WeightedWire& s : number_seeds(c, middle, k)) seeds.push_back(s);
  for (const WeightedWire& s : number_seeds(c, z2, 2 * k))
    if (s.significance < w) seeds.push_back(s);  // mod-dropped above the cap
  std::vector<WeightedWire> outs = reduce_for(c, m, seeds, w - 1);
  return from_outputs(outs, w, std::move(result_max));
}

}  // namespace

Circuit generate_sum(uint32_t n, BaMethod method) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<uint32_t> s(n, 0);
  return method == BaMethod::dadda ? generate_ba_dadda(s)
                                   : generate_ba_efficient(s);
}

Circuit generate_add(uint32_t n, BaMethod method) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<uint32_t> s;
  s.reserve(2 * n);
  for (uint32_t r = 0; r < 2; ++r)
    for (uint32_t i = 0; i < n; ++i) s.push_back(i);
  return method == BaMethod::dadda ? generate_ba_dadda(s)
                                   : generate_ba_efficient(s);
}

Circuit generate_add_bit(uint32_t n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Circuit c(n + 1);
  WireRef carry = c.input(0);
  for (uint32_t i = 0; i < n; ++i) {
    SumCarry r = emit_half_adder(c, carry, c.input(i + 1));
    c.mark_output(r.sum, i);
    carry = r.carry;
  }
  c.mark_output(carry, n);
  return c;
}

std::vector<WeightedWire> generate_partial_products(
    Circuit& c, const std::vector<WireRef>& x, const std::vector<WireRef>& y) {
  std::vector<WeightedWire> out;
  out.reserve(x.size() * y.size());
  for (uint32_t i = 0; i < x.size(); ++i)
    for (uint32_t j = 0; j < y.size(); ++j)
      out.push_back({c.add_gate(OP_AND, x[i], y[j]), i + j});
  return out;
}

Circuit generate_mult(uint32_t n, const MultMethod& method) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (method.kind == MultMethod::Kind::karatsuba && method.threshold < 2)
    throw std::invalid_argument("invalid threshold");
  Circuit c(2 * n);
  Number x, y;
  for (uint32_t i = 0; i < n; ++i) x.bits.push_back(lit_of(c.input(i)));
  for (uint32_t i = 0; i < n; ++i) y.bits.push_back(lit_of(c.input(n + i)));
  x.max = y.max = mask_bits(n);
  Number p = mult_number(c, x, y, method, std::nullopt);
  for (uint32_t i = 0; i < p.bits.size(); ++i) {
    if (p.bits[i] == Lit::zero()) continue;
    c.mark_output(materialize(c, p.bits[i]), i);
  }
  // Deep width-capped recursion can strand operand bits that the mod
  // arithmetic provably drops; sweep them so the result is lint-clean.
  return sweep_dangling(c);
}

}  // namespace bitadder
