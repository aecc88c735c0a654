#include "bitadder/emit.hpp"

#include <unordered_map>

namespace bitadder {

namespace {

// Applies a 2-bit unary table (bit0 = f(0), bit1 = f(1)) to a lit.
Lit apply_unary(uint8_t u, Lit x) {
  switch (u & 0x3) {
    case 0x0: return Lit::zero();
    case 0x3: return Lit::one();
    case 0x2: return x;
    default: return lit_not(x);  // 0x1
  }
}

}  // namespace

Lit emit_op(Circuit& c, BinOp op, Lit a, Lit b) {
  uint8_t tt = op.tt & 0xf;
  if (a.is_const()) {
    bool v = a.const_val();
    uint8_t u = v ? static_cast<uint8_t>((tt >> 2) & 0x3)
                  : static_cast<uint8_t>(tt & 0x3);
    return apply_unary(u, b);
  }
  if (b.is_const()) {
    bool v = b.const_val();
    uint8_t u = static_cast<uint8_t>((((tt >> (v ? 1 : 0)) & 1)) |
                                     (((tt >> (v ? 3 : 2)) & 1) << 1));
    return apply_unary(u, a);
  }
  if (a.neg) tt = tt_neg_a(tt);
  if (b.neg) tt = tt_neg_b(tt);
  if (a.w == b.w) {
    uint8_t u = static_cast<uint8_t>((tt & 1) | (((tt >> 3) & 1) << 1));
    return apply_unary(u, Lit::wire(a.w));
  }
  bool dep_a = (((tt >> 0) & 1) != ((tt >> 2) & 1)) ||
               (((tt >> 1) & 1) != ((tt >> 3) & 1));
  bool dep_b = (((tt >> 0) & 1) != ((tt >> 1) & 1)) ||
               (((tt >> 2) & 1) != ((tt >> 3) & 1));
  if (!dep_a && !dep_b) return Lit::constant(tt & 1);
  if (!dep_a) {
    uint8_t u = static_cast<uint8_t>(((tt >> 0) & 1) | (((tt >> 1) & 1) << 1));
    return apply_unary(u, Lit::wire(b.w));
  }
  if (!dep_b) {
    uint8_t u = static_cast<uint8_t>(((tt >> 0) & 1) | (((tt >> 2) & 1) << 1));
    return apply_unary(u, Lit::wire(a.w));
  }
  return Lit::wire(c.add_gate(BinOp{tt}, a.w, b.w));
}

WireRef materialize(Circuit& c, Lit l) {
  if (l.is_const()) return WireRef::constant(l.const_val());
  if (!l.neg) return l.w;
  return c.add_gate(OP_XOR, l.w, WireRef::constant(true));
}

Circuit fold_constants(const Circuit& c) {
  Circuit out(c.input_count());
  std::vector<Lit> map(c.size());
  auto resolve = [&](WireRef w) -> Lit {
    if (w.kind == WireKind::gate) return map[w.index];
    return lit_of(w);
  };
  for (size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    map[i] = emit_op(out, g.op, resolve(g.a), resolve(g.b));
  }
  // Negated output lits need a real wire; memoize so a reused lit costs one
  // gate at most, which keeps the size bound.
  std::unordered_map<uint64_t, WireRef> memo;
  for (const Output& o : c.outputs()) {
    Lit l = resolve(o.wire);
    WireRef w;
    if (!l.is_const() && l.neg) {
      uint64_t key = (static_cast<uint64_t>(l.w.index) << 2) |
                     static_cast<uint64_t>(l.w.kind);
      auto it = memo.find(key);
      if (it == memo.end()) {
        w = materialize(out, l);
        memo.emplace(key, w);
      } else {
        w = it->second;
      }
    } else {
      w = materialize(out, l);
    }
    out.mark_output(w, o.significance);
  }
  return out;
}

}  // namespace bitadder
