#include "bitadder/circuit.hpp"

#include <algorithm>

namespace bitadder {

const char* op_name(BinOp op) {
  static const char* names[16] = {
      "FALSE", "NOR", "LT", "NOTA", "GT", "NOTB", "XOR", "NAND",
      "AND",   "XNOR", "B",  "LE",   "A",  "GE",   "OR",  "TRUE"};
  return names[op.tt & 0xf];
}

std::vector<uint8_t> Circuit::evaluate(
    const std::vector<uint8_t>& assignment) const {
  if (assignment.size() != input_count_)
    throw std::invalid_argument("assignment length mismatch");
  std::vector<uint8_t> vals(gates_.size());
  auto value = [&](WireRef w) -> bool {
    switch (w.kind) {
      case WireKind::input: return assignment[w.index] != 0;
      case WireKind::constant: return w.index != 0;
      case WireKind::gate: return vals[w.index] != 0;
    }
    return false;
  };
  for (size_t i = 0; i < gates_.size(); ++i)
    vals[i] = gates_[i].op.eval(value(gates_[i].a), value(gates_[i].b));
  std::vector<uint8_t> out;
  out.reserve(outputs_.size());
  for (const Output& o : outputs_) out.push_back(value(o.wire) ? 1 : 0);
  return out;
}

BigUint Circuit::weighted_output_value(
    const std::vector<uint8_t>& assignment) const {
  std::vector<uint8_t> bits = evaluate(assignment);
  BigUint v = 0;
  for (size_t i = 0; i < outputs_.size(); ++i)
    if (bits[i]) v += BigUint(1) << outputs_[i].significance;
  return v;
}

std::vector<uint32_t> Circuit::gate_depths() const {
  std::vector<uint32_t> d(gates_.size());
  auto depth_of = [&](WireRef w) -> uint32_t {
    return w.kind == WireKind::gate ? d[w.index] : 0;
  };
  for (size_t i = 0; i < gates_.size(); ++i)
    d[i] = 1 + std::max(depth_of(gates_[i].a), depth_of(gates_[i].b));
  return d;
}

size_t Circuit::depth() const {
  if (outputs_.empty()) return 0;
  std::vector<uint32_t> d = gate_depths();
  uint32_t m = 0;
  for (const Output& o : outputs_)
    if (o.wire.kind == WireKind::gate) m = std::max(m, d[o.wire.index]);
  return m;
}

bool has_dangling_gates(const Circuit& c) {
  std::vector<uint8_t> used(c.size(), 0);
  std::vector<uint32_t> stack;
  for (const Output& o : c.outputs())
    if (o.wire.kind == WireKind::gate && !used[o.wire.index]) {
      used[o.wire.index] = 1;
      stack.push_back(o.wire.index);
    }
  while (!stack.empty()) {
    uint32_t g = stack.back();
    stack.pop_back();
    for (WireRef w : {c.gates()[g].a, c.gates()[g].b})
      if (w.kind == WireKind::gate && !used[w.index]) {
        used[w.index] = 1;
        stack.push_back(w.index);
      }
  }
  return std::find(used.begin(), used.end(), 0) != used.end();
}

Circuit sweep_dangling(const Circuit& c) {
  std::vector<uint8_t> used(c.size(), 0);
  std::vector<uint32_t> stack;
  for (const Output& o : c.outputs())
    if (o.wire.kind == WireKind::gate && !used[o.wire.index]) {
      used[o.wire.index] = 1;
      stack.push_back(o.wire.index);
    }
  while (!stack.empty()) {
    uint32_t g = stack.back();
    stack.pop_back();
    for (WireRef w : {c.gates()[g].a, c.gates()[g].b})
      if (w.kind == WireKind::gate && !used[w.index]) {
        used[w.index] = 1;
        stack.push_back(w.index);
      }
  }
  Circuit out(c.input_count());
  std::vector<uint32_t> remap(c.size());
  for (uint32_t i = 0; i < c.size(); ++i) {
    if (!used[i]) continue;
    const Gate& g = c.gates()[i];
    auto fix = [&](WireRef w) {
      return w.kind == WireKind::gate ? WireRef::gate(remap[w.index]) : w;
    };
    remap[i] = static_cast<uint32_t>(
        out.add_gate(g.op, fix(g.a), fix(g.b)).index);
  }
  for (const Output& o : c.outputs()) {
    WireRef w = o.wire.kind == WireKind::gate ? WireRef::gate(remap[o.wire.index])
                                              : o.wire;
    out.mark_output(w, o.significance);
  }
  return out;
}

}  // namespace bitadder
