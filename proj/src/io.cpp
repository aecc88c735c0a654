#include "bitadder/io.hpp"

#include <sstream>

#include <json.hpp>

namespace bitadder {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "bacirc-1";

json ref_to_json(WireRef w) {
  const char* k = w.kind == WireKind::input    ? "i"
                  : w.kind == WireKind::constant ? "c"
                                                 : "g";
  return json::array({k, w.index});
}

std::pair<int, int> line_col(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

WireRef ref_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() ||
      !j[1].is_number_unsigned())
    throw ParseError("malformed wire reference", 0, 0);
  std::string k = j[0].get<std::string>();
  uint32_t idx = j[1].get<uint32_t>();
  if (k == "i") return WireRef::input(idx);
  if (k == "c") return WireRef::constant(idx != 0);
  if (k == "g") return WireRef::gate(idx);
  throw ParseError("unknown wire kind '" + k + "'", 0, 0);
}

}  // namespace

std::string serialize_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates())
    gates.push_back(json::array({g.op.tt, ref_to_json(g.a), ref_to_json(g.b)}));
  json outputs = json::array();
  for (const Output& o : c.outputs())
    outputs.push_back(json::array({ref_to_json(o.wire), o.significance}));
  json doc;
  doc["version"] = kVersion;
  doc["inputs"] = c.input_count();
  doc["gates"] = std::move(gates);
  doc["outputs"] = std::move(outputs);
  return doc.dump();
}

Circuit parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("json syntax: ") + e.what(), line, col);
  }
  try {
    if (!doc.is_object() || doc.value("version", "") != kVersion)
      throw ParseError("missing or unsupported version tag", 1, 1);
    Circuit c(doc.at("inputs").get<uint32_t>());
    for (const json& g : doc.at("gates")) {
      if (!g.is_array() || g.size() != 3)
        throw ParseError("malformed gate entry", 0, 0);
      uint8_t tt = g[0].get<uint8_t>();
      if (tt > 0xf) throw ParseError("opcode out of range", 0, 0);
      c.add_gate(BinOp{tt}, ref_from_json(g[1]), ref_from_json(g[2]));
    }
    for (const json& o : doc.at("outputs")) {
      if (!o.is_array() || o.size() != 2)
        throw ParseError("malformed output entry", 0, 0);
      c.mark_output(ref_from_json(o[0]), o[1].get<uint32_t>());
    }
    return c;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

namespace {

std::string wire_name(const Circuit& c, WireRef w) {
  switch (w.kind) {
    case WireKind::input: return "x" + std::to_string(w.index + 1);
    case WireKind::gate: return "g" + std::to_string(w.index + 1);
    case WireKind::constant: return w.index ? "one" : "zero";
  }
  return "?";
}

}  // namespace

std::string export_bench(const Circuit& c) {
  std::ostringstream os;
  os << "# " << kVersion << " BENCH export\n";
  os << "# significances:";
  for (size_t j = 0; j < c.outputs().size(); ++j)
    os << (j ? "," : " ") << c.outputs()[j].significance;
  os << "\n";
  for (uint32_t i = 0; i < c.input_count(); ++i)
    os << "INPUT(x" << i + 1 << ")\n";
  for (size_t j = 0; j < c.outputs().size(); ++j)
    os << "OUTPUT(y" << j << ")\n";

  bool const_used = false;
  for (const Gate& g : c.gates())
    for (WireRef w : {g.a, g.b})
      if (w.kind == WireKind::constant) const_used = true;
  for (const Output& o : c.outputs())
    if (o.wire.kind == WireKind::constant) const_used = true;
  if (const_used) {
    if (c.input_count() == 0)
      throw std::runtime_error(
          "BENCH cannot express constants in a circuit without inputs");
    os << "zero_n = NOT(x1)\n";
    os << "zero = AND(x1, zero_n)\n";
    os << "one = OR(x1, zero_n)\n";
  }

  for (size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    std::string a = wire_name(c, g.a), b = wire_name(c, g.b);
    std::string r = "g" + std::to_string(i + 1);
    std::string t = r + "_t";
    switch (g.op.tt) {
      case 0x0: os << t << " = NOT(" << a << ")\n"
                   << r << " = AND(" << a << ", " << t << ")\n"; break;
      case 0x1: os << r << " = NOR(" << a << ", " << b << ")\n"; break;
      case 0x2: os << t << " = NOT(" << a << ")\n"
                   << r << " = AND(" << t << ", " << b << ")\n"; break;
      case 0x3: os << r << " = NOT(" << a << ")\n"; break;
      case 0x4: os << t << " = NOT(" << b << ")\n"
                   << r << " = AND(" << a << ", " << t << ")\n"; break;
      case 0x5: os << r << " = NOT(" << b << ")\n"; break;
      case 0x6: os << r << " = XOR(" << a << ", " << b << ")\n"; break;
      case 0x7: os << r << " = NAND(" << a << ", " << b << ")\n"; break;
      case 0x8: os << r << " = AND(" << a << ", " << b << ")\n"; break;
      case 0x9: os << r << " = XNOR(" << a << ", " << b << ")\n"; break;
      case 0xa: os << r << " = BUF(" << b << ")\n"; break;
      case 0xb: os << t << " = NOT(" << a << ")\n"
                   << r << " = OR(" << t << ", " << b << ")\n"; break;
      case 0xc: os << r << " = BUF(" << a << ")\n"; break;
      case 0xd: os << t << " = NOT(" << b << ")\n"
                   << r << " = OR(" << a << ", " << t << ")\n"; break;
      case 0xe: os << r << " = OR(" << a << ", " << b << ")\n"; break;
      case 0xf: os << t << " = NOT(" << a << ")\n"
                   << r << " = OR(" << a << ", " << t << ")\n"; break;
    }
  }
  for (size_t j = 0; j < c.outputs().size(); ++j)
    os << "y" << j << " = BUF(" << wire_name(c, c.outputs()[j].wire) << ")\n";
  return os.str();
}

std::string export_dot(const Circuit& c) {
  std::ostringstream os;
  os << "digraph circuit {\n  rankdir=TB;\n";
  for (uint32_t i = 0; i < c.input_count(); ++i)
    os << "  x" << i + 1 << " [shape=circle];\n";
  for (size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    os << "  g" << i + 1 << " [shape=box, label=\"g" << i + 1 << ":"
       << op_name(g.op) << "\"];\n";
    os << "  " << wire_name(c, g.a) << " -> g" << i + 1 << ";\n";
    os << "  " << wire_name(c, g.b) << " -> g" << i + 1 << ";\n";
  }
  for (size_t j = 0; j < c.outputs().size(); ++j) {
    os << "  y" << j << " [shape=doublecircle, label=\"y" << j << "@"
       << c.outputs()[j].significance << "\"];\n";
    os << "  " << wire_name(c, c.outputs()[j].wire) << " -> y" << j << ";\n";
  }
  os << "}\n";
  return os.str();
}

bool structurally_equal(const Circuit& a, const Circuit& b) {
  if (a.input_count() != b.input_count()) return false;
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    const Gate &ga = a.gates()[i], &gb = b.gates()[i];
    if (!(ga.op == gb.op && ga.a == gb.a && ga.b == gb.b)) return false;
  }
  if (a.outputs().size() != b.outputs().size()) return false;
  for (size_t j = 0; j < a.outputs().size(); ++j) {
    const Output &oa = a.outputs()[j], &ob = b.outputs()[j];
    if (!(oa.wire == ob.wire && oa.significance == ob.significance))
      return false;
  }
  return true;
}

}  // namespace bitadder
