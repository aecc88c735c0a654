// Minimal BENCH reader/evaluator for tests: enough for the subset the
// exporter emits (INPUT/OUTPUT declarations, 1-2 argument gate lines, and
// the significance comment header).
#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace benchtest {

struct BenchCircuit {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<uint32_t> significances;
  // name -> (op, args), in file order
  std::vector<std::pair<std::string, std::pair<std::string, std::vector<std::string>>>> defs;
};

inline BenchCircuit parse_bench(const std::string& text) {
  BenchCircuit b;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find("significances:");
      if (pos != std::string::npos) {
        std::string rest = line.substr(pos + 14);
        std::istringstream rs(rest);
        std::string item;
        while (std::getline(rs, item, ','))
          b.significances.push_back(std::stoul(item));
      }
      continue;
    }
    auto strip = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t z = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, z - a + 1);
    };
    line = strip(line);
    if (line.rfind("INPUT(", 0) == 0) {
      b.inputs.push_back(line.substr(6, line.size() - 7));
    } else if (line.rfind("OUTPUT(", 0) == 0) {
      b.outputs.push_back(line.substr(7, line.size() - 8));
    } else {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw std::runtime_error("bad line: " + line);
      std::string name = strip(line.substr(0, eq));
      std::string rhs = strip(line.substr(eq + 1));
      auto open = rhs.find('(');
      auto close = rhs.rfind(')');
      std::string op = strip(rhs.substr(0, open));
      std::string args = rhs.substr(open + 1, close - open - 1);
      std::vector<std::string> argv;
      std::istringstream as(args);
      std::string item;
      while (std::getline(as, item, ',')) argv.push_back(strip(item));
      b.defs.push_back({name, {op, argv}});
    }
  }
  return b;
}

inline std::vector<uint8_t> eval_bench(const BenchCircuit& b,
                                       const std::vector<uint8_t>& in_bits) {
  std::map<std::string, uint8_t> val;
  for (size_t i = 0; i < b.inputs.size(); ++i) val[b.inputs[i]] = in_bits[i];
  for (const auto& [name, rhs] : b.defs) {
    const auto& [op, args] = rhs;
    auto get = [&](const std::string& a) {
      auto it = val.find(a);
      if (it == val.end()) throw std::runtime_error("undefined net " + a);
      return it->second;
    };
    uint8_t r;
    if (op == "NOT") r = !get(args[0]);
    else if (op == "BUF") r = get(args[0]);
    else if (op == "AND") r = get(args[0]) & get(args[1]);
    else if (op == "OR") r = get(args[0]) | get(args[1]);
    else if (op == "NAND") r = !(get(args[0]) & get(args[1]));
    else if (op == "NOR") r = !(get(args[0]) | get(args[1]));
    else if (op == "XOR") r = get(args[0]) ^ get(args[1]);
    else if (op == "XNOR") r = !(get(args[0]) ^ get(args[1]));
    else throw std::runtime_error("unknown op " + op);
    val[name] = r;
  }
  std::vector<uint8_t> out;
  for (const auto& o : b.outputs) out.push_back(val.at(o));
  return out;
}

}  // namespace benchtest
