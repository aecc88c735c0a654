// Interchange formats. JSON is the canonical lossless form; BENCH and DOT
// are export-only.
#pragma once

#include <string>

#include "bitadder/circuit.hpp"

namespace bitadder {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(std::string msg, int line, int column)
      : std::runtime_error(std::move(msg)), line(line), column(column) {}
};

std::string serialize_json(const Circuit& c);
Circuit parse_json(const std::string& text);

// ISCAS-style BENCH text. Ops outside {AND, OR, XOR, NAND, NOR, XNOR, NOT,
// BUF} are expanded through NOT/AND/OR with fresh names, so the exported
// gate count may exceed size(). Output significances ride in a comment
// header.
std::string export_bench(const Circuit& c);

std::string export_dot(const Circuit& c);

bool structurally_equal(const Circuit& a, const Circuit& b);

}  // namespace bitadder
