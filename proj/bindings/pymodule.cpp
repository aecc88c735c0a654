// Python bindings for the circuit generators and the verification oracle.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bitadder/arith.hpp"
#include "bitadder/io.hpp"
#include "bitadder/logdepth.hpp"
#include "bitadder/verify.hpp"

namespace py = pybind11;
using namespace bitadder;

namespace {

MultMethod mult_method(const std::string& method, const std::string& base,
                       uint32_t threshold) {
  if (method == "dadda") return MultMethod::dadda();
  if (method == "mdfa") return MultMethod::mdfa();
  if (method == "karatsuba") {
    MultMethod::Base b = MultMethod::Base::mdfa;
    if (base == "dadda") b = MultMethod::Base::dadda;
    if (base == "pure") b = MultMethod::Base::pure;
    return MultMethod::karatsuba(b, threshold);
  }
  throw std::invalid_argument("unknown multiplier method '" + method + "'");
}

BaMethod ba_method(const std::string& method) {
  if (method == "dadda") return BaMethod::dadda;
  if (method == "mdfa") return BaMethod::mdfa;
  throw std::invalid_argument("unknown method '" + method + "'");
}

py::object to_py_int(const BigUint& v) {
  std::ostringstream os;
  os << v;
  return py::module_::import("builtins").attr("int")(os.str());
}

py::dict report_dict(const VerificationReport& rep) {
  py::dict d;
  d["mode"] = rep.mode == VerificationReport::Mode::exhaustive ? "exhaustive"
                                                               : "random";
  d["cases_checked"] = rep.cases_checked;
  d["mismatches"] = rep.mismatches;
  d["ok"] = rep.ok();
  d["elapsed"] = rep.elapsed.count();
  if (rep.first_counterexample) {
    py::dict ce;
    ce["assignment"] = rep.first_counterexample->assignment;
    ce["expected"] = to_py_int(rep.first_counterexample->expected);
    ce["actual"] = to_py_int(rep.first_counterexample->actual);
    d["first_counterexample"] = ce;
  } else {
    d["first_counterexample"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_bitadder, m) {
  m.doc() = "circuit generators for weighted bit addition";

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<uint32_t>(), py::arg("input_count") = 0)
      .def_property_readonly("input_count", &Circuit::input_count)
      .def("size", &Circuit::size)
      .def("depth", &Circuit::depth)
      .def("output_significances",
           [](const Circuit& c) {
             std::vector<uint32_t> sigs;
             for (const Output& o : c.outputs()) sigs.push_back(o.significance);
             return sigs;
           })
      .def(
          "evaluate",
          [](const Circuit& c, const std::vector<uint8_t>& bits) {
            return c.evaluate(bits);
          },
          py::arg("assignment"))
      .def(
          "weighted_output_value",
          [](const Circuit& c, const std::vector<uint8_t>& bits) {
            return to_py_int(c.weighted_output_value(bits));
          },
          py::arg("assignment"))
      .def("to_json", &serialize_json)
      .def("to_bench", &export_bench)
      .def("to_dot", &export_dot)
      .def("__repr__", [](const Circuit& c) {
        std::ostringstream os;
        os << "<Circuit inputs=" << c.input_count() << " size=" << c.size()
           << " outputs=" << c.outputs().size() << ">";
        return os.str();
      });

  m.def("parse_json", &parse_json, py::arg("text"));

  m.def(
      "generate_ba",
      [](const std::vector<uint32_t>& weights, const std::string& method) {
        if (method == "logdepth") return generate_ba_logdepth(weights);
        if (method == "dadda") return generate_ba_dadda(weights);
        if (method == "mdfa") return generate_ba_efficient(weights);
        throw std::invalid_argument("unknown method '" + method + "'");
      },
      py::arg("weights"), py::arg("method") = "mdfa",
      "Bit adder for an arbitrary significance vector.");
  m.def(
      "generate_sum",
      [](uint32_t n, const std::string& method) {
        if (method == "logdepth")
          return generate_ba_logdepth(std::vector<uint32_t>(n, 0));
        return generate_sum(n, ba_method(method));
      },
      py::arg("n"), py::arg("method") = "mdfa");
  m.def(
      "generate_add",
      [](uint32_t n, const std::string& method) {
        if (method == "logdepth") {
          std::vector<uint32_t> s;
          for (uint32_t r = 0; r < 2; ++r)
            for (uint32_t i = 0; i < n; ++i) s.push_back(i);
          return generate_ba_logdepth(s);
        }
        return generate_add(n, ba_method(method));
      },
      py::arg("n"), py::arg("method") = "mdfa");
  m.def("generate_add_bit", &generate_add_bit, py::arg("n"));
  m.def(
      "generate_mult",
      [](uint32_t n, const std::string& method, const std::string& base,
         uint32_t threshold) {
        if (method == "logdepth") return generate_mult_logdepth(n, nullptr);
        return generate_mult(n, mult_method(method, base, threshold));
      },
      py::arg("n"), py::arg("method") = "mdfa", py::arg("base") = "mdfa",
      py::arg("threshold") = 20);

  m.def(
      "oracle_value",
      [](const std::vector<uint32_t>& s, const std::vector<uint8_t>& bits) {
        return to_py_int(oracle_value(s, bits));
      },
      py::arg("weights"), py::arg("assignment"));
  m.def(
      "verify_exhaustive",
      [](const Circuit& c, const std::vector<uint32_t>& s, uint32_t limit) {
        return report_dict(verify_exhaustive(c, s, limit));
      },
      py::arg("circuit"), py::arg("weights"), py::arg("limit_bits") = 24);
  m.def(
      "verify_random",
      [](const Circuit& c, const std::vector<uint32_t>& s, uint64_t trials,
         uint64_t seed) {
        return report_dict(verify_random(c, s, trials, seed));
      },
      py::arg("circuit"), py::arg("weights"), py::arg("trials"),
      py::arg("seed") = 1);
  m.def(
      "verify_mult_exhaustive",
      [](const Circuit& c, uint32_t n, uint32_t limit) {
        return report_dict(verify_mult_exhaustive(c, n, limit));
      },
      py::arg("circuit"), py::arg("n"), py::arg("limit_bits") = 24);
  m.def(
      "verify_mult_random",
      [](const Circuit& c, uint32_t n, uint64_t trials, uint64_t seed) {
        return report_dict(verify_mult_random(c, n, trials, seed));
      },
      py::arg("circuit"), py::arg("n"), py::arg("trials"), py::arg("seed") = 1);

  m.def(
      "reproduce_table",
      [](const std::string& which) {
        std::vector<BenchRow> rows = which == "fig10"
                                         ? reproduce_fig10()
                                         : reproduce_table(std::stoi(which));
        std::vector<py::tuple> out;
        for (const BenchRow& r : rows)
          out.push_back(
              py::make_tuple(r.function, r.n, r.method, r.size, r.depth));
        return out;
      },
      py::arg("which"));
  m.def("table_csv", [](const std::string& which) {
    return to_csv(which == "fig10" ? reproduce_fig10()
                                   : reproduce_table(std::stoi(which)));
  });
}
