// bacirc: generate, verify and benchmark bit-addition circuits.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bitadder/arith.hpp"
#include "bitadder/io.hpp"
#include "bitadder/logdepth.hpp"
#include "bitadder/verify.hpp"

using namespace bitadder;

namespace {

std::vector<uint32_t> add_weights(uint32_t n) {
  std::vector<uint32_t> s;
  for (uint32_t r = 0; r < 2; ++r)
    for (uint32_t i = 0; i < n; ++i) s.push_back(i);
  return s;
}

int run_gen(const std::string& func, uint32_t n,
            const std::vector<uint32_t>& weights, const std::string& method,
            uint32_t threshold, const std::string& base,
            const std::string& out_path, const std::string& format) {
  Circuit c;
  if (func == "inc") {
    c = generate_add_bit(n);
  } else if (func == "mult") {
    if (method == "logdepth") {
      c = generate_mult_logdepth(n);
    } else {
      MultMethod m = MultMethod::mdfa();
      if (method == "dadda") m = MultMethod::dadda();
      if (method == "karatsuba") {
        MultMethod::Base b = MultMethod::Base::mdfa;
        if (base == "dadda") b = MultMethod::Base::dadda;
        if (base == "pure") b = MultMethod::Base::pure;
        m = MultMethod::karatsuba(b, threshold);
      }
      c = generate_mult(n, m);
    }
  } else {
    std::vector<uint32_t> s;
    if (func == "sum")
      s.assign(n, 0);
    else if (func == "add")
      s = add_weights(n);
    else
      s = weights;  // func == "ba"
    if (method == "dadda")
      c = generate_ba_dadda(s);
    else if (method == "logdepth")
      c = generate_ba_logdepth(s);
    else
      c = generate_ba_efficient(s);
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << out_path << "\n";
      return 1;
    }
    if (format == "bench")
      f << export_bench(c);
    else if (format == "dot")
      f << export_dot(c);
    else
      f << serialize_json(c);
  }
  std::cout << "size=" << c.size() << " depth=" << c.depth()
            << " inputs=" << c.input_count() << " outputs="
            << c.outputs().size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bit-addition circuit generators"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a circuit");
  std::string func, method = "mdfa", base = "mdfa", out_path, format = "json";
  uint32_t n = 0, threshold = 20;
  std::vector<uint32_t> weights;
  std::string weights_str;
  gen->add_option("--func", func, "sum|add|inc|mult|ba")
      ->required()
      ->check(CLI::IsMember({"sum", "add", "inc", "mult", "ba"}));
  gen->add_option("--n", n, "bit width / number of bits");
  gen->add_option("--weights", weights_str, "comma-separated significances");
  gen->add_option("--method", method, "dadda|mdfa|karatsuba|logdepth")
      ->check(CLI::IsMember({"dadda", "mdfa", "karatsuba", "logdepth"}));
  gen->add_option("--threshold", threshold, "karatsuba base cutoff");
  gen->add_option("--base", base, "karatsuba base multiplier")
      ->check(CLI::IsMember({"dadda", "mdfa", "pure"}));
  gen->add_option("--out", out_path, "output file");
  gen->add_option("--format", format, "json|bench|dot")
      ->check(CLI::IsMember({"json", "bench", "dot"}));

  // verify
  auto* ver = app.add_subcommand("verify", "check a circuit against the oracle");
  std::string in_path, vweights_str;
  uint32_t exhaustive_limit = 24;
  uint64_t trials = 0, seed = 1;
  ver->add_option("--in", in_path, "circuit JSON")->required();
  ver->add_option("--weights", vweights_str, "comma-separated significances")
      ->required();
  ver->add_option("--exhaustive-limit", exhaustive_limit,
                  "max inputs for exhaustive sweeps");
  ver->add_option("--trials", trials, "random trials (0 = exhaustive)");
  ver->add_option("--seed", seed, "random seed");

  // tables
  auto* tab = app.add_subcommand("tables", "reproduce the benchmark tables");
  std::string which, table_out;
  tab->add_option("--which", which, "1|2|3|fig10")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "fig10"}));
  tab->add_option("--out", table_out, "CSV path (default table<which>.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };
  auto parse_weights = [](const std::string& str) {
    std::vector<uint32_t> w;
    std::stringstream ss(str);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(item);
        w.push_back(static_cast<uint32_t>(v));
      } catch (const std::exception&) {
        throw UsageError("bad weight '" + item + "'");
      }
    }
    return w;
  };

  try {
    if (gen->parsed()) {
      if (func == "ba") {
        if (weights_str.empty()) {
          std::cerr << "--func ba requires --weights\n";
          return 2;
        }
        weights = parse_weights(weights_str);
      } else if (n == 0) {
        std::cerr << "--func " << func << " requires --n\n";
        return 2;
      }
      return run_gen(func, n, weights, method, threshold, base, out_path,
                     format);
    }
    if (ver->parsed()) {
      std::ifstream f(in_path, std::ios::binary);
      if (!f) {
        std::cerr << "cannot open " << in_path << "\n";
        return 2;
      }
      std::string text((std::istreambuf_iterator<char>(f)),
                       std::istreambuf_iterator<char>());
      Circuit c = parse_json(text);
      std::vector<uint32_t> s = parse_weights(vweights_str);
      VerificationReport rep;
      if (trials > 0) {
        rep = verify_random(c, s, trials, seed);
      } else {
        if (c.input_count() > exhaustive_limit) {
          std::cerr << "exhaustive check over the input limit; use --trials\n";
          return 2;
        }
        rep = verify_exhaustive(c, s, exhaustive_limit);
      }
      std::cout << rep.summary() << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (tab->parsed()) {
      std::vector<BenchRow> rows =
          which == "fig10" ? reproduce_fig10() : reproduce_table(std::stoi(which));
      std::string path =
          table_out.empty() ? (which == "fig10" ? "fig10.csv"
                                                : "table" + which + ".csv")
                            : table_out;
      std::ofstream f(path, std::ios::binary);
      if (!f) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
      }
      f << to_csv(rows);
      std::cout << "wrote " << rows.size() << " rows to " << path << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.column << ": "
              << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
