// qfocus: run circuit files, emit the example circuits, and run the law suites.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfocus/circuits.hpp"
#include "qfocus/io.hpp"
#include "qfocus/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

qfocus::State read_input(const std::string& input, const qfocus::Circuit& c) {
  if (input.empty()) return qfocus::ket(qfocus::Tuple(c.wires(), 0), c.alphabet());
  if (std::filesystem::is_regular_file(input)) {
    std::ifstream in(input);
    std::stringstream buf;
    buf << in.rdbuf();
    return qfocus::parse_state(buf.str(), c.alphabet(), c.wires());
  }
  const qfocus::Tuple t = qfocus::parse_tuple(input, c.alphabet());
  if (t.size() != c.wires()) {
    throw qfocus::Error(qfocus::ErrorCode::ArityMismatch, "input '" + input + "' has " + std::to_string(t.size()) +
                                                              " wires, circuit has " + std::to_string(c.wires()));
  }
  return qfocus::ket(t, c.alphabet());
}

qfocus::Circuit example(const std::string& name, std::size_t n) {
  if (name == "ghz") return qfocus::ghz(n);
  if (name == "reverse") return qfocus::rev_circuit(n);
  if (name == "shor") {
    const auto sc = qfocus::shor_components();
    return qfocus::vcomp(sc.shor_dec, sc.shor_enc);
  }
  throw qfocus::Error(qfocus::ErrorCode::UnknownExample, "no example named '" + name + "' (ghz, reverse, shor)");
}

void print_report(const std::string& scope, const std::vector<qfocus::LawResult>& results) {
  for (const auto& r : results) {
    std::printf("[%s] %-14s %-34s cases=%-8zu failures=%-4zu max_dev=%.3e tol=%.1e\n", r.passed() ? "PASS" : "FAIL",
                scope.c_str(), r.name.c_str(), r.cases, r.failures, r.max_deviation, r.tolerance);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lens-focused quantum circuit simulator"};
  app.require_subcommand(1);

  bool parallel = false;

  auto* run = app.add_subcommand("run", "Run a state through a circuit file");
  std::string circuit_path;
  std::string input;
  double threshold = 0.0;
  run->add_option("circuit", circuit_path, "Circuit file (JSON)")->required();
  run->add_option("--input", input, "Basis tuple such as 010, or a state file (default: all zeros)");
  run->add_option("--threshold", threshold, "Hide amplitudes of smaller magnitude")->check(CLI::NonNegativeNumber);
  run->add_flag("--parallel", parallel, "Process complement groups on several threads");

  auto* check = app.add_subcommand("check", "Run law suites");
  std::vector<std::string> scopes;
  std::uint64_t seed = 1;
  std::size_t max_wires = 0;
  std::size_t trials = 200;
  bool oracle = false;
  check->add_option("scope", scopes, "lens-laws, focus-laws, unitarity, oracle, monoid, examples (default: all)")
      ->check(CLI::IsMember({"lens-laws", "focus-laws", "unitarity", "oracle", "monoid", "examples", "all"}));
  check->add_option("--seed", seed, "Seed for randomized suites");
  check->add_option("--max-wires", max_wires, "Largest wire count (default 5 for lens laws, 6 otherwise)")
      ->check(CLI::Range(1, 12));
  check->add_option("--trials", trials, "Randomized trials per law")->check(CLI::PositiveNumber);
  check->add_flag("--oracle", oracle, "Include the dense oracle comparison");
  check->add_flag("--parallel", parallel, "Process complement groups on several threads");

  auto* examples = app.add_subcommand("examples", "Write an example circuit file");
  std::string name;
  std::size_t size = 4;
  std::string out_path;
  examples->add_option("name", name, "ghz, reverse or shor")->required();
  examples->add_option("-n,--size", size, "GHZ depth or reversal width");
  examples->add_option("-o,--output", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  qfocus::FocusOptions focus_opts{parallel, 0};
  try {
    if (*run) {
      const qfocus::Circuit c = qfocus::load_circuit(circuit_path);
      const qfocus::State out = qfocus::run_circuit(c, read_input(input, c), focus_opts);
      std::cout << qfocus::format_state(out, threshold);
      return kExitOk;
    }
    if (*examples) {
      const std::string text = qfocus::emit_circuit(example(name, size));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream(out_path) << text;
      }
      return kExitOk;
    }

    if (oracle) scopes.emplace_back("oracle");
    if (scopes.empty() || std::find(scopes.begin(), scopes.end(), "all") != scopes.end()) {
      scopes = {"lens-laws", "focus-laws", "unitarity", "oracle", "monoid", "examples"};
    }
    qfocus::SuiteConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.focus = focus_opts;
    if (max_wires != 0) cfg.max_wires = max_wires;
    std::printf("seed=%llu trials=%zu\n", static_cast<unsigned long long>(seed), trials);
    bool ok = true;
    for (const std::string& scope : scopes) {
      std::vector<qfocus::LawResult> results;
      if (scope == "lens-laws") results = qfocus::check_lens_laws(max_wires != 0 ? max_wires : 5);
      if (scope == "focus-laws") results = qfocus::check_focus_laws(cfg);
      if (scope == "unitarity") results = qfocus::check_unitarity(cfg);
      if (scope == "oracle") results = qfocus::check_oracle(cfg);
      if (scope == "monoid") results = qfocus::check_monoid(cfg);
      if (scope == "examples") results = qfocus::check_examples(cfg);
      print_report(scope, results);
      ok = ok && qfocus::all_passed(results);
    }
    std::printf("%s\n", ok ? "all laws hold" : "some laws FAILED");
    return ok ? kExitOk : kExitCheckFailed;
  } catch (const qfocus::Error& e) {
    std::cerr << "qfocus: " << e.what() << "\n";
    return kExitUsage;
  }
}
