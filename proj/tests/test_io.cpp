#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "qfocus/circuits.hpp"
#include "qfocus/io.hpp"
#include "qfocus/random.hpp"
#include "support.hpp"

using namespace qfocus;
using support::code_of;

namespace {

std::string message_of(std::string_view text) {
  try {
    parse_circuit(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

void same_steps(const Circuit& a, const Circuit& b) {
  REQUIRE(a.wires() == b.wires());
  REQUIRE(a.alphabet() == b.alphabet());
  REQUIRE(a.steps().size() == b.steps().size());
  for (std::size_t k = 0; k < a.steps().size(); ++k) {
    CHECK(a.steps()[k].lens == b.steps()[k].lens);
    CHECK(a.steps()[k].gate_name == b.steps()[k].gate_name);
    CHECK(max_abs_diff(*a.steps()[k].gate, *b.steps()[k].gate) == 0.0);
  }
}

}  // namespace

TEST_CASE("the bit flip encoder from text", "[io]") {
  const Circuit c = parse_circuit(R"({"wires":3,"ops":[{"gate":"cnot","lens":[0,1]},{"gate":"cnot","lens":[0,2]}]})");
  same_steps(c, shor_components().bit_flip_enc);
  CHECK(run_circuit(c, ket({1, 0, 0})) == ket({1, 1, 1}));
}

TEST_CASE("parse errors carry their location", "[io]") {
  CHECK(code_of([] { parse_circuit(R"({"wires":3,"ops":[{"gate":"cnot","lens":[0,0]}]})"); }) ==
        ErrorCode::DuplicateIndex);
  CHECK(message_of(R"({"wires":3,"ops":[{"gate":"cnot","lens":[0,0]}]})").find("ops[0].lens") != std::string::npos);
  CHECK(code_of([] { parse_circuit(R"({"wires":3,"ops":[{"gate":"cnot","lens":[0,3]}]})"); }) ==
        ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { parse_circuit(R"({"wires":3,"ops":[{"gate":"cnot","lens":[0]}]})"); }) ==
        ErrorCode::ArityMismatch);
  CHECK(code_of([] { parse_circuit(R"({"wires":3,"ops":[{"gate":"cnot","lens":[0,1]},{"gate":"t","lens":[0]}]})"); }) ==
        ErrorCode::UnknownGate);
  CHECK(message_of(R"({"wires":3,"ops":[{"gate":"cnot","lens":[0,1]},{"gate":"t","lens":[0]}]})").find("ops[1].gate") !=
        std::string::npos);
  CHECK(code_of([] { parse_circuit("{\"wires\":3,\n \"ops\": [}"); }) == ErrorCode::ParseError);
  CHECK(message_of("{\"wires\":3,\n \"ops\": [}").find("line 2") != std::string::npos);
  CHECK(code_of([] { parse_circuit(R"({"ops":[]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_circuit(R"({"wires":-1})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_circuit(R"({"wires":2,"ops":[{"gate":"cnot","lens":[0,"1"]}]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_circuit(R"({"qudit_dim":1,"wires":2})"); }) == ErrorCode::UnsupportedAlphabet);
  CHECK(code_of([] { parse_circuit(R"({"qudit_dim":3,"wires":2,"ops":[{"gate":"cnot","lens":[0,1]}]})"); }) ==
        ErrorCode::UnsupportedAlphabet);
  CHECK(code_of([] { load_circuit("/nonexistent/circuit.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("custom gates", "[io]") {
  // column-major: the matrix [[0, -i], [i, 0]]
  const Circuit c = parse_circuit(R"({"wires":2,
    "gates":[{"name":"y","wires":1,"matrix":[[0,0],[0,1],[0,-1],[0,0]]}],
    "ops":[{"gate":"y","lens":[1]}]})");
  const State out = run_circuit(c, ket({0, 0}));
  CHECK(out[1] == Complex(0.0, 1.0));
  CHECK(code_of([] {
          parse_circuit(R"({"wires":1,"gates":[{"name":"y","wires":1,"matrix":[[0,0]]}],"ops":[]})");
        }) == ErrorCode::ArityMismatch);
  // a custom definition shadows the builtin of the same name
  const Circuit shadow = parse_circuit(R"({"wires":1,
    "gates":[{"name":"hadamard","wires":1,"matrix":[[0,0],[1,0],[1,0],[0,0]]}],
    "ops":[{"gate":"hadamard","lens":[0]}]})");
  CHECK(run_circuit(shadow, ket({0})) == ket({1}));
}

TEST_CASE("emit and parse round trip", "[io]") {
  const auto sc = shor_components();
  for (const Circuit& c : {sc.shor_enc, sc.shor_dec, vcomp(sc.shor_dec, sc.shor_enc), ghz(4), rev_circuit(7), Circuit(3)})
    same_steps(parse_circuit(emit_circuit(c)), c);

  Rng rng(79);
  Circuit custom(3, 3);
  custom.add(Lens(3, {2, 0}), "u", random_unitary_gate(2, rng, 3)).add(Lens(3, {1}), "identity(1)");
  const Circuit back = parse_circuit(emit_circuit(custom));
  same_steps(back, custom);
  // emitting twice gives the same text
  CHECK(emit_circuit(back) == emit_circuit(custom));
}

TEST_CASE("number formatting", "[io]") {
  CHECK(format_real(1.0) == "1.0");
  CHECK(format_real(0.0) == "0.0");
  CHECK(format_real(-0.0) == "0.0");
  CHECK(format_real(kInvSqrt2) == "0.7071067811865476");
  CHECK(format_real(-0.5) == "-0.5");
  CHECK(format_real(1e-20) == "1e-20");
  CHECK(format_real(3e21) == "3e+21");
  Rng rng(83);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int k = 0; k < 1000; ++k) {
    const double x = std::ldexp(u(rng), static_cast<int>(rng() % 80) - 40);
    CHECK(std::stod(format_real(x)) == x);
  }
}

TEST_CASE("state text format", "[io]") {
  CHECK(format_state(ket({1, 1, 1})) == "111 1.0 0.0\n");
  State s = State::zero(2);
  s[0] = Complex{kInvSqrt2};
  s[3] = Complex{0.0, -kInvSqrt2};
  s[1] = 1e-14;
  CHECK(format_state(s) == "00 0.7071067811865476 0.0\n01 1e-14 0.0\n11 0.0 -0.7071067811865476\n");
  CHECK(format_state(s, 1e-12) == "00 0.7071067811865476 0.0\n11 0.0 -0.7071067811865476\n");
  CHECK(parse_state(format_state(s)) == s);

  CHECK(parse_state("# a comment\n10 1.0 0.0\n\n") == ket({1, 0}));
  CHECK(parse_state("", 2, 3) == State::zero(3));
  CHECK(parse_state("2a 0.5 0.5\n", 11) == Complex(0.5, 0.5) * ket({2, 10}, 11));
  CHECK(format_state(ket({2, 10}, 11)) == "2a 1.0 0.0\n");

  CHECK(code_of([] { parse_state("10 1.0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_state("10 1.0 0.0\n10 0.5 0.0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_state("10 1.0 0.0\n1 0.5 0.0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_state("10 nan 0.0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_state("12 1.0 0.0\n"); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { parse_state("10 1.0 0.0\n", 2, 3); }) == ErrorCode::ArityMismatch);
  CHECK(code_of([] { parse_tuple("1x0"); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { parse_tuple("1-0"); }) == ErrorCode::ParseError);
  CHECK(parse_tuple("0110") == Tuple{0, 1, 1, 0});
}
