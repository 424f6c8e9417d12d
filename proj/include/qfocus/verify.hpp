#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qfocus/focus.hpp"

namespace qfocus {

struct LawResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;     // exact laws count mismatches here
  double max_deviation = 0.0;   // numeric laws report their worst error here
  double tolerance = 0.0;

  bool passed() const noexcept { return failures == 0 && max_deviation <= tolerance; }
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t max_wires = 6;
  std::size_t max_gate_wires = 3;
  std::size_t trials = 200;
  FocusOptions focus;
};

/// Exhaustive get/put, membership, factorization and composition laws over
/// every lens with codomain <= max_wires (q = 2).
std::vector<LawResult> check_lens_laws(std::size_t max_wires = 5);

/// curry/uncurry cancellation, fast vs reference focusing, focus_comp,
/// focusM, focusC, unitary_focus, focus_dpbasis, dpmerge_dpbasis,
/// naturality of blockwise application, classical focusing.
std::vector<LawResult> check_focus_laws(const SuiteConfig& cfg);

/// Builtin and random gates, unitary_comp, ket_bra construction of hadamard.
std::vector<LawResult> check_unitarity(const SuiteConfig& cfg);

/// Dense Kronecker/permutation semantics against focus_apply.
std::vector<LawResult> check_oracle(const SuiteConfig& cfg);

/// Commutative monoid of focused endomorphisms and compn_mor_disjoint.
std::vector<LawResult> check_monoid(const SuiteConfig& cfg);

/// Bit-flip, sign-flip and Shor codes, GHZ, reversal.
std::vector<LawResult> check_examples(const SuiteConfig& cfg);

bool all_passed(const std::vector<LawResult>& results);

}  // namespace qfocus
