#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qfocus/focus.hpp"

namespace qfocus {

struct Step {
  Lens lens;
  std::string gate_name;
  std::shared_ptr<const Gate> gate;
};

/// An ordered list of focused gate applications over a fixed wire count,
/// applied first to last.
class Circuit {
 public:
  explicit Circuit(std::size_t wires = 0, std::size_t q = 2) : n_(wires), q_(q) {}

  std::size_t wires() const noexcept { return n_; }
  std::size_t alphabet() const noexcept { return q_; }
  const std::vector<Step>& steps() const& noexcept { return steps_; }
  // by value on temporaries, so `for (auto& st : ghz(3).steps())` does not dangle
  std::vector<Step> steps() && { return std::move(steps_); }

  /// Throws ArityMismatch when the lens does not target this circuit or its
  /// arity differs from the gate's.
  Circuit& add(Lens l, std::string name, std::shared_ptr<const Gate> g);
  Circuit& add(Lens l, std::string name, Gate g);
  /// Builtin gate by name; throws UnknownGate.
  Circuit& add(Lens l, std::string_view builtin_name);
  Circuit& add(std::initializer_list<std::size_t> wires, std::string_view builtin_name);

 private:
  std::size_t n_;
  std::size_t q_;
  std::vector<Step> steps_;
};

/// f ∘ g: the steps of g, then those of f.
Circuit vcomp(const Circuit& f, const Circuit& g);

/// Embed an m-wire circuit along l, composing every step lens with l.
Circuit focus(const Lens& l, const Circuit& c);

State run_circuit(const Circuit& c, const State& s, const FocusOptions& opts = {});

/// The whole circuit as one dense gate, within the dense size guard.
Gate circuit_gate(const Circuit& c, std::size_t max_wires = kMaxDenseWires);

struct ShorComponents {
  Circuit bit_flip_enc;
  Circuit bit_flip_dec;
  Circuit hadamard3;
  Circuit sign_flip_enc;
  Circuit sign_flip_dec;
  Circuit shor_enc;
  Circuit shor_dec;
};

ShorComponents shor_components();

/// GHZ preparation on depth + 1 wires: a Hadamard on wire 0 followed by a
/// ladder of CNOTs on (k, k + 1).
Circuit ghz(std::size_t depth);

/// floor(n/2) swaps on the wire pairs (i, n - 1 - i).
Circuit rev_circuit(std::size_t n);

/// Marginal along l: the l2 norm of each curried block, indexed by the
/// position of the lens-local tuple.
std::vector<double> proj(const Lens& l, const State& s);

}  // namespace qfocus
