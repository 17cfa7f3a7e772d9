#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ciqcc/circuit.hpp"
#include "ciqcc/qubit_operator.hpp"

namespace ciqcc {

/// Aaronson–Gottesman tableau: N destabilizer rows followed by N stabilizer
/// rows, each a Hermitian Pauli word with a sign bit. Starts in |0…0⟩.
class StabilizerState {
 public:
  StabilizerState() = default;
  explicit StabilizerState(int n_qubits);

  int n_qubits() const noexcept { return n_; }

  void apply(const Gate& g);
  void apply(const CliffordCircuit& c);

  /// Row i in [0, 2N): destabilizers first. Phase is 0 or 2.
  PauliWord row(int i) const;
  PauliWord stabilizer(int i) const { return row(n_ + i); }
  PauliWord destabilizer(int i) const { return row(i); }

  /// ⟨p⟩ ∈ {-1, 0, +1}. Throws ArgumentError for non-Hermitian p (phase ±i).
  int expectation(const PauliWord& p) const;

  /// Basis of the GF(2) span of the stabilizer rows' X parts. A Pauli with
  /// X part outside this span anticommutes with some stabilizer.
  std::vector<std::uint64_t> stabilizer_x_span() const;

 private:
  void h(int q);
  void s(int q);
  void sdg(int q);
  void px(int q);
  void py(int q);
  void pz(int q);
  void cnot(int c, int t);
  void controlled_pauli(int c, const PauliWord& p);

  int n_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  std::vector<std::uint8_t> r_;
};

/// Returns a copy of `state` with the gate applied.
StabilizerState apply(StabilizerState state, const Gate& g);

int expectation_pauli(const StabilizerState& state, const PauliWord& p);

/// Σ h_j ⟨P_j⟩. Throws NumericError if the imaginary residue exceeds 1e-9
/// (the operator is not Hermitian).
double expectation_operator(const StabilizerState& state, const QubitOperator& h);

/// Terms of an operator grouped by X mask. Only groups whose X mask lies in
/// the state's stabilizer X span can contribute, so evaluating many
/// stabilizer states against one Hamiltonian skips most terms.
class ExpectationIndex {
 public:
  ExpectationIndex() = default;
  explicit ExpectationIndex(const QubitOperator& h);

  int n_qubits() const noexcept { return n_; }
  std::size_t group_count() const noexcept { return groups_.size(); }

  /// Same value as expectation_operator(state, h).
  double expectation(const StabilizerState& state) const;

 private:
  struct Group {
    std::uint64_t x = 0;
    std::vector<QubitOperator::Term> terms;
  };
  int n_ = 0;
  std::vector<Group> groups_;
  std::unordered_map<std::uint64_t, std::size_t> by_x_;
};

/// Layer mapping `p` onto a Z string: H for X, Rx(π/2) = S†HS† for Y.
/// `inverse` gives the un-compute layer (H, Rx(−π/2) = SHS).
CliffordCircuit basis_change(const PauliWord& p, bool inverse);

/// exp(−i·angle·p/2) for angle = ±π/2 as a Clifford circuit (up to global
/// phase): basis change, CNOT ladder onto the last support qubit, central
/// Rz(±π/2) = HS†HS†H / HSHSH, mirrored un-compute.
/// Throws ArgumentError for the identity word or any other angle.
CliffordCircuit compile_exponential(const PauliWord& p, double angle);

/// Computational-basis bits if the circuit contains only X, Y, Z gates.
std::optional<std::vector<bool>> basis_state_of(const CliffordCircuit& c);

}  // namespace ciqcc
