#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ciqcc/pauli.hpp"

namespace ciqcc {

enum class GateKind { H, S, Sdg, X, Y, Z, CNOT, CP };

/// One gate. CNOT uses (qubit, target); CP is a Pauli word applied when
/// `qubit` (the control) is |1⟩.
struct Gate {
  GateKind kind = GateKind::H;
  int qubit = 0;
  int target = -1;
  PauliWord pauli;

  friend bool operator==(const Gate&, const Gate&) = default;
};

class CliffordCircuit {
 public:
  CliffordCircuit() = default;
  explicit CliffordCircuit(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  CliffordCircuit& h(int q) { return add({GateKind::H, q, -1, {}}); }
  CliffordCircuit& s(int q) { return add({GateKind::S, q, -1, {}}); }
  CliffordCircuit& sdg(int q) { return add({GateKind::Sdg, q, -1, {}}); }
  CliffordCircuit& x(int q) { return add({GateKind::X, q, -1, {}}); }
  CliffordCircuit& y(int q) { return add({GateKind::Y, q, -1, {}}); }
  CliffordCircuit& z(int q) { return add({GateKind::Z, q, -1, {}}); }
  CliffordCircuit& cnot(int control, int target) { return add({GateKind::CNOT, control, target, {}}); }
  CliffordCircuit& controlled_pauli(int control, const PauliWord& p) {
    return add({GateKind::CP, control, -1, p});
  }

  /// Validates indices (and CP control outside the word's support).
  CliffordCircuit& add(const Gate& g);
  CliffordCircuit& append(const CliffordCircuit& other);

  /// Same gates on a register of `n_qubits` ≥ current size.
  CliffordCircuit widened(int n_qubits) const;

  /// One gate per line: "H 0", "CNOT 0 1", "CP 2 X0 Z3".
  std::string dump() const;

 private:
  int n_qubits_ = 0;
  std::vector<Gate> gates_;
};

CliffordCircuit parse_circuit(std::string_view text, int n_qubits);

/// exp(-i·angle·P/2).
struct PauliRotation {
  PauliWord word;
  double angle = 0.0;
};

/// Clifford reference followed by Pauli rotations at arbitrary angles,
/// in application order.
struct AnsatzCircuit {
  CliffordCircuit reference;
  std::vector<PauliRotation> rotations;

  int n_qubits() const noexcept { return reference.n_qubits(); }
  /// Reference gates plus each rotation as basis change, CNOT ladder and
  /// a central "RZ q angle" line.
  std::string dump() const;
};

}  // namespace ciqcc
