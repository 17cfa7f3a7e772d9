#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ciqcc/circuit.hpp"
#include "ciqcc/qubit_operator.hpp"

namespace ciqcc {

/// Qubit cap for the statevector oracle (2^16 amplitudes).
inline constexpr int kOracleMaxQubits = 16;

/// Dense 2^N amplitude vector; qubit q is bit q of the basis index.
/// Operator application does not normalize.
class StateVector {
 public:
  using Amplitude = std::complex<double>;

  StateVector() = default;
  explicit StateVector(int n_qubits);
  static StateVector basis_state(int n_qubits, std::uint64_t index);

  int n_qubits() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  Amplitude& operator[](std::size_t i) { return amps_[i]; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
  std::vector<Amplitude>& amplitudes() noexcept { return amps_; }
  const std::vector<Amplitude>& amplitudes() const noexcept { return amps_; }

  double norm() const;
  void normalize();

  void apply(const Gate& g);
  void apply(const CliffordCircuit& c);
  /// P·ψ including the word's phase.
  void apply_pauli(const PauliWord& p);
  /// exp(−i·angle·P/2)·ψ.
  void apply_rotation(const PauliRotation& r);
  void apply(const AnsatzCircuit& a);

 private:
  int n_ = 0;
  std::vector<Amplitude> amps_;
};

/// ⟨a|b⟩.
std::complex<double> inner(const StateVector& a, const StateVector& b);

/// Σ h_j P_j ψ, term by term.
StateVector apply_operator_serial(const QubitOperator& h, const StateVector& psi);
/// Same sum, one output amplitude per loop iteration (OpenMP).
StateVector apply_operator_parallel(const QubitOperator& h, const StateVector& psi);
inline StateVector apply_operator(const QubitOperator& h, const StateVector& psi) {
  return apply_operator_parallel(h, psi);
}

/// ⟨ψ|H|ψ⟩ / ⟨ψ|ψ⟩; throws NumericError if the imaginary part exceeds 1e-9.
double expectation(const QubitOperator& h, const StateVector& psi);

/// Statevector of the circuit applied to |0…0⟩.
StateVector simulate(const AnsatzCircuit& a);
StateVector simulate(const CliffordCircuit& c);

/// ⟨H⟩ with rotation `free_rotation` of `circuit` set to each grid angle.
std::vector<double> energy_scan(const AnsatzCircuit& circuit, std::size_t free_rotation,
                                const QubitOperator& h, const std::vector<double>& grid);

struct LanczosOptions {
  double residual_tol = 1e-9;
  int krylov_dim = 80;
  int max_restarts = 200;
  std::uint64_t seed = 0x5eed;
};

struct LanczosResult {
  double energy = 0.0;
  double residual = 0.0;
  int restarts = 0;
  StateVector state;
};

/// Lowest eigenvalue with restarted Lanczos (full reorthogonalization)
/// until ‖Hψ − Eψ‖ ≤ residual_tol. Throws ConvergenceError otherwise.
LanczosResult lanczos_ground_state(const QubitOperator& h, const LanczosOptions& opt = {});
double ground_energy(const QubitOperator& h, const LanczosOptions& opt = {});

}  // namespace ciqcc
