#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ciqcc/circuit.hpp"
#include "ciqcc/qubit_operator.hpp"

namespace ciqcc {

/// Generators are indexed 1..M in iteration order; the ansatz state is
/// G_1 G_2 … G_M |prep⟩ with G_k = exp(−iφ_k P_k/2).

/// Q = G_{m+1} … G_M expanded as Σ c_q P_q.
QubitOperator build_tail(const std::vector<PauliRotation>& generators, int m);

/// H0 folded by G_1 … G_{m−1}.
QubitOperator head_hamiltonian(const QubitOperator& h0, const std::vector<PauliRotation>& generators,
                               int m, double prune_eps = kDefaultPruneEps);

struct HadamardTestJob {
  QubitOperator::Term q;
  QubitOperator::Term q_prime;
  QubitOperator::Term h;
};

/// Ancilla (qubit N) in |+⟩, P_q controlled on 1, P_{q'} controlled on 0,
/// G_m uncontrolled, P_j controlled on 0; returns ⟨X⟩ + i⟨Y⟩ of the
/// ancilla, i.e. ⟨prep|P_{q'} G_m† P_j G_m P_q|prep⟩. Coefficients of
/// the job are not applied. `g.angle` must be 0 or ±π/2.
std::complex<double> hadamard_test(const CliffordCircuit& prep, const HadamardTestJob& job,
                                   const PauliRotation& g);

/// Default refusal threshold for |Q|²·|H_{m−1}|.
inline constexpr std::uint64_t kInteriorJobBudget = 10'000'000;

struct InteriorOptions {
  std::uint64_t job_budget = kInteriorJobBudget;
  bool parallel = true;
  double prune_eps = kDefaultPruneEps;
};

/// E(φ) = Σ_{q,q',j} c_q c*_{q'} h_j E_{qq'j}(φ) with generator m set to φ
/// (0 or ±π/2). Throws ArgumentError above the job budget and
/// NumericError if the imaginary residue exceeds 1e-9.
double interior_energy(int m, const std::vector<PauliRotation>& generators, const QubitOperator& h0,
                       const CliffordCircuit& prep, double phi, const InteriorOptions& opt = {});

/// Energy of the full ansatz by folding every generator (Clifford only).
double ansatz_energy(const std::vector<PauliRotation>& generators, const QubitOperator& h0,
                     const CliffordCircuit& prep, double prune_eps = kDefaultPruneEps);

struct InteriorStep {
  int m = 0;
  double phi_old = 0.0;
  double phi_new = 0.0;
  double energy = 0.0;
};

/// Rotosolve on the three interior energies of generator m; replaces φ_m.
InteriorStep reoptimize_interior(int m, std::vector<PauliRotation>& generators, const QubitOperator& h0,
                                 const CliffordCircuit& prep, const InteriorOptions& opt = {});

/// `sweeps` passes of reoptimize_interior over m = 1..M.
std::vector<InteriorStep> interior_sweep(std::vector<PauliRotation>& generators, const QubitOperator& h0,
                                         const CliffordCircuit& prep, int sweeps,
                                         const InteriorOptions& opt = {});

}  // namespace ciqcc
