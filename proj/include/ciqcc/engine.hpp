#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ciqcc/circuit.hpp"
#include "ciqcc/mappings.hpp"
#include "ciqcc/qubit_operator.hpp"
#include "ciqcc/stabilizer.hpp"

namespace ciqcc {

enum class SelectionMode { Rotosolve, Gradient };

std::string to_string(SelectionMode mode);
SelectionMode parse_selection(std::string_view name);

struct RunConfig {
  MappingKind mapping = MappingKind::JW;
  double epsilon_conv = 1e-6;
  int max_iterations = 100;
  SelectionMode selection = SelectionMode::Rotosolve;
  double prune_eps = kDefaultPruneEps;
  std::optional<int> max_candidate_rank;
  bool compression = false;
  /// Up to K mutually commuting generators per step; K <= 1 disables.
  int multi_generator = 1;
  /// DIS entries whose representative has |gradient| at or below this go.
  double gradient_threshold = 1e-10;
  bool parallel = true;

  /// Throws ArgumentError on an inconsistent configuration.
  void validate(int n_qubits) const;
};

/// Σ_{odd n_y} Σ_{n_x=n0}^{N−n_y} C(N,n_y)·C(N−n_y,n_x), n0 from the mapping.
/// Throws std::overflow_error past 64 bits.
std::uint64_t pool_size(int n_qubits, MappingKind kind);

/// X/Y words on `flip` with an odd number of Y and at least `min_x` X
/// factors, sorted lexicographically.
std::vector<PauliWord> enumerate_candidates(const FlipSet& flip, int min_x);

/// Y on the lowest flip index, X elsewhere.
PauliWord representative_word(const FlipSet& flip);

struct DISEntry {
  FlipSet flip_set;
  std::vector<PauliWord> candidates;
  PauliWord representative;
  double gradient = 0.0;
};

struct RotosolveResult {
  double phi = 0.0;
  double energy = 0.0;
};

/// Exact minimizer of a + b·cos φ + c·sin φ sampled at 0, +π/2, −π/2.
RotosolveResult rotosolve_solve(double e0, double e_plus, double e_minus);

/// Wraps an angle into [−π, π).
double normalize_angle(double phi);

struct CandidateResult {
  PauliWord word;
  double phi = 0.0;
  double energy = 0.0;
  double gradient = 0.0;
  double e_plus = 0.0;
  double e_minus = 0.0;
};

/// Drops terms with X/Y outside `support`, substitutes Z factors outside
/// `support` by their sign on `ref_bits`, and reindexes to |support|
/// qubits (in increasing index order).
QubitOperator compress_support(const QubitOperator& h, const FlipSet& support,
                               const std::vector<bool>& ref_bits);

/// Expectations of one Hamiltonian on ref·exp(∓iπ/4·p) states.
class EnergyEvaluator {
 public:
  EnergyEvaluator(const QubitOperator& h, const CliffordCircuit& ref);

  int n_qubits() const noexcept { return index_.n_qubits(); }
  double reference_energy() const noexcept { return e0_; }
  /// Rotosolve on the stabilizer energies at ±π/2.
  CandidateResult evaluate(const PauliWord& p) const;

 private:
  ExpectationIndex index_;
  StabilizerState ref_state_;
  double e0_ = 0.0;
};

/// Same as EnergyEvaluator(h, ref).evaluate(p) with the given E0.
CandidateResult evaluate_candidate(const PauliWord& p, const QubitOperator& h,
                                   const CliffordCircuit& ref, double e0);

/// Screens flip sets by their representative gradient.
std::vector<DISEntry> build_dis(const QubitOperator& h, const CliffordCircuit& ref,
                                const RunConfig& cfg);

/// Per-candidate Rotosolve over every candidate of every entry, in entry
/// order then candidate order.
std::vector<CandidateResult> evaluate_candidates_serial(const std::vector<DISEntry>& dis,
                                                        const QubitOperator& h,
                                                        const CliffordCircuit& ref,
                                                        const RunConfig& cfg);
std::vector<CandidateResult> evaluate_candidates_parallel(const std::vector<DISEntry>& dis,
                                                          const QubitOperator& h,
                                                          const CliffordCircuit& ref,
                                                          const RunConfig& cfg);

/// Index of the chosen candidate. Ties within 1e-12 go to the
/// lexicographically smaller word. Throws ArgumentError when empty.
std::size_t select_generator(const std::vector<CandidateResult>& evaluated, SelectionMode mode);

/// H' = G†HG for G = exp(−iφp/2), with `max_imag` (if given) set to the
/// largest imaginary residue before it is dropped.
QubitOperator fold(const QubitOperator& h, const PauliWord& p, double phi,
                   double prune_eps = kDefaultPruneEps, double* max_imag = nullptr);

/// Greedy set of up to k mutually commuting candidates in ascending E
/// order; the first is `evaluated[first]`, later angles are re-solved on H
/// folded by the earlier ones. Candidates that no longer lower the energy
/// are skipped.
std::vector<PauliRotation> add_commuting_generators(const std::vector<CandidateResult>& evaluated,
                                                    std::size_t first, int k,
                                                    const QubitOperator& h,
                                                    const CliffordCircuit& ref,
                                                    double prune_eps = kDefaultPruneEps);

struct IterationRecord {
  int m = 0;
  PauliWord chosen;
  double phi = 0.0;
  /// Commuting generators folded alongside `chosen` (multi-generator steps).
  std::vector<PauliRotation> extra;
  double energy = 0.0;
  std::size_t n_terms = 0;
  std::size_t dis_size = 0;
  std::size_t n_candidates = 0;
  SelectionMode selection_mode = SelectionMode::Rotosolve;
  double max_imag = 0.0;

  std::vector<PauliRotation> generators() const;
};

enum class StopReason { Converged, EmptyDIS, MaxIterations };
std::string to_string(StopReason r);

struct RunResult {
  double initial_energy = 0.0;
  std::vector<IterationRecord> records;
  QubitOperator final_hamiltonian;
  StopReason stop = StopReason::Converged;

  double final_energy() const {
    return records.empty() ? initial_energy : records.back().energy;
  }
};

using IterationCallback = std::function<void(const IterationRecord&, const QubitOperator&)>;

RunResult run(const QubitOperator& h0, const CliffordCircuit& ref, const RunConfig& cfg,
              const IterationCallback& on_iteration = {});

/// Reference followed by the generators with the last iteration applied
/// first, so that ⟨H0⟩ on the result equals the last folded energy.
AnsatzCircuit compile_final_circuit(const std::vector<IterationRecord>& records,
                                    const CliffordCircuit& ref);

}  // namespace ciqcc
