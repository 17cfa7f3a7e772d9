#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ciqcc/circuit.hpp"
#include "ciqcc/fermion_operator.hpp"
#include "ciqcc/qubit_operator.hpp"

namespace ciqcc {

enum class MappingKind { JW, BK, JKMN };

std::string to_string(MappingKind kind);
MappingKind parse_mapping(std::string_view name);

/// Minimum number of X factors in a QCC candidate: 1 for JW/BK, 0 for JKMN.
int min_candidate_rank(MappingKind kind);

/// 2N Majorana words with signs. Mode p uses a_p = ½(γ_{2p} + iγ_{2p+1}),
/// so a†_p a_p = ½(1 + iγ_{2p}γ_{2p+1}) and |0…0⟩ is the vacuum.
struct MajoranaSet {
  int n_modes = 0;
  std::vector<PauliWord> gammas;

  const PauliWord& gamma(int k) const { return gammas[static_cast<std::size_t>(k)]; }
  QubitOperator number_operator(int mode) const;
};

MajoranaSet jw_majoranas(int n_modes);
MajoranaSet bk_majoranas(int n_modes);

/// Ternary-tree Majoranas allocated for QCC:
///  1. a complete ternary tree of N qubit nodes (children of node k are
///     3k+1, 3k+2, 3k+3 on legs X, Y, Z) gives 2N+1 leaf strings, listed
///     left to right;
///  2. the rightmost (all-Z) leaf is dropped and the rest become γ_0..γ_{2N-1};
///  3. qubits where a pair product γ_{2i}γ_{2i+1} shows X relabel X↔Z;
///  4. each pair now differs in X/Y on a single qubit q; the pair becomes
///     mode q, and γ_{2q} is negated when it carries the Y there.
MajoranaSet build_jkmn_majoranas(int n_modes);

MajoranaSet majoranas(MappingKind kind, int n_modes);

/// Substitutes a_p, a†_p by Majorana pairs and sums the products; terms
/// below `prune_eps` are dropped.
QubitOperator map_fermion(const FermionOperator& f, const MajoranaSet& m,
                          double prune_eps = kDefaultPruneEps);

QubitOperator map_jw(const FermionOperator& f, int n_spin_orbitals);
QubitOperator map_bk(const FermionOperator& f, int n_spin_orbitals);
QubitOperator map_jkmn(const FermionOperator& f, int n_spin_orbitals);
QubitOperator map_operator(const FermionOperator& f, int n_spin_orbitals, MappingKind kind);

/// Bravyi–Kitaev index sets on a (virtually padded) Fenwick tree.
struct BravyiKitaevSets {
  std::vector<int> update;  // qubits other than j that store occupation j
  std::vector<int> parity;  // qubits whose XOR is the parity of modes < j
  std::vector<int> flip;    // qubits whose XOR with qubit j gives occupation j
  std::vector<int> remainder;  // parity \ flip
};
BravyiKitaevSets bk_sets(int mode, int n_modes);

/// Qubit basis bits that encode an occupation vector under BK.
std::vector<bool> bk_encode(const std::vector<bool>& occupations);

struct OccupationVector {
  std::vector<bool> bits;

  int electron_count() const;
};

/// Lowest orbitals filled: alpha in spin-orbitals 0, 2, …; beta in 1, 3, ….
OccupationVector aufbau_occupation(int n_spatial, int n_electrons, int ms2);

/// Clifford circuit preparing the determinant: JW puts X on occupied modes,
/// BK applies X on the BK-encoded bits, JKMN applies the X/Y letters of
/// ∏_{i∈occ} γ_{2i} (Z letters act trivially on |0…0⟩).
CliffordCircuit reference_circuit(const OccupationVector& occ, MappingKind kind);

}  // namespace ciqcc
