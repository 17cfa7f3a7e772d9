#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ciqcc/qubit_operator.hpp"

namespace ciqcc {

/// A qubit Hamiltonian plus the optional metadata comment lines
///
///   # n_qubits 12
///   # reference 110000000000     (computational-basis reference, qubit 0 first)
///   # fci -100.0188820003
///
/// followed by terms in the `to_text` format.
struct QubitHamiltonianFile {
  QubitOperator hamiltonian;
  std::optional<std::vector<bool>> reference;
  std::optional<double> fci_energy;
};

/// Parses the format above. Errors (bad letter, repeated qubit, malformed
/// metadata) raise ParseError.
QubitHamiltonianFile load_qubit_hamiltonian(std::string_view text);

std::string save_qubit_hamiltonian(const QubitHamiltonianFile& file);

std::string bits_to_string(const std::vector<bool>& bits);
std::vector<bool> bits_from_string(std::string_view s);

}  // namespace ciqcc
