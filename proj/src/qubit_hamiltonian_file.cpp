#include "ciqcc/qubit_hamiltonian_file.hpp"

#include <charconv>
#include <sstream>

#include "ciqcc/errors.hpp"

namespace ciqcc {

std::string bits_to_string(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

std::vector<bool> bits_from_string(std::string_view s) {
  std::vector<bool> bits;
  for (char c : s) {
    if (c != '0' && c != '1') throw ParseError("reference bits must be 0/1");
    bits.push_back(c == '1');
  }
  return bits;
}

QubitHamiltonianFile load_qubit_hamiltonian(std::string_view text) {
  QubitHamiltonianFile out;
  int n_qubits = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() != '#') continue;
    std::istringstream ls(line.substr(1));
    std::string key, value;
    if (!(ls >> key >> value)) continue;
    if (key == "n_qubits") {
      auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), n_qubits);
      if (ec != std::errc{} || p != value.data() + value.size() || n_qubits < 1) {
        throw ParseError("bad n_qubits '" + value + "'", line_no);
      }
    } else if (key == "reference") {
      try {
        out.reference = bits_from_string(value);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    } else if (key == "fci") {
      double e = 0.0;
      auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), e);
      if (ec != std::errc{} || p != value.data() + value.size()) {
        throw ParseError("bad fci energy '" + value + "'", line_no);
      }
      out.fci_energy = e;
    }
  }
  if (n_qubits == 0 && out.reference) n_qubits = static_cast<int>(out.reference->size());
  out.hamiltonian = from_text(text, n_qubits);
  if (out.reference && static_cast<int>(out.reference->size()) != out.hamiltonian.n_qubits()) {
    throw ParseError("reference has " + std::to_string(out.reference->size()) +
                     " bits for a " + std::to_string(out.hamiltonian.n_qubits()) +
                     "-qubit operator");
  }
  return out;
}

std::string save_qubit_hamiltonian(const QubitHamiltonianFile& file) {
  std::string out = "# n_qubits " + std::to_string(file.hamiltonian.n_qubits()) + "\n";
  if (file.reference) out += "# reference " + bits_to_string(*file.reference) + "\n";
  if (file.fci_energy) out += "# fci " + format_double(*file.fci_energy) + "\n";
  out += to_text(file.hamiltonian);
  return out;
}

}  // namespace ciqcc
