#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ciqcc/circuit.hpp"
#include "ciqcc/mappings.hpp"
#include "ciqcc/qubit_operator.hpp"

namespace ciqcc {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMaxIterations = 2;

enum class InputKind { Fcidump, Qubitop };

/// From the extension: ".qubitop" is a qubit operator, anything else an FCIDUMP.
InputKind detect_input_kind(const std::string& path);

/// Hamiltonian, reference circuit and any known FCI energy for one input.
struct Problem {
  QubitOperator hamiltonian;
  CliffordCircuit reference;
  std::optional<double> fci_energy;
};

/// FCIDUMPs are mapped with `kind` and start from the aufbau determinant;
/// qubit operator files use their reference bits (all zero if absent).
Problem load_problem(const std::string& path, InputKind input, MappingKind kind);

/// Full command line, argv[0] included. Output and diagnostics go to the
/// given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ciqcc
