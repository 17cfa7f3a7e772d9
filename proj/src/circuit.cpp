#include "ciqcc/circuit.hpp"

#include <sstream>

#include "ciqcc/errors.hpp"
#include "ciqcc/qubit_operator.hpp"
#include "ciqcc/stabilizer.hpp"

namespace ciqcc {

CliffordCircuit::CliffordCircuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n_qubits) + " outside [1, 64]");
  }
}

CliffordCircuit& CliffordCircuit::add(const Gate& g) {
  auto check = [this](int q) {
    if (q < 0 || q >= n_qubits_) {
      throw DimensionError("gate qubit " + std::to_string(q) + " out of range for " +
                           std::to_string(n_qubits_) + " qubits");
    }
  };
  check(g.qubit);
  if (g.kind == GateKind::CNOT) {
    check(g.target);
    if (g.target == g.qubit) throw ArgumentError("CNOT control equals target");
  }
  if (g.kind == GateKind::CP) {
    if (g.pauli.n_qubits() != n_qubits_) {
      throw DimensionError("controlled Pauli acts on a different register size");
    }
    if ((g.pauli.support() >> g.qubit) & 1U) {
      throw ArgumentError("controlled Pauli control lies in the word's support");
    }
  }
  gates_.push_back(g);
  return *this;
}

CliffordCircuit& CliffordCircuit::append(const CliffordCircuit& other) {
  if (other.n_qubits_ != n_qubits_) throw DimensionError("appending circuits of different sizes");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

CliffordCircuit CliffordCircuit::widened(int n_qubits) const {
  if (n_qubits < n_qubits_) throw DimensionError("cannot narrow a circuit");
  CliffordCircuit out(n_qubits);
  for (Gate g : gates_) {
    if (g.kind == GateKind::CP) g.pauli = PauliWord(n_qubits, g.pauli.x_mask(), g.pauli.z_mask(), g.pauli.phase_exponent());
    out.add(g);
  }
  return out;
}

namespace {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CP: return "CP";
  }
  return "?";
}

}  // namespace

std::string CliffordCircuit::dump() const {
  std::string out;
  for (const auto& g : gates_) {
    out += gate_name(g.kind);
    out += ' ';
    out += std::to_string(g.qubit);
    if (g.kind == GateKind::CNOT) out += ' ' + std::to_string(g.target);
    if (g.kind == GateKind::CP) {
      out += ' ';
      if (g.pauli.phase_exponent() == 2) out += '-';
      out += g.pauli.to_sparse_string();
    }
    out += '\n';
  }
  return out;
}

CliffordCircuit parse_circuit(std::string_view text, int n_qubits) {
  CliffordCircuit c(n_qubits);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name) || name.front() == '#') continue;
    int q = -1;
    if (!(ls >> q)) throw ParseError("gate '" + name + "' needs a qubit", line_no);
    try {
      if (name == "H") c.h(q);
      else if (name == "S") c.s(q);
      else if (name == "SDG") c.sdg(q);
      else if (name == "X") c.x(q);
      else if (name == "Y") c.y(q);
      else if (name == "Z") c.z(q);
      else if (name == "CNOT") {
        int t = -1;
        if (!(ls >> t)) throw ParseError("CNOT needs a target", line_no);
        c.cnot(q, t);
      } else if (name == "CP") {
        std::string rest;
        std::getline(ls, rest);
        const QubitOperator op = from_text("(1,0) " + rest, n_qubits);
        if (op.size() != 1) throw ParseError("CP needs one Pauli word", line_no);
        c.controlled_pauli(q, op.terms()[0].word);
      } else {
        throw ParseError("unknown gate '" + name + "'", line_no);
      }
    } catch (const DimensionError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return c;
}

std::string AnsatzCircuit::dump() const {
  std::string out = reference.dump();
  for (const auto& r : rotations) {
    if (r.word.is_identity()) continue;  // global phase
    const std::vector<int> support = FlipSet(r.word.n_qubits(), r.word.support()).indices();
    const CliffordCircuit pre = basis_change(r.word, false);
    const CliffordCircuit post = basis_change(r.word, true);
    out += pre.dump();
    for (std::size_t k = 0; k + 1 < support.size(); ++k) {
      out += "CNOT " + std::to_string(support[k]) + ' ' + std::to_string(support[k + 1]) + '\n';
    }
    const double angle = r.word.phase_exponent() == 2 ? -r.angle : r.angle;
    out += "RZ " + std::to_string(support.back()) + ' ' + format_double(angle) + '\n';
    for (std::size_t k = support.size() - 1; k > 0; --k) {
      out += "CNOT " + std::to_string(support[k - 1]) + ' ' + std::to_string(support[k]) + '\n';
    }
    out += post.dump();
  }
  return out;
}

}  // namespace ciqcc
