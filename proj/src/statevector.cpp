#include "ciqcc/statevector.hpp"

#include <bit>
#include <cmath>

#include "ciqcc/errors.hpp"

namespace ciqcc {

namespace {

using Amp = StateVector::Amplitude;

void check_cap(int n) {
  if (n < 1 || n > kOracleMaxQubits) {
    throw DimensionError("statevector oracle supports 1.." + std::to_string(kOracleMaxQubits) +
                         " qubits, got " + std::to_string(n));
  }
}

Amp i_power(int k) {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

/// P|k⟩ = w(k)|k ⊕ x⟩ with w(k) = i^{phase+|y|}·(−1)^{|z & k|}.
Amp word_weight(const PauliWord& p) { return i_power(p.phase_exponent() + p.y_count()); }

}  // namespace

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  check_cap(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Amp{});
  amps_[0] = 1.0;
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) throw ArgumentError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw NumericError("cannot normalize the zero vector");
  for (auto& a : amps_) a /= nrm;
}

void StateVector::apply_pauli(const PauliWord& p) {
  if (p.n_qubits() != n_) throw DimensionError("Pauli width differs from state");
  const std::uint64_t x = p.x_mask(), z = p.z_mask();
  const Amp w = word_weight(p);
  std::vector<Amp> out(amps_.size());
  for (std::uint64_t k = 0; k < amps_.size(); ++k) {
    const Amp a = (std::popcount(z & k) & 1) ? -amps_[k] : amps_[k];
    out[k ^ x] = w * a;
  }
  amps_.swap(out);
}

void StateVector::apply(const Gate& g) {
  const std::size_t dim = amps_.size();
  const std::uint64_t bit = std::uint64_t{1} << g.qubit;
  const double r = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H:
      for (std::uint64_t k = 0; k < dim; ++k) {
        if (k & bit) continue;
        const Amp a = amps_[k], b = amps_[k | bit];
        amps_[k] = r * (a + b);
        amps_[k | bit] = r * (a - b);
      }
      break;
    case GateKind::S:
    case GateKind::Sdg: {
      const Amp ph = g.kind == GateKind::S ? Amp(0, 1) : Amp(0, -1);
      for (std::uint64_t k = 0; k < dim; ++k) {
        if (k & bit) amps_[k] *= ph;
      }
      break;
    }
    case GateKind::X: apply_pauli(PauliWord::single(n_, g.qubit, Pauli::X)); break;
    case GateKind::Y: apply_pauli(PauliWord::single(n_, g.qubit, Pauli::Y)); break;
    case GateKind::Z: apply_pauli(PauliWord::single(n_, g.qubit, Pauli::Z)); break;
    case GateKind::CNOT: {
      const std::uint64_t t = std::uint64_t{1} << g.target;
      for (std::uint64_t k = 0; k < dim; ++k) {
        if ((k & bit) && !(k & t)) std::swap(amps_[k], amps_[k | t]);
      }
      break;
    }
    case GateKind::CP: {
      StateVector moved = *this;
      moved.apply_pauli(g.pauli);
      for (std::uint64_t k = 0; k < dim; ++k) {
        if (k & bit) amps_[k] = moved.amps_[k];
      }
      break;
    }
  }
}

void StateVector::apply(const CliffordCircuit& c) {
  if (c.n_qubits() != n_) throw DimensionError("circuit width differs from state");
  for (const auto& g : c.gates()) apply(g);
}

void StateVector::apply_rotation(const PauliRotation& rot) {
  StateVector moved = *this;
  moved.apply_pauli(rot.word);
  const double c = std::cos(0.5 * rot.angle), s = std::sin(0.5 * rot.angle);
  for (std::size_t k = 0; k < amps_.size(); ++k) amps_[k] = c * amps_[k] + Amp(0, -s) * moved.amps_[k];
}

void StateVector::apply(const AnsatzCircuit& a) {
  apply(a.reference);
  for (const auto& r : a.rotations) apply_rotation(r);
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw DimensionError("state dimensions differ");
  std::complex<double> s = 0.0;
  for (std::size_t k = 0; k < a.dimension(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

StateVector apply_operator_serial(const QubitOperator& h, const StateVector& psi) {
  if (h.n_qubits() != psi.n_qubits()) throw DimensionError("operator width differs from state");
  StateVector out = psi;
  auto& o = out.amplitudes();
  std::fill(o.begin(), o.end(), Amp{});
  const auto& in = psi.amplitudes();
  for (const auto& t : h) {
    const std::uint64_t x = t.word.x_mask(), z = t.word.z_mask();
    const Amp w = t.coeff * word_weight(t.word);
    for (std::uint64_t k = 0; k < in.size(); ++k) {
      const Amp a = w * in[k];
      o[k ^ x] += (std::popcount(z & k) & 1) ? -a : a;
    }
  }
  return out;
}

StateVector apply_operator_parallel(const QubitOperator& h, const StateVector& psi) {
  if (h.n_qubits() != psi.n_qubits()) throw DimensionError("operator width differs from state");
  StateVector out = psi;
  auto& o = out.amplitudes();
  const auto& in = psi.amplitudes();
  const auto terms = h.terms();
  std::vector<Amp> weights(terms.size());
  for (std::size_t j = 0; j < terms.size(); ++j) weights[j] = terms[j].coeff * word_weight(terms[j].word);
  const auto dim = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < dim; ++j) {
    const auto uj = static_cast<std::uint64_t>(j);
    Amp acc{};
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::uint64_t k = uj ^ terms[t].word.x_mask();
      const Amp a = weights[t] * in[k];
      acc += (std::popcount(terms[t].word.z_mask() & k) & 1) ? -a : a;
    }
    o[j] = acc;
  }
  return out;
}

double expectation(const QubitOperator& h, const StateVector& psi) {
  const StateVector hpsi = apply_operator(h, psi);
  const std::complex<double> num = inner(psi, hpsi);
  const double den = std::real(inner(psi, psi));
  if (std::abs(num.imag()) > 1e-9 * std::max(1.0, std::abs(num.real()))) {
    throw NumericError("expectation has an imaginary part; operator is not Hermitian");
  }
  return num.real() / den;
}

StateVector simulate(const AnsatzCircuit& a) {
  StateVector s(a.n_qubits());
  s.apply(a);
  return s;
}

StateVector simulate(const CliffordCircuit& c) {
  StateVector s(c.n_qubits());
  s.apply(c);
  return s;
}

std::vector<double> energy_scan(const AnsatzCircuit& circuit, std::size_t free_rotation,
                                const QubitOperator& h, const std::vector<double>& grid) {
  if (free_rotation >= circuit.rotations.size()) throw ArgumentError("free rotation index out of range");
  check_cap(circuit.n_qubits());
  // The prefix is shared by every grid point.
  StateVector prefix(circuit.n_qubits());
  prefix.apply(circuit.reference);
  for (std::size_t r = 0; r < free_rotation; ++r) prefix.apply_rotation(circuit.rotations[r]);
  std::vector<double> out;
  out.reserve(grid.size());
  for (double phi : grid) {
    StateVector s = prefix;
    s.apply_rotation({circuit.rotations[free_rotation].word, phi});
    for (std::size_t r = free_rotation + 1; r < circuit.rotations.size(); ++r) {
      s.apply_rotation(circuit.rotations[r]);
    }
    out.push_back(expectation(h, s));
  }
  return out;
}

}  // namespace ciqcc
