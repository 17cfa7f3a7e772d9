#include "ciqcc/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ciqcc/errors.hpp"

namespace ciqcc {

namespace {

constexpr std::uint64_t bit(int q) { return std::uint64_t{1} << q; }

int symplectic(std::uint64_t xa, std::uint64_t za, std::uint64_t xb, std::uint64_t zb) {
  return (std::popcount(xa & zb) + std::popcount(za & xb)) & 1;
}

}  // namespace

StabilizerState::StabilizerState(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n_qubits) + " outside [1, 64]");
  }
  x_.assign(2 * n_, 0);
  z_.assign(2 * n_, 0);
  r_.assign(2 * n_, 0);
  for (int i = 0; i < n_; ++i) {
    x_[i] = bit(i);       // destabilizer X_i
    z_[n_ + i] = bit(i);  // stabilizer Z_i
  }
}

PauliWord StabilizerState::row(int i) const { return {n_, x_[i], z_[i], 2 * r_[i]}; }

void StabilizerState::h(int q) {
  const std::uint64_t m = bit(q);
  for (int i = 0; i < 2 * n_; ++i) {
    const std::uint64_t xq = x_[i] & m;
    const std::uint64_t zq = z_[i] & m;
    r_[i] ^= static_cast<std::uint8_t>((xq && zq) ? 1 : 0);
    x_[i] = (x_[i] & ~m) | zq;
    z_[i] = (z_[i] & ~m) | xq;
  }
}

void StabilizerState::s(int q) {
  const std::uint64_t m = bit(q);
  for (int i = 0; i < 2 * n_; ++i) {
    const bool xq = x_[i] & m;
    const bool zq = z_[i] & m;
    r_[i] ^= static_cast<std::uint8_t>(xq && zq);
    if (xq) z_[i] ^= m;
  }
}

void StabilizerState::sdg(int q) {
  const std::uint64_t m = bit(q);
  for (int i = 0; i < 2 * n_; ++i) {
    const bool xq = x_[i] & m;
    const bool zq = z_[i] & m;
    r_[i] ^= static_cast<std::uint8_t>(xq && !zq);
    if (xq) z_[i] ^= m;
  }
}

void StabilizerState::px(int q) {
  for (int i = 0; i < 2 * n_; ++i) r_[i] ^= static_cast<std::uint8_t>((z_[i] >> q) & 1U);
}

void StabilizerState::pz(int q) {
  for (int i = 0; i < 2 * n_; ++i) r_[i] ^= static_cast<std::uint8_t>((x_[i] >> q) & 1U);
}

void StabilizerState::py(int q) {
  for (int i = 0; i < 2 * n_; ++i) {
    r_[i] ^= static_cast<std::uint8_t>(((x_[i] ^ z_[i]) >> q) & 1U);
  }
}

void StabilizerState::cnot(int c, int t) {
  for (int i = 0; i < 2 * n_; ++i) {
    const unsigned xc = (x_[i] >> c) & 1U;
    const unsigned zc = (z_[i] >> c) & 1U;
    const unsigned xt = (x_[i] >> t) & 1U;
    const unsigned zt = (z_[i] >> t) & 1U;
    r_[i] ^= static_cast<std::uint8_t>(xc & zt & (xt ^ zc ^ 1U));
    x_[i] ^= static_cast<std::uint64_t>(xc) << t;
    z_[i] ^= static_cast<std::uint64_t>(zt) << c;
  }
}

void StabilizerState::controlled_pauli(int c, const PauliWord& p) {
  // Global phase of p becomes a relative phase on the control.
  switch (p.phase_exponent()) {
    case 1: s(c); break;
    case 2: pz(c); break;
    case 3: sdg(c); break;
    default: break;
  }
  for (std::uint64_t sup = p.support(); sup != 0; sup &= sup - 1) {
    const int t = std::countr_zero(sup);
    switch (p.at(t)) {
      case Pauli::X:
        cnot(c, t);
        break;
      case Pauli::Z:
        h(t);
        cnot(c, t);
        h(t);
        break;
      case Pauli::Y:
        // CY = S_t · CX · S_t†
        sdg(t);
        cnot(c, t);
        s(t);
        break;
      case Pauli::I:
        break;
    }
  }
}

void StabilizerState::apply(const Gate& g) {
  auto check = [this](int q) {
    if (q < 0 || q >= n_) throw DimensionError("gate qubit " + std::to_string(q) + " out of range");
  };
  check(g.qubit);
  switch (g.kind) {
    case GateKind::H: h(g.qubit); break;
    case GateKind::S: s(g.qubit); break;
    case GateKind::Sdg: sdg(g.qubit); break;
    case GateKind::X: px(g.qubit); break;
    case GateKind::Y: py(g.qubit); break;
    case GateKind::Z: pz(g.qubit); break;
    case GateKind::CNOT:
      check(g.target);
      cnot(g.qubit, g.target);
      break;
    case GateKind::CP:
      if (g.pauli.n_qubits() != n_) throw DimensionError("controlled Pauli size mismatch");
      if ((g.pauli.support() >> g.qubit) & 1U) {
        throw ArgumentError("controlled Pauli control lies in the word's support");
      }
      controlled_pauli(g.qubit, g.pauli);
      break;
  }
}

void StabilizerState::apply(const CliffordCircuit& c) {
  if (c.n_qubits() != n_) throw DimensionError("circuit and state sizes differ");
  for (const auto& g : c.gates()) apply(g);
}

int StabilizerState::expectation(const PauliWord& p) const {
  if (p.n_qubits() != n_) throw DimensionError("Pauli and state sizes differ");
  if (p.phase_exponent() & 1) throw ArgumentError("expectation of a non-Hermitian Pauli word");
  const std::uint64_t px = p.x_mask();
  const std::uint64_t pz = p.z_mask();
  for (int i = n_; i < 2 * n_; ++i) {
    if (symplectic(px, pz, x_[i], z_[i])) return 0;
  }
  // p = ± product of the stabilizers paired with anticommuting destabilizers.
  PauliWord acc(n_);
  for (int i = 0; i < n_; ++i) {
    if (symplectic(px, pz, x_[i], z_[i])) acc = acc * row(n_ + i);
  }
  const int k = (p.phase_exponent() - acc.phase_exponent()) & 3;
  return k == 0 ? 1 : -1;
}

std::vector<std::uint64_t> StabilizerState::stabilizer_x_span() const {
  std::vector<std::uint64_t> basis;
  for (int i = n_; i < 2 * n_; ++i) {
    std::uint64_t v = x_[i];
    for (std::uint64_t b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      // Keep the basis sorted descending so min-reduction is a full reduction.
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return basis;
}

StabilizerState apply(StabilizerState state, const Gate& g) {
  state.apply(g);
  return state;
}

int expectation_pauli(const StabilizerState& state, const PauliWord& p) {
  return state.expectation(p);
}

namespace {

double checked_real(std::complex<double> sum) {
  if (std::abs(sum.imag()) > 1e-9) {
    throw NumericError("expectation has imaginary part " + format_double(sum.imag()) +
                       "; operator is not Hermitian");
  }
  return sum.real();
}

}  // namespace

double expectation_operator(const StabilizerState& state, const QubitOperator& h) {
  if (h.n_qubits() != state.n_qubits()) throw DimensionError("operator and state sizes differ");
  std::complex<double> sum{};
  for (const auto& t : h.terms()) {
    const int e = state.expectation(t.word);
    if (e != 0) sum += static_cast<double>(e) * t.coeff;
  }
  return checked_real(sum);
}

ExpectationIndex::ExpectationIndex(const QubitOperator& h) : n_(h.n_qubits()) {
  for (const auto& t : h.terms()) {
    auto [it, inserted] = by_x_.try_emplace(t.word.x_mask(), groups_.size());
    if (inserted) groups_.push_back({t.word.x_mask(), {}});
    groups_[it->second].terms.push_back(t);
  }
}

double ExpectationIndex::expectation(const StabilizerState& state) const {
  if (state.n_qubits() != n_) throw DimensionError("operator and state sizes differ");
  const std::vector<std::uint64_t> span = state.stabilizer_x_span();
  std::vector<std::size_t> hits;
  if (span.size() < 63 && (std::uint64_t{1} << span.size()) <= groups_.size()) {
    // Enumerate the span (Gray code) and look each element up.
    std::uint64_t v = 0;
    const std::uint64_t count = std::uint64_t{1} << span.size();
    for (std::uint64_t k = 0; k < count; ++k) {
      if (k > 0) v ^= span[std::countr_zero(k)];
      if (auto it = by_x_.find(v); it != by_x_.end()) hits.push_back(it->second);
    }
    std::sort(hits.begin(), hits.end());
  } else {
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      std::uint64_t v = groups_[g].x;
      for (std::uint64_t b : span) v = std::min(v, v ^ b);
      if (v == 0) hits.push_back(g);
    }
  }
  std::complex<double> sum{};
  for (std::size_t g : hits) {
    for (const auto& t : groups_[g].terms) {
      const int e = state.expectation(t.word);
      if (e != 0) sum += static_cast<double>(e) * t.coeff;
    }
  }
  return checked_real(sum);
}

std::optional<std::vector<bool>> basis_state_of(const CliffordCircuit& c) {
  std::vector<bool> bits(static_cast<std::size_t>(c.n_qubits()), false);
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::X:
      case GateKind::Y:
        bits[g.qubit] = !bits[g.qubit];
        break;
      case GateKind::Z:
        break;
      default:
        return std::nullopt;
    }
  }
  return bits;
}

}  // namespace ciqcc
