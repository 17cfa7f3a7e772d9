#include <cmath>
#include <numbers>

#include "ciqcc/errors.hpp"
#include "ciqcc/stabilizer.hpp"

namespace ciqcc {

CliffordCircuit basis_change(const PauliWord& p, bool inverse) {
  CliffordCircuit c(p.n_qubits());
  for (std::uint64_t sup = p.support(); sup != 0; sup &= sup - 1) {
    const int q = std::countr_zero(sup);
    switch (p.at(q)) {
      case Pauli::X:
        c.h(q);
        break;
      case Pauli::Y:
        if (inverse) {
          c.s(q).h(q).s(q);  // Rx(-π/2)
        } else {
          c.sdg(q).h(q).sdg(q);  // Rx(π/2)
        }
        break;
      default:
        break;
    }
  }
  return c;
}

CliffordCircuit compile_exponential(const PauliWord& p, double angle) {
  if (p.is_identity()) throw ArgumentError("cannot exponentiate the identity word");
  if (p.phase_exponent() & 1) throw ArgumentError("exponentiated word must be Hermitian");
  constexpr double kHalfPi = std::numbers::pi / 2;
  int sign = 0;
  if (std::abs(angle - kHalfPi) <= 1e-12) sign = 1;
  if (std::abs(angle + kHalfPi) <= 1e-12) sign = -1;
  if (sign == 0) throw ArgumentError("Clifford exponential needs angle ±π/2");
  if (p.phase_exponent() == 2) sign = -sign;  // exp(-iθ(−P)/2) = exp(+iθP/2)

  std::vector<int> support;
  for (std::uint64_t sup = p.support(); sup != 0; sup &= sup - 1) {
    support.push_back(std::countr_zero(sup));
  }
  CliffordCircuit c = basis_change(p, false);
  for (std::size_t k = 0; k + 1 < support.size(); ++k) c.cnot(support[k], support[k + 1]);
  const int last = support.back();
  if (sign > 0) {
    c.h(last).sdg(last).h(last).sdg(last).h(last);  // Rz(π/2)
  } else {
    c.h(last).s(last).h(last).s(last).h(last);  // Rz(−π/2)
  }
  for (std::size_t k = support.size() - 1; k > 0; --k) c.cnot(support[k - 1], support[k]);
  c.append(basis_change(p, true));
  return c;
}

}  // namespace ciqcc
