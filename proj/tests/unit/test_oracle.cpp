#include <doctest.h>

#include <nlohmann/json.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "ciqcc/errors.hpp"
#include "ciqcc/qubit_hamiltonian_file.hpp"
#include "ciqcc/statevector.hpp"
#include "dense.hpp"
#include "random_circuit.hpp"

using namespace ciqcc;
using namespace ciqcc::test;

TEST_CASE("single Paulis on basis states") {
  StateVector s(1);
  s.apply_pauli(PauliWord::from_string("Z"));
  CHECK(s[0] == Cx(1.0));
  s.apply_pauli(PauliWord::from_string("X"));
  CHECK(s[0] == Cx(0.0));
  CHECK(s[1] == Cx(1.0));
}

TEST_CASE("operator application matches dense products") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const QubitOperator h = random_hermitian(rng, 3, 12) + QubitOperator::from_word(random_word(rng, 3), Cx(0.2, 0.7));
    StateVector psi(3);
    std::normal_distribution<double> g;
    for (std::size_t k = 0; k < psi.dimension(); ++k) psi[k] = Cx(g(rng), g(rng));
    const Vec expect = dense(h) * to_eigen(psi);
    CHECK((to_eigen(apply_operator_serial(h, psi)) - expect).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((to_eigen(apply_operator_parallel(h, psi)) - expect).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("ground energies") {
  CHECK(ground_energy(QubitOperator::from_word(PauliWord::from_string("Z"))) == doctest::Approx(-1.0));
  OperatorBuilder b(2);
  b.add(PauliWord::from_string("XX"), 1.0);
  b.add(PauliWord::from_string("ZI"), 1.0);
  b.add(PauliWord::from_string("IZ"), 1.0);
  const QubitOperator h = b.build();
  CHECK(std::abs(ground_energy(h) - dense_ground(h)) < 1e-12);
  CHECK(ground_energy(QubitOperator::identity(2, 0.5)) == doctest::Approx(0.5));

  std::mt19937_64 rng(8);
  for (int n = 1; n <= 6; ++n) {
    const QubitOperator r = random_hermitian(rng, n, 4 * n);
    CHECK(std::abs(ground_energy(r) - dense_ground(r)) < 1e-10);
  }
  const QubitOperator h3 = load_fcidump_operator("h3_sto3g.fcidump", MappingKind::JW);
  const LanczosResult res = lanczos_ground_state(h3);
  CHECK(res.residual <= 1e-9);
  CHECK(std::abs(res.energy - dense_ground(h3)) < 1e-10);
}

TEST_CASE("oracle cap") {
  CHECK_THROWS_AS(StateVector{kOracleMaxQubits + 1}, DimensionError);
  CHECK_NOTHROW(StateVector{kOracleMaxQubits});
}

TEST_CASE("sidecar FCI energies match the oracle") {
  for (const std::string stem : {"h3_sto3g", "h4_trapezoid_sto3g", "hf_631gs_frag4"}) {
    CAPTURE(stem);
    const auto meta = nlohmann::json::parse(read_file(fixture(stem + ".reference.json")));
    QubitOperator h;
    if (stem == "hf_631gs_frag4") {
      h = load_qubit_hamiltonian(read_file(fixture(stem + ".qubitop"))).hamiltonian;
    } else {
      h = load_fcidump_operator(stem + ".fcidump", MappingKind::JW);
    }
    CHECK(std::abs(ground_energy(h) - meta.at("fci_energy").get<double>()) < 1e-7);
  }
}

TEST_CASE("single-qubit rotation scan is cos(phi)") {
  AnsatzCircuit a{CliffordCircuit(1), {{PauliWord::from_string("Y"), 0.0}}};
  std::vector<double> grid;
  for (int k = 0; k < 50; ++k) grid.push_back(-std::numbers::pi + k * 2 * std::numbers::pi / 50);
  const auto e = energy_scan(a, 0, QubitOperator::from_word(PauliWord::from_string("Z")), grid);
  for (std::size_t k = 0; k < grid.size(); ++k) CHECK(std::abs(e[k] - std::cos(grid[k])) < 1e-14);
}

TEST_CASE("unitary circuits preserve the norm") {
  std::mt19937_64 rng(4);
  StateVector s(6);
  s.apply(random_clifford(rng, 6, 300));
  for (int k = 0; k < 50; ++k) s.apply_rotation({random_word(rng, 6), 0.37 * k});
  CHECK(std::abs(s.norm() - 1.0) < 1e-12);
}

TEST_CASE("statevector gates match dense unitaries") {
  Mat h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  Mat s(2, 2);
  s << 1, 0, 0, Cx(0, 1);
  CHECK((unitary(CliffordCircuit(1).h(0)) - h).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((unitary(CliffordCircuit(1).s(0)) - s).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((unitary(CliffordCircuit(1).sdg(0)) - s.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
  // CNOT control 0 target 1: |01> (index 1) -> |11> (index 3)
  const Mat cx = unitary(CliffordCircuit(2).cnot(0, 1));
  CHECK(cx(3, 1) == Cx(1.0));
  CHECK(cx(0, 0) == Cx(1.0));
  // controlled Y on qubit 1, control 0
  const Mat cy = unitary(CliffordCircuit(2).controlled_pauli(0, PauliWord::from_string("IY")));
  Mat expect = Mat::Zero(4, 4);
  expect(0, 0) = expect(2, 2) = 1;
  expect(3, 1) = Cx(0, 1);
  expect(1, 3) = Cx(0, -1);
  CHECK((cy - expect).cwiseAbs().maxCoeff() < 1e-15);
}
