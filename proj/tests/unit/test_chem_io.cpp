#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ciqcc/errors.hpp"
#include "ciqcc/fcidump.hpp"
#include "ciqcc/fermion_operator.hpp"
#include "ciqcc/mappings.hpp"
#include "ciqcc/qubit_hamiltonian_file.hpp"
#include "ciqcc/statevector.hpp"
#include "dense.hpp"

using namespace ciqcc;
using namespace ciqcc::test;

namespace {

// H2, STO-3G, 0.7414 Å, RHF orbitals (rounded literature values).
const char* kH2 = R"( &FCI NORB=2,NELEC=2,MS2=0,
  ORBSYM=1,1,
  ISYM=1,
 &END
  0.6757101548  1  1  1  1
  0.1809270710  2  1  2  1
  0.6645817588  2  2  1  1
  0.6985609720  2  2  2  2
 -1.2563390730  1  1  0  0
 -0.4718960073  2  2  0  0
  0.7137539936  0  0  0  0
)";

double sidecar(const std::string& stem, const char* key) {
  return nlohmann::json::parse(read_file(fixture(stem + ".reference.json"))).at(key).get<double>();
}

}  // namespace

TEST_CASE("FCIDUMP header and integrals") {
  const MolecularIntegrals m = parse_fcidump(kH2);
  CHECK(m.n_orbitals() == 2);
  CHECK(m.n_electrons() == 2);
  CHECK(m.ms2() == 0);
  CHECK(m.core_energy() == doctest::Approx(0.7137539936));
  CHECK(m.one_body(0, 0) == doctest::Approx(-1.2563390730));
  CHECK(m.one_body(0, 1) == 0.0);
  // all eight index images of (21|21)
  CHECK(m.two_body(1, 0, 1, 0) == doctest::Approx(0.1809270710));
  CHECK(m.two_body(0, 1, 0, 1) == doctest::Approx(0.1809270710));
  CHECK(m.two_body(0, 1, 1, 0) == doctest::Approx(0.1809270710));
  CHECK(m.two_body(1, 1, 0, 0) == doctest::Approx(0.6645817588));
  CHECK(m.two_body(0, 0, 1, 1) == doctest::Approx(0.6645817588));
}

TEST_CASE("FCIDUMP errors carry line numbers") {
  CHECK_THROWS_AS(parse_fcidump("NORB=2\n"), ParseError);
  CHECK_THROWS_AS(parse_fcidump("&FCI NELEC=2 /\n"), ParseError);
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=2,NELEC=2 /\n 1.0 3 1 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=2,NELEC=2 /\n abc 1 1 0 0\n"), ParseError);
  try {
    parse_fcidump("&FCI NORB=2,NELEC=2 /\n 0.5 1 1 0 0\n 0.5 1 1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=2,NELEC=5 /\n"), ParseError);
}

TEST_CASE("Fortran D exponents") {
  const MolecularIntegrals m = parse_fcidump("&FCI NORB=1,NELEC=1,MS2=1 /\n -0.5D+00 1 1 0 0\n 1.0d-1 0 0 0 0\n");
  CHECK(m.one_body(0, 0) == doctest::Approx(-0.5));
  CHECK(m.core_energy() == doctest::Approx(0.1));
}

TEST_CASE("ladder-term shorthand") {
  const FermionTerm t = parse_fermion_term("3^ 1");
  REQUIRE(t.size() == 2);
  CHECK(t[0].mode == 3);
  CHECK(t[0].creation);
  CHECK(t[1].mode == 1);
  CHECK_FALSE(t[1].creation);
  CHECK_THROWS_AS(parse_fermion_term("3^ x"), ParseError);
}

TEST_CASE("second-quantized Hamiltonian is Hermitian") {
  const FermionOperator f = build_second_quantized(parse_fcidump(read_file(fixture("h3_sto3g.fcidump"))));
  CHECK(f.approx_equal(f.adjoint(), 1e-12));
  CHECK(f.mode_count() == 6);
}

TEST_CASE("H2 ground energy equals the 2x2 CI") {
  const MolecularIntegrals m = parse_fcidump(kH2);
  const QubitOperator h = map_jw(build_second_quantized(m), 4);
  // closed-shell determinants |1α1β⟩ and |2α2β⟩ coupled by (12|12)
  const double e_a = 2 * m.one_body(0, 0) + m.two_body(0, 0, 0, 0) + m.core_energy();
  const double e_b = 2 * m.one_body(1, 1) + m.two_body(1, 1, 1, 1) + m.core_energy();
  const double k = m.two_body(0, 1, 0, 1);
  const double fci = 0.5 * (e_a + e_b) - std::sqrt(0.25 * (e_a - e_b) * (e_a - e_b) + k * k);
  CHECK(dense_ground(h) == doctest::Approx(fci).epsilon(1e-12));
  CHECK(ground_energy(h) == doctest::Approx(fci).epsilon(1e-12));
  // the reference determinant gives the mean-field energy
  const CliffordCircuit ref = reference_circuit(aufbau_occupation(2, 2, 0), MappingKind::JW);
  CHECK(expectation(h, simulate(ref)) == doctest::Approx(e_a).epsilon(1e-12));
}

TEST_CASE("fixtures reproduce their sidecar energies") {
  for (const std::string stem : {"h3_sto3g", "h4_trapezoid_sto3g"}) {
    CAPTURE(stem);
    CliffordCircuit ref;
    const QubitOperator h = load_fcidump_operator(stem + ".fcidump", MappingKind::JW, &ref);
    CHECK(static_cast<double>(h.size()) == sidecar(stem, "n_qubit_terms_jw"));
    CHECK(std::abs(ground_energy(h) - sidecar(stem, "fci_energy")) < 1e-8);
    CHECK(std::abs(expectation(h, simulate(ref)) - sidecar(stem, "mean_field_energy")) < 1e-10);
  }
}

TEST_CASE("qubit operator file") {
  const QubitHamiltonianFile f = load_qubit_hamiltonian(read_file(fixture("hf_631gs_frag4.qubitop")));
  CHECK(f.hamiltonian.n_qubits() == 12);
  CHECK(static_cast<double>(f.hamiltonian.size()) == sidecar("hf_631gs_frag4", "n_qubit_terms_jw"));
  REQUIRE(f.reference);
  CHECK(bits_to_string(*f.reference) == "110000000000");
  CHECK_FALSE(f.fci_energy);

  QubitHamiltonianFile g{f.hamiltonian, f.reference, -100.5};
  const QubitHamiltonianFile back = load_qubit_hamiltonian(save_qubit_hamiltonian(g));
  CHECK(back.hamiltonian == g.hamiltonian);
  CHECK(*back.fci_energy == -100.5);
  CHECK_THROWS_AS(load_qubit_hamiltonian("# n_qubits 2\n# reference 101\n(1,0) Z0\n"), ParseError);
}
