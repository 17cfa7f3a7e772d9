#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ciqcc/engine.hpp"
#include "ciqcc/errors.hpp"
#include "ciqcc/interior.hpp"
#include "ciqcc/statevector.hpp"
#include "dense.hpp"
#include "random_circuit.hpp"

using namespace ciqcc;
using namespace ciqcc::test;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

/// Statevector energy of G_1 … G_M |prep⟩ with generator m set to phi.
double full_energy(std::vector<PauliRotation> gens, int m, double phi, const QubitOperator& h,
                   const CliffordCircuit& prep) {
  gens[m - 1].angle = phi;
  AnsatzCircuit a{prep, {gens.rbegin(), gens.rend()}};
  return expectation(h, simulate(a));
}

Mat dense_rotation(const PauliRotation& g) {
  const Mat p = dense(g.word);
  return std::cos(g.angle / 2) * Mat::Identity(p.rows(), p.cols()) - Cx(0, std::sin(g.angle / 2)) * p;
}

std::vector<PauliRotation> random_generators(std::mt19937_64& rng, int n, int count) {
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  std::vector<PauliRotation> g;
  for (int i = 0; i < count; ++i) g.push_back({random_word(rng, n, false), ang(rng)});
  return g;
}

struct H3Run {
  CliffordCircuit ref;
  QubitOperator h;
  std::vector<PauliRotation> gens;
  double energy = 0.0;
  H3Run() {
    h = load_fcidump_operator("h3_sto3g.fcidump", MappingKind::JW, &ref);
    RunConfig cfg;
    cfg.max_iterations = 3;
    const RunResult r = run(h, ref, cfg);
    for (const auto& rec : r.records) gens.push_back({rec.chosen, rec.phi});
    energy = r.final_energy();
  }
};

}  // namespace

TEST_CASE("tail operator") {
  const std::vector<PauliRotation> one{{PauliWord::from_string("XY"), 0.4}};
  const QubitOperator t0 = build_tail(one, 1);
  CHECK(t0 == QubitOperator::identity(2));
  const std::vector<PauliRotation> two{{PauliWord::from_string("ZZ"), 0.1}, {PauliWord::from_string("XY"), 0.4}};
  const QubitOperator t = build_tail(two, 1);
  REQUIRE(t.size() == 2);
  CHECK(std::abs(t.coefficient(PauliWord(2)) - Cx(std::cos(0.2))) < 1e-15);
  CHECK(std::abs(t.coefficient(PauliWord::from_string("XY")) - Cx(0, -std::sin(0.2))) < 1e-15);

  // commuting generators: order does not matter
  const std::vector<PauliRotation> ab{{PauliWord::from_string("II"), 0}, {PauliWord::from_string("XX"), 0.3}, {PauliWord::from_string("ZZ"), -1.1}};
  const std::vector<PauliRotation> ba{{PauliWord::from_string("II"), 0}, {PauliWord::from_string("ZZ"), -1.1}, {PauliWord::from_string("XX"), 0.3}};
  CHECK((dense(build_tail(ab, 1)) - dense(build_tail(ba, 1))).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(build_tail(two, 3), ArgumentError);
}

TEST_CASE("tail operator is unitary and matches the product") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 5;
    const auto gens = random_generators(rng, n, 5);
    const Mat q = dense(build_tail(gens, 1));
    CHECK((q.adjoint() * q - Mat::Identity(q.rows(), q.cols())).cwiseAbs().maxCoeff() < 1e-10);
    Mat prod = Mat::Identity(q.rows(), q.cols());
    for (int k = 1; k < 5; ++k) prod = prod * dense_rotation(gens[k]);
    CHECK((q - prod).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(build_tail(gens, 1).size() <= 16u);
  }
}

TEST_CASE("Hadamard test trivial jobs") {
  const int n = 2;
  CliffordCircuit prep(n);
  prep.x(1);
  const QubitOperator::Term id{PauliWord(n), 1.0};
  const PauliRotation none{PauliWord::from_string("XY"), 0.0};
  CHECK(hadamard_test(prep, {id, id, id}, none) == Cx(1.0));
  CHECK(hadamard_test(prep, {id, id, {PauliWord::from_string("ZI"), 1.0}}, none) == Cx(1.0));
  CHECK(hadamard_test(prep, {id, id, {PauliWord::from_string("IZ"), 1.0}}, none) == Cx(-1.0));
  CHECK_THROWS_AS(hadamard_test(prep, {id, id, id}, {PauliWord::from_string("XY"), 0.3}), ArgumentError);
}

TEST_CASE("Hadamard test equals the statevector matrix element") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const CliffordCircuit prep = random_clifford(rng, n, 25);
    const HadamardTestJob job{{random_word(rng, n), 1.0}, {random_word(rng, n), 1.0}, {random_word(rng, n), 1.0}};
    const double choices[3] = {0.0, kHalfPi, -kHalfPi};
    const PauliRotation g{random_word(rng, n, false), choices[trial % 3]};
    const Cx got = hadamard_test(prep, job, g);

    const Vec c = to_eigen(simulate(prep));
    const Mat gm = dense_rotation(g);
    const Cx expect = c.dot(dense(job.q_prime.word) * gm.adjoint() * dense(job.h.word) * gm * dense(job.q.word) * c);
    CHECK(std::abs(got - expect) < 1e-12);
  }
}

TEST_CASE("interior energy on a random instance") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 3 + trial % 2;
    const QubitOperator h = random_hermitian(rng, n, 12);
    const CliffordCircuit prep = random_clifford(rng, n, 20);
    const auto gens = random_generators(rng, n, 4);
    for (int m = 1; m <= 4; ++m) {
      for (double phi : {0.0, kHalfPi, -kHalfPi}) {
        CHECK(std::abs(interior_energy(m, gens, h, prep, phi) - full_energy(gens, m, phi, h, prep)) < 1e-9);
      }
    }
  }
}

TEST_CASE("interior energy with an empty tail is the ordinary evaluation") {
  const H3Run r;
  const int m = static_cast<int>(r.gens.size());
  const QubitOperator head = head_hamiltonian(r.h, r.gens, m);
  const CandidateResult c = EnergyEvaluator(head, r.ref).evaluate(r.gens.back().word);
  CHECK(std::abs(interior_energy(m, r.gens, r.h, r.ref, kHalfPi) - c.e_plus) < 1e-12);
  CHECK(std::abs(interior_energy(m, r.gens, r.h, r.ref, -kHalfPi) - c.e_minus) < 1e-12);
  CHECK(std::abs(interior_energy(m, r.gens, r.h, r.ref, 0.0) - EnergyEvaluator(head, r.ref).reference_energy()) < 1e-12);
}

TEST_CASE("one generator reproduces evaluate_candidate") {
  CliffordCircuit ref;
  const QubitOperator h = load_fcidump_operator("h3_sto3g.fcidump", MappingKind::JW, &ref);
  const PauliWord p = PauliWord::from_string("IXXXYI");
  const CandidateResult c = EnergyEvaluator(h, ref).evaluate(p);
  const std::vector<PauliRotation> gens{{p, c.phi}};
  CHECK(std::abs(interior_energy(1, gens, h, ref, kHalfPi) - c.e_plus) < 1e-12);
  CHECK(std::abs(interior_energy(1, gens, h, ref, -kHalfPi) - c.e_minus) < 1e-12);
}

TEST_CASE("interior re-optimization never raises the energy") {
  H3Run r;
  const double e_start = ansatz_energy(r.gens, r.h, r.ref);
  CHECK(std::abs(e_start - r.energy) < 1e-10);
  const InteriorStep s2 = reoptimize_interior(2, r.gens, r.h, r.ref);
  CHECK(s2.energy <= r.energy + 1e-12);
  CHECK(std::abs(ansatz_energy(r.gens, r.h, r.ref) - s2.energy) < 1e-10);

  double prev = s2.energy;
  const auto steps = interior_sweep(r.gens, r.h, r.ref, 2);
  REQUIRE(steps.size() == 6);
  for (const auto& s : steps) {
    CHECK(s.energy <= prev + 1e-12);
    prev = s.energy;
  }
  // an optimal angle stays put
  std::vector<PauliRotation> again = r.gens;
  const InteriorStep fixed = reoptimize_interior(3, again, r.h, r.ref);
  CHECK(std::abs(normalize_angle(fixed.phi_new - fixed.phi_old)) < 1e-6);
  CHECK(std::abs(fixed.energy - prev) < 1e-10);
}

TEST_CASE("serial sum agrees and the budget is enforced") {
  const H3Run r;
  InteriorOptions serial;
  serial.parallel = false;
  CHECK(interior_energy(1, r.gens, r.h, r.ref, kHalfPi, serial) == interior_energy(1, r.gens, r.h, r.ref, kHalfPi));
  InteriorOptions tight;
  tight.job_budget = 10;
  CHECK_THROWS_AS(interior_energy(1, r.gens, r.h, r.ref, 0.0, tight), ArgumentError);
  CHECK_THROWS_AS(interior_energy(1, r.gens, r.h, r.ref, 0.2), ArgumentError);
}
