// Serial reference kernels against their OpenMP versions.
//
//   ./build/bench/bench_kernels --benchmark_filter=Candidates
//
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <numbers>

#include "ciqcc/cli.hpp"
#include "ciqcc/engine.hpp"
#include "ciqcc/fcidump.hpp"
#include "ciqcc/interior.hpp"
#include "ciqcc/statevector.hpp"

using namespace ciqcc;

namespace {

std::string fixture(const std::string& name) { return std::string(CIQCC_FIXTURE_DIR) + "/" + name; }

// H4 after 30 iterations: a few thousand terms, so the DIS is realistic
struct H4State {
  Problem p;
  QubitOperator hm;
  std::vector<DISEntry> dis;
  RunConfig cfg;
  H4State() {
    p = load_problem(fixture("h4_trapezoid_sto3g.fcidump"), InputKind::Fcidump, MappingKind::JW);
    cfg.max_iterations = 30;
    cfg.epsilon_conv = 1e-14;
    hm = run(p.hamiltonian, p.reference, cfg).final_hamiltonian;
    dis = build_dis(hm, p.reference, cfg);
  }
};

const H4State& h4() {
  static const H4State s;
  return s;
}

void Candidates_Serial(benchmark::State& st) {
  const auto& s = h4();
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_candidates_serial(s.dis, s.hm, s.p.reference, s.cfg));
  st.counters["entries"] = static_cast<double>(s.dis.size());
}
void Candidates_Parallel(benchmark::State& st) {
  const auto& s = h4();
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_candidates_parallel(s.dis, s.hm, s.p.reference, s.cfg));
}

const Problem& hf() {
  static const Problem p = load_problem(fixture("hf_631gs_frag4.qubitop"), InputKind::Qubitop, MappingKind::JW);
  return p;
}

StateVector spread_state(int n) {
  StateVector v(n);
  for (std::size_t k = 0; k < v.dimension(); ++k) v[k] = {1.0 / (1.0 + k % 7), 0.01 * (k % 3)};
  v.normalize();
  return v;
}

void ApplyOperator_Serial(benchmark::State& st) {
  const auto& p = hf();
  const StateVector v = spread_state(p.hamiltonian.n_qubits());
  for (auto _ : st) benchmark::DoNotOptimize(apply_operator_serial(p.hamiltonian, v));
}
void ApplyOperator_Parallel(benchmark::State& st) {
  const auto& p = hf();
  const StateVector v = spread_state(p.hamiltonian.n_qubits());
  for (auto _ : st) benchmark::DoNotOptimize(apply_operator_parallel(p.hamiltonian, v));
}

struct H3Gens {
  Problem p;
  std::vector<PauliRotation> gens;
  H3Gens() {
    p = load_problem(fixture("h3_sto3g.fcidump"), InputKind::Fcidump, MappingKind::JW);
    RunConfig cfg;
    cfg.max_iterations = 4;
    for (const auto& r : run(p.hamiltonian, p.reference, cfg).records) gens.push_back({r.chosen, r.phi});
  }
};

void interior(benchmark::State& st, bool parallel) {
  static const H3Gens s;
  InteriorOptions opt;
  opt.parallel = parallel;
  for (auto _ : st) benchmark::DoNotOptimize(interior_energy(1, s.gens, s.p.hamiltonian, s.p.reference, std::numbers::pi / 2, opt));
}
void Interior_Serial(benchmark::State& st) { interior(st, false); }
void Interior_Parallel(benchmark::State& st) { interior(st, true); }

}  // namespace

BENCHMARK(Candidates_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(Candidates_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(ApplyOperator_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(ApplyOperator_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(Interior_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(Interior_Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
