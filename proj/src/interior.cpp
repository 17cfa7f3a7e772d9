#include "ciqcc/interior.hpp"

#include <cmath>
#include <numbers>

#include "ciqcc/engine.hpp"
#include "ciqcc/errors.hpp"
#include "ciqcc/stabilizer.hpp"

namespace ciqcc {

namespace {

void check_index(int m, const std::vector<PauliRotation>& generators) {
  if (m < 1 || m > static_cast<int>(generators.size())) {
    throw ArgumentError("generator index " + std::to_string(m) + " outside 1.." +
                        std::to_string(generators.size()));
  }
}

bool is_clifford_angle(double phi) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  return phi == 0.0 || std::abs(std::abs(phi) - half_pi) <= 1e-12;
}

/// Pairwise sum keeps the result independent of thread count.
std::complex<double> pairwise_sum(const std::complex<double>* v, std::size_t n) {
  if (n <= 8) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

CliffordCircuit open_controlled(int n_total, int ancilla, const PauliWord& p) {
  CliffordCircuit c(n_total);
  if (p.is_identity()) return c;
  c.x(ancilla).controlled_pauli(ancilla, p).x(ancilla);
  return c;
}

PauliWord widen(const PauliWord& p, int n) { return {n, p.x_mask(), p.z_mask(), p.phase_exponent()}; }

/// Everything up to (not including) the final P_j layer.
StabilizerState prefix_state(const CliffordCircuit& prep, const PauliWord& pq, const PauliWord& pq_prime,
                             const PauliRotation& g) {
  const int n = prep.n_qubits();
  const int a = n;
  CliffordCircuit c = prep.widened(n + 1);
  c.h(a);
  if (!pq.is_identity()) c.controlled_pauli(a, widen(pq, n + 1));
  c.append(open_controlled(n + 1, a, widen(pq_prime, n + 1)));
  if (g.angle != 0.0) c.append(compile_exponential(g.word, g.angle).widened(n + 1));
  StabilizerState s(n + 1);
  s.apply(c);
  return s;
}

std::complex<double> ancilla_readout(const StabilizerState& s, int a) {
  const int n = s.n_qubits();
  const int ex = s.expectation(PauliWord::single(n, a, Pauli::X));
  const int ey = s.expectation(PauliWord::single(n, a, Pauli::Y));
  return {static_cast<double>(ex), static_cast<double>(ey)};
}

}  // namespace

QubitOperator build_tail(const std::vector<PauliRotation>& generators, int m) {
  if (generators.empty()) throw ArgumentError("no generators");
  check_index(m, generators);
  const int n = generators.front().word.n_qubits();
  QubitOperator q = QubitOperator::identity(n);
  for (std::size_t k = static_cast<std::size_t>(m); k < generators.size(); ++k) {
    const auto& g = generators[k];
    OperatorBuilder b(n);
    b.add(PauliWord(n), std::cos(0.5 * g.angle));
    b.add(g.word, std::complex<double>(0.0, -std::sin(0.5 * g.angle)));
    q = q * b.build();
  }
  return q;
}

QubitOperator head_hamiltonian(const QubitOperator& h0, const std::vector<PauliRotation>& generators,
                               int m, double prune_eps) {
  check_index(m, generators);
  QubitOperator h = h0;
  for (int k = 0; k < m - 1; ++k) h = fold(h, generators[k].word, generators[k].angle, prune_eps);
  return h;
}

std::complex<double> hadamard_test(const CliffordCircuit& prep, const HadamardTestJob& job,
                                   const PauliRotation& g) {
  if (!is_clifford_angle(g.angle)) {
    throw ArgumentError("hadamard_test needs a Clifford angle (0 or ±π/2), got " + format_double(g.angle));
  }
  const int n = prep.n_qubits();
  if (n + 1 > kMaxQubits) throw DimensionError("no room for the ancilla qubit");
  StabilizerState s = prefix_state(prep, job.q.word, job.q_prime.word, g);
  s.apply(open_controlled(n + 1, n, widen(job.h.word, n + 1)));
  return ancilla_readout(s, n);
}

double interior_energy(int m, const std::vector<PauliRotation>& generators, const QubitOperator& h0,
                       const CliffordCircuit& prep, double phi, const InteriorOptions& opt) {
  check_index(m, generators);
  if (!is_clifford_angle(phi)) throw ArgumentError("interior_energy needs φ in {0, ±π/2}");
  const QubitOperator tail = build_tail(generators, m);
  const QubitOperator head = head_hamiltonian(h0, generators, m, opt.prune_eps);
  const std::uint64_t nq = tail.size();
  const std::uint64_t jobs = nq * nq * head.size();
  if (jobs > opt.job_budget) {
    throw ArgumentError("interior evaluation needs " + std::to_string(jobs) + " Hadamard tests (budget " +
                        std::to_string(opt.job_budget) + ")");
  }
  const PauliRotation g{generators[m - 1].word, phi};
  const int n = prep.n_qubits();
  const auto t = tail.terms();
  const auto hterms = head.terms();

  // One prefix tableau per (q, q'); each P_j then only adds its layer.
  std::vector<std::complex<double>> partial(nq * nq);
  const auto n_pairs = static_cast<std::int64_t>(nq * nq);
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (std::int64_t pair = 0; pair < n_pairs; ++pair) {
    const auto& q = t[static_cast<std::size_t>(pair) / nq];
    const auto& qp = t[static_cast<std::size_t>(pair) % nq];
    const StabilizerState base = prefix_state(prep, q.word, qp.word, g);
    std::vector<std::complex<double>> terms(hterms.size());
    for (std::size_t j = 0; j < hterms.size(); ++j) {
      StabilizerState s = base;
      s.apply(open_controlled(n + 1, n, widen(hterms[j].word, n + 1)));
      terms[j] = hterms[j].coeff * ancilla_readout(s, n);
    }
    partial[pair] = q.coeff * std::conj(qp.coeff) * pairwise_sum(terms.data(), terms.size());
  }
  const std::complex<double> e = pairwise_sum(partial.data(), partial.size());
  if (std::abs(e.imag()) > 1e-9) throw NumericError("interior energy has imaginary part " + format_double(e.imag()));
  return e.real();
}

double ansatz_energy(const std::vector<PauliRotation>& generators, const QubitOperator& h0,
                     const CliffordCircuit& prep, double prune_eps) {
  QubitOperator h = h0;
  for (const auto& g : generators) h = fold(h, g.word, g.angle, prune_eps);
  return EnergyEvaluator(h, prep).reference_energy();
}

InteriorStep reoptimize_interior(int m, std::vector<PauliRotation>& generators, const QubitOperator& h0,
                                 const CliffordCircuit& prep, const InteriorOptions& opt) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  check_index(m, generators);
  const double e0 = interior_energy(m, generators, h0, prep, 0.0, opt);
  const double ep = interior_energy(m, generators, h0, prep, half_pi, opt);
  const double em = interior_energy(m, generators, h0, prep, -half_pi, opt);
  const RotosolveResult r = rotosolve_solve(e0, ep, em);
  InteriorStep step{m, generators[m - 1].angle, r.phi, r.energy};
  generators[m - 1].angle = r.phi;
  return step;
}

std::vector<InteriorStep> interior_sweep(std::vector<PauliRotation>& generators, const QubitOperator& h0,
                                         const CliffordCircuit& prep, int sweeps,
                                         const InteriorOptions& opt) {
  std::vector<InteriorStep> steps;
  for (int s = 0; s < sweeps; ++s) {
    for (int m = 1; m <= static_cast<int>(generators.size()); ++m) {
      steps.push_back(reoptimize_interior(m, generators, h0, prep, opt));
    }
  }
  return steps;
}

}  // namespace ciqcc
