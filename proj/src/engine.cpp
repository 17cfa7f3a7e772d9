#include "ciqcc/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ciqcc/errors.hpp"

namespace ciqcc {

std::string to_string(SelectionMode mode) {
  return mode == SelectionMode::Rotosolve ? "rotosolve" : "gradient";
}

SelectionMode parse_selection(std::string_view name) {
  if (name == "rotosolve") return SelectionMode::Rotosolve;
  if (name == "gradient") return SelectionMode::Gradient;
  throw ArgumentError("unknown selection mode '" + std::string(name) + "' (rotosolve|gradient)");
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::Converged: return "converged";
    case StopReason::EmptyDIS: return "empty-dis";
    case StopReason::MaxIterations: return "max-iterations";
  }
  return "?";
}

void RunConfig::validate(int n_qubits) const {
  if (!(epsilon_conv > 0.0)) throw ArgumentError("epsilon_conv must be positive");
  if (max_iterations < 0) throw ArgumentError("max_iterations must be non-negative");
  if (prune_eps < 0.0) throw ArgumentError("prune_eps must be non-negative");
  if (gradient_threshold < 0.0) throw ArgumentError("gradient_threshold must be non-negative");
  if (max_candidate_rank && (*max_candidate_rank < 1 || *max_candidate_rank > n_qubits)) {
    throw ArgumentError("max_candidate_rank must lie in [1, " + std::to_string(n_qubits) + "]");
  }
}

namespace {

__extension__ using u128 = unsigned __int128;

u128 binomial(int n, int k) {
  u128 b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return b;
}

constexpr double kTieTol = 1e-12;

}  // namespace

std::uint64_t pool_size(int n_qubits, MappingKind kind) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw ArgumentError("pool_size needs 1 <= N <= 64");
  const int n0 = min_candidate_rank(kind);
  const u128 limit = ~std::uint64_t{0};
  u128 total = 0;
  for (int ny = 1; ny <= n_qubits; ny += 2) {
    const u128 cy = binomial(n_qubits, ny);
    for (int nx = n0; nx <= n_qubits - ny; ++nx) {
      const u128 cx = binomial(n_qubits - ny, nx);
      if (cx != 0 && cy > limit / cx) throw std::overflow_error("pool_size overflows 64 bits");
      total += cy * cx;
      if (total > limit) throw std::overflow_error("pool_size overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<PauliWord> enumerate_candidates(const FlipSet& flip, int min_x) {
  const int k = static_cast<int>(flip.size());
  if (k > 30) throw ArgumentError("flip set of size " + std::to_string(k) + " is too large to enumerate; set max_candidate_rank");
  const auto& idx = flip.indices();
  std::vector<PauliWord> out;
  for (std::uint64_t ys = 1; ys < (std::uint64_t{1} << k); ++ys) {
    const int ny = std::popcount(ys);
    if (ny % 2 == 0 || k - ny < min_x) continue;
    std::uint64_t z = 0;
    for (int b = 0; b < k; ++b) {
      if (ys >> b & 1) z |= std::uint64_t{1} << idx[b];
    }
    out.emplace_back(flip.n_qubits(), flip.mask(), z);
  }
  std::sort(out.begin(), out.end(), LexicographicLess{});
  return out;
}

PauliWord representative_word(const FlipSet& flip) {
  if (flip.empty()) throw ArgumentError("empty flip set has no representative");
  const std::uint64_t lowest = flip.mask() & (~flip.mask() + 1);
  return {flip.n_qubits(), flip.mask(), lowest};
}

double normalize_angle(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phi + std::numbers::pi, two_pi);
  if (r < 0) r += two_pi;
  r -= std::numbers::pi;
  if (r >= std::numbers::pi) r -= two_pi;
  return r;
}

RotosolveResult rotosolve_solve(double e0, double e_plus, double e_minus) {
  const double y = 2.0 * e0 - e_plus - e_minus;
  const double x = e_plus - e_minus;
  const double c = 0.5 * (e_plus + e_minus);
  const double a = 0.5 * std::hypot(y, x);
  if (a == 0.0) return {0.0, e0};
  const double b = std::atan2(y, x);
  const double phi = normalize_angle(-0.5 * std::numbers::pi - b);
  // A·sin(φ+B)+C at the minimum is exactly C − A.
  return {phi, c - a};
}

QubitOperator compress_support(const QubitOperator& h, const FlipSet& support,
                               const std::vector<bool>& ref_bits) {
  const int n = h.n_qubits();
  if (static_cast<int>(ref_bits.size()) != n) throw DimensionError("reference bit count mismatch");
  const std::uint64_t keep = support.mask();
  std::uint64_t ref_mask = 0;
  for (int q = 0; q < n; ++q) {
    if (ref_bits[q]) ref_mask |= std::uint64_t{1} << q;
  }
  const auto& idx = support.indices();
  auto squeeze = [&](std::uint64_t m) {
    std::uint64_t r = 0;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (m >> idx[b] & 1) r |= std::uint64_t{1} << b;
    }
    return r;
  };
  const int k = static_cast<int>(support.size());
  OperatorBuilder b(k);
  for (const auto& t : h) {
    const std::uint64_t x = t.word.x_mask(), z = t.word.z_mask();
    if (x & ~keep) continue;
    const bool minus = std::popcount(z & ~keep & ref_mask) % 2 != 0;
    b.add(PauliWord(k, squeeze(x), squeeze(z)), minus ? -t.coeff : t.coeff);
  }
  return b.build();
}

EnergyEvaluator::EnergyEvaluator(const QubitOperator& h, const CliffordCircuit& ref)
    : index_(h), ref_state_(h.n_qubits()) {
  if (ref.n_qubits() != h.n_qubits()) throw DimensionError("reference circuit width mismatch");
  ref_state_.apply(ref);
  e0_ = index_.expectation(ref_state_);
}

CandidateResult EnergyEvaluator::evaluate(const PauliWord& p) const {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  StabilizerState plus = ref_state_;
  plus.apply(compile_exponential(p, half_pi));
  StabilizerState minus = ref_state_;
  minus.apply(compile_exponential(p, -half_pi));
  CandidateResult r;
  r.word = p;
  r.e_plus = index_.expectation(plus);
  r.e_minus = index_.expectation(minus);
  r.gradient = 0.5 * (r.e_plus - r.e_minus);
  const RotosolveResult s = rotosolve_solve(e0_, r.e_plus, r.e_minus);
  r.phi = s.phi;
  r.energy = s.energy;
  return r;
}

CandidateResult evaluate_candidate(const PauliWord& p, const QubitOperator& h,
                                   const CliffordCircuit& ref, double e0) {
  CandidateResult r = EnergyEvaluator(h, ref).evaluate(p);
  const RotosolveResult s = rotosolve_solve(e0, r.e_plus, r.e_minus);
  r.phi = s.phi;
  r.energy = s.energy;
  return r;
}

std::vector<DISEntry> build_dis(const QubitOperator& h, const CliffordCircuit& ref,
                                const RunConfig& cfg) {
  if (h.empty()) throw ArgumentError("build_dis needs a non-empty Hamiltonian");
  std::vector<std::uint64_t> masks;
  masks.reserve(h.size());
  for (const auto& t : h) {
    if (t.word.x_mask() != 0) masks.push_back(t.word.x_mask());
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  const int n = h.n_qubits();
  const int min_x = min_candidate_rank(cfg.mapping);
  std::vector<DISEntry> all;
  for (std::uint64_t m : masks) {
    FlipSet flip(n, m);
    if (cfg.max_candidate_rank && static_cast<int>(flip.size()) > *cfg.max_candidate_rank) continue;
    DISEntry e;
    e.representative = representative_word(flip);
    e.candidates = enumerate_candidates(flip, min_x);
    if (e.candidates.empty()) continue;
    e.flip_set = std::move(flip);
    all.push_back(std::move(e));
  }

  const EnergyEvaluator eval(h, ref);
  const auto count = static_cast<std::ptrdiff_t>(all.size());
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) all[i].gradient = eval.evaluate(all[i].representative).gradient;

  std::vector<DISEntry> kept;
  for (auto& e : all) {
    if (std::abs(e.gradient) > cfg.gradient_threshold) kept.push_back(std::move(e));
  }
  return kept;
}

namespace {

struct Job {
  std::size_t entry;
  std::size_t candidate;
};

/// Compressed register for one DIS entry.
struct CompressedEntry {
  std::optional<EnergyEvaluator> eval;
  std::vector<int> indices;
};

PauliWord squeeze_word(const PauliWord& p, const std::vector<int>& idx) {
  std::uint64_t x = 0, z = 0;
  for (std::size_t b = 0; b < idx.size(); ++b) {
    if (p.x_mask() >> idx[b] & 1) x |= std::uint64_t{1} << b;
    if (p.z_mask() >> idx[b] & 1) z |= std::uint64_t{1} << b;
  }
  return {static_cast<int>(idx.size()), x, z, p.phase_exponent()};
}

std::vector<CandidateResult> evaluate_all(const std::vector<DISEntry>& dis, const QubitOperator& h,
                                          const CliffordCircuit& ref, const RunConfig& cfg,
                                          bool parallel) {
  std::vector<Job> jobs;
  for (std::size_t e = 0; e < dis.size(); ++e) {
    for (std::size_t c = 0; c < dis[e].candidates.size(); ++c) jobs.push_back({e, c});
  }
  std::vector<CandidateResult> out(jobs.size());
  const auto n_jobs = static_cast<std::ptrdiff_t>(jobs.size());

  std::optional<std::vector<bool>> bits;
  if (cfg.compression) bits = basis_state_of(ref);
  if (!bits) {
    const EnergyEvaluator eval(h, ref);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::ptrdiff_t j = 0; j < n_jobs; ++j) {
      out[j] = eval.evaluate(dis[jobs[j].entry].candidates[jobs[j].candidate]);
    }
    return out;
  }

  std::vector<CompressedEntry> reduced(dis.size());
  const auto n_entries = static_cast<std::ptrdiff_t>(dis.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t e = 0; e < n_entries; ++e) {
    const FlipSet& flip = dis[e].flip_set;
    const QubitOperator hc = compress_support(h, flip, *bits);
    CliffordCircuit rc(static_cast<int>(flip.size()));
    for (std::size_t b = 0; b < flip.size(); ++b) {
      if ((*bits)[flip.indices()[b]]) rc.x(static_cast<int>(b));
    }
    reduced[e].indices = flip.indices();
    reduced[e].eval.emplace(hc, rc);
  }
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::ptrdiff_t j = 0; j < n_jobs; ++j) {
    const PauliWord& p = dis[jobs[j].entry].candidates[jobs[j].candidate];
    const CompressedEntry& ce = reduced[jobs[j].entry];
    out[j] = ce.eval->evaluate(squeeze_word(p, ce.indices));
    out[j].word = p;
  }
  return out;
}

}  // namespace

std::vector<CandidateResult> evaluate_candidates_serial(const std::vector<DISEntry>& dis,
                                                        const QubitOperator& h,
                                                        const CliffordCircuit& ref,
                                                        const RunConfig& cfg) {
  return evaluate_all(dis, h, ref, cfg, false);
}

std::vector<CandidateResult> evaluate_candidates_parallel(const std::vector<DISEntry>& dis,
                                                          const QubitOperator& h,
                                                          const CliffordCircuit& ref,
                                                          const RunConfig& cfg) {
  return evaluate_all(dis, h, ref, cfg, true);
}

std::size_t select_generator(const std::vector<CandidateResult>& evaluated, SelectionMode mode) {
  if (evaluated.empty()) throw ArgumentError("no candidates to select from");
  auto score = [mode](const CandidateResult& r) {
    return mode == SelectionMode::Rotosolve ? r.energy : -std::abs(r.gradient);
  };
  double best = score(evaluated.front());
  for (const auto& r : evaluated) best = std::min(best, score(r));
  std::size_t pick = evaluated.size();
  for (std::size_t i = 0; i < evaluated.size(); ++i) {
    if (score(evaluated[i]) > best + kTieTol) continue;
    if (pick == evaluated.size() || lexicographic_less(evaluated[i].word, evaluated[pick].word)) pick = i;
  }
  return pick;
}

QubitOperator fold(const QubitOperator& h, const PauliWord& p, double phi, double prune_eps,
                   double* max_imag) {
  if (p.n_qubits() != h.n_qubits()) throw DimensionError("generator width differs from Hamiltonian");
  const double c = std::cos(phi), s = std::sin(phi);
  const PauliWord pc = p.canonical();
  // Commuting terms pass through; anticommuting h·P_j become
  // h·(cos φ·P_j − i·sin φ·P_j·P).
  OperatorBuilder b(h.n_qubits());
  b.reserve(2 * h.size());
  for (const auto& t : h) {
    if (commutes(t.word, pc)) {
      b.add(t.word, t.coeff);
    } else {
      b.add(t.word, c * t.coeff);
      b.add(t.word * pc, std::complex<double>(0.0, -s) * t.coeff);
    }
  }
  const QubitOperator raw = b.build();
  if (max_imag) *max_imag = raw.max_imag();
  return prune(raw.real_part(1e-8), prune_eps);
}

std::vector<PauliRotation> add_commuting_generators(const std::vector<CandidateResult>& evaluated,
                                                    std::size_t first, int k,
                                                    const QubitOperator& h,
                                                    const CliffordCircuit& ref,
                                                    double prune_eps) {
  if (first >= evaluated.size()) throw ArgumentError("selected candidate out of range");
  std::vector<PauliRotation> chosen{PauliRotation{evaluated[first].word, evaluated[first].phi}};
  if (k <= 1) return chosen;

  std::vector<std::size_t> order(evaluated.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (evaluated[a].energy != evaluated[b].energy) return evaluated[a].energy < evaluated[b].energy;
    return lexicographic_less(evaluated[a].word, evaluated[b].word);
  });

  QubitOperator folded = fold(h, chosen[0].word, chosen[0].angle, prune_eps);
  double energy = EnergyEvaluator(folded, ref).reference_energy();
  for (std::size_t i : order) {
    if (static_cast<int>(chosen.size()) >= k) break;
    const PauliWord& w = evaluated[i].word;
    bool ok = true;
    for (const auto& g : chosen) ok = ok && commutes(g.word, w) && !(g.word == w);
    if (!ok) continue;
    const CandidateResult r = EnergyEvaluator(folded, ref).evaluate(w);
    if (!(r.energy < energy - kTieTol)) continue;
    chosen.push_back({w, r.phi});
    folded = fold(folded, w, r.phi, prune_eps);
    energy = EnergyEvaluator(folded, ref).reference_energy();
  }
  return chosen;
}

std::vector<PauliRotation> IterationRecord::generators() const {
  std::vector<PauliRotation> g{{chosen, phi}};
  g.insert(g.end(), extra.begin(), extra.end());
  return g;
}

RunResult run(const QubitOperator& h0, const CliffordCircuit& ref, const RunConfig& cfg,
              const IterationCallback& on_iteration) {
  const int n = h0.n_qubits();
  cfg.validate(n);
  if (ref.n_qubits() != n) throw DimensionError("reference circuit width differs from Hamiltonian");

  RunResult result;
  QubitOperator h = prune(h0, cfg.prune_eps);
  double energy = EnergyEvaluator(h, ref).reference_energy();
  result.initial_energy = energy;
  result.stop = StopReason::MaxIterations;

  while (static_cast<int>(result.records.size()) < cfg.max_iterations) {
    const std::vector<DISEntry> dis = h.empty() ? std::vector<DISEntry>{} : build_dis(h, ref, cfg);
    if (dis.empty()) {
      result.stop = StopReason::EmptyDIS;
      break;
    }
    const std::vector<CandidateResult> evaluated =
        cfg.parallel ? evaluate_candidates_parallel(dis, h, ref, cfg)
                     : evaluate_candidates_serial(dis, h, ref, cfg);
    const std::size_t pick = select_generator(evaluated, cfg.selection);
    if (energy - evaluated[pick].energy < cfg.epsilon_conv) {
      result.stop = StopReason::Converged;
      break;
    }
    const std::vector<PauliRotation> gens =
        add_commuting_generators(evaluated, pick, cfg.multi_generator, h, ref, cfg.prune_eps);

    IterationRecord rec;
    rec.m = static_cast<int>(result.records.size()) + 1;
    rec.chosen = gens.front().word;
    rec.phi = gens.front().angle;
    rec.extra.assign(gens.begin() + 1, gens.end());
    for (const auto& g : gens) {
      double imag = 0.0;
      h = fold(h, g.word, g.angle, cfg.prune_eps, &imag);
      rec.max_imag = std::max(rec.max_imag, imag);
    }
    energy = EnergyEvaluator(h, ref).reference_energy();
    rec.energy = energy;
    rec.n_terms = h.size();
    rec.dis_size = dis.size();
    rec.n_candidates = evaluated.size();
    rec.selection_mode = cfg.selection;
    result.records.push_back(rec);
    if (on_iteration) on_iteration(result.records.back(), h);
  }
  result.final_hamiltonian = std::move(h);
  return result;
}

AnsatzCircuit compile_final_circuit(const std::vector<IterationRecord>& records,
                                    const CliffordCircuit& ref) {
  AnsatzCircuit a{ref, {}};
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    for (const auto& g : it->generators()) a.rotations.push_back(g);
  }
  return a;
}

}  // namespace ciqcc
