#include "ciqcc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ciqcc/engine.hpp"
#include "ciqcc/errors.hpp"
#include "ciqcc/fcidump.hpp"
#include "ciqcc/fermion_operator.hpp"
#include "ciqcc/interior.hpp"
#include "ciqcc/qubit_hamiltonian_file.hpp"
#include "ciqcc/run_config.hpp"
#include "ciqcc/statevector.hpp"
#include "ciqcc/trace.hpp"

namespace ciqcc {

InputKind detect_input_kind(const std::string& path) {
  const std::string ext = ".qubitop";
  if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
    return InputKind::Qubitop;
  }
  return InputKind::Fcidump;
}

Problem load_problem(const std::string& path, InputKind input, MappingKind kind) {
  const std::string text = read_file(path);
  Problem p;
  if (input == InputKind::Qubitop) {
    QubitHamiltonianFile f = load_qubit_hamiltonian(text);
    const int n = f.hamiltonian.n_qubits();
    p.reference = CliffordCircuit(n);
    if (f.reference) {
      if (static_cast<int>(f.reference->size()) != n) throw DimensionError("reference width differs from operator");
      for (int q = 0; q < n; ++q) {
        if ((*f.reference)[q]) p.reference.x(q);
      }
    }
    p.hamiltonian = std::move(f.hamiltonian);
    p.fci_energy = f.fci_energy;
    return p;
  }
  const MolecularIntegrals mi = parse_fcidump(text);
  const int n = 2 * mi.n_orbitals();
  p.hamiltonian = map_operator(build_second_quantized(mi), n, kind);
  p.reference = reference_circuit(aufbau_occupation(mi.n_orbitals(), mi.n_electrons(), mi.ms2()), kind);
  return p;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot write '" + path + "'");
  f << content;
}

struct RunFlags {
  std::string input;
  std::string input_kind;
  std::optional<std::string> mapping, select, config;
  std::optional<double> eps, prune_eps, fci;
  std::optional<int> max_iter, max_rank, multi_gen;
  bool compress = false;
  bool serial = false;
  std::string dump_circuit, trace_path, csv_path;
};

InputKind resolve_kind(const std::string& path, const std::string& flag) {
  if (flag.empty()) return detect_input_kind(path);
  if (flag == "fcidump") return InputKind::Fcidump;
  if (flag == "qubitop") return InputKind::Qubitop;
  throw ArgumentError("unknown input kind '" + flag + "'");
}

RunConfig resolve_config(const RunFlags& f) {
  RunConfig cfg;
  if (f.config) apply_config_text(cfg, read_file(*f.config));
  apply_environment(cfg, prefixed_environment());
  if (f.mapping) cfg.mapping = parse_mapping(*f.mapping);
  if (f.select) cfg.selection = parse_selection(*f.select);
  if (f.eps) cfg.epsilon_conv = *f.eps;
  if (f.max_iter) cfg.max_iterations = *f.max_iter;
  if (f.prune_eps) cfg.prune_eps = *f.prune_eps;
  if (f.max_rank) cfg.max_candidate_rank = *f.max_rank;
  if (f.multi_gen) cfg.multi_generator = *f.multi_gen;
  if (f.compress) cfg.compression = true;
  if (f.serial) cfg.parallel = false;
  return cfg;
}

std::optional<double> reference_energy(const Problem& p, std::ostream& err) {
  if (p.fci_energy) return p.fci_energy;
  if (p.hamiltonian.n_qubits() > kOracleMaxQubits) {
    err << "note: " << p.hamiltonian.n_qubits() << " qubits exceed the oracle cap; no error column\n";
    return std::nullopt;
  }
  return ground_energy(p.hamiltonian);
}

int cmd_run(const RunFlags& f, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = resolve_config(f);
  const Problem p = load_problem(f.input, resolve_kind(f.input, f.input_kind), cfg.mapping);
  std::optional<double> fci = f.fci ? f.fci : reference_energy(p, err);

  std::ofstream csv_file, trace_file;
  std::ostream* csv = &out;
  if (!f.csv_path.empty()) {
    csv_file.open(f.csv_path, std::ios::binary);
    if (!csv_file) throw ArgumentError("cannot write '" + f.csv_path + "'");
    csv = &csv_file;
  }
  if (!f.trace_path.empty()) {
    trace_file.open(f.trace_path, std::ios::binary);
    if (!trace_file) throw ArgumentError("cannot write '" + f.trace_path + "'");
  }
  *csv << csv_header() << '\n';
  const RunResult res = run(p.hamiltonian, p.reference, cfg, [&](const IterationRecord& r, const QubitOperator&) {
    *csv << csv_row(r, fci) << '\n' << std::flush;
    if (trace_file.is_open()) trace_file << jsonl_line(r, fci) << '\n' << std::flush;
  });

  if (!f.dump_circuit.empty()) write_file(f.dump_circuit, compile_final_circuit(res.records, p.reference).dump());

  err << "initial energy " << format_double(res.initial_energy) << '\n'
      << "final energy   " << format_double(res.final_energy()) << '\n';
  if (fci) err << "error vs fci   " << format_double(res.final_energy() - *fci) << '\n';
  err << "iterations " << res.records.size() << ", terms " << res.final_hamiltonian.size()
      << ", stop: " << to_string(res.stop) << '\n';
  return res.stop == StopReason::MaxIterations ? kExitMaxIterations : kExitOk;
}

int cmd_map(const std::string& input, const std::string& mapping, const std::string& out_path,
            std::ostream& out) {
  const MappingKind kind = parse_mapping(mapping);
  const Problem p = load_problem(input, InputKind::Fcidump, kind);
  QubitHamiltonianFile f{p.hamiltonian, basis_state_of(p.reference), std::nullopt};
  const std::string text = save_qubit_hamiltonian(f);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

int cmd_fci(const std::string& input, const std::string& kind_flag, const std::string& mapping,
            std::ostream& out) {
  const Problem p = load_problem(input, resolve_kind(input, kind_flag), parse_mapping(mapping));
  const LanczosResult r = lanczos_ground_state(p.hamiltonian);
  out << std::setprecision(15) << r.energy << '\n';
  return kExitOk;
}

int cmd_stats(const std::string& trace_path, std::ostream& out) {
  const std::vector<TraceEntry> trace = parse_trace(read_file(trace_path));
  out << "iter,energy,error_vs_fci,n_terms\n";
  for (const auto& e : trace) {
    out << e.record.m << ',' << format_double(e.record.energy) << ','
        << (e.error_vs_fci ? format_double(*e.error_vs_fci) : std::string()) << ',' << e.record.n_terms << '\n';
  }
  if (trace.empty()) return kExitOk;
  const int n = trace.front().record.chosen.n_qubits();
  const TermStats s = term_stats(trace);
  out << "qubits: " << n << '\n' << "max terms: " << s.max_terms << '\n';
  try {
    out << "ceiling: " << max_term_count(n) << '\n';
  } catch (const std::overflow_error&) {
    out << "ceiling: > 2^64\n";
  }
  if (s.plateau_iteration) {
    out << "plateau: " << s.plateau_terms << " terms from iteration " << *s.plateau_iteration << '\n';
  } else {
    out << "plateau: none\n";
  }
  return kExitOk;
}

int cmd_interior(const std::string& input, const std::string& trace_path, const std::string& mapping,
                 int sweeps, std::uint64_t budget, const std::string& out_path, std::ostream& out) {
  const Problem p = load_problem(input, detect_input_kind(input), parse_mapping(mapping));
  std::vector<PauliRotation> gens = trace_generators(parse_trace(read_file(trace_path)));
  InteriorOptions opt;
  opt.job_budget = budget;
  out << "start energy " << format_double(ansatz_energy(gens, p.hamiltonian, p.reference)) << '\n';
  out << "sweep,m,phi_old,phi_new,energy\n";
  for (int s = 1; s <= sweeps; ++s) {
    for (int m = 1; m <= static_cast<int>(gens.size()); ++m) {
      const InteriorStep st = reoptimize_interior(m, gens, p.hamiltonian, p.reference, opt);
      out << s << ',' << st.m << ',' << format_double(st.phi_old) << ',' << format_double(st.phi_new) << ','
          << format_double(st.energy) << '\n';
    }
  }
  out << "final energy " << format_double(ansatz_energy(gens, p.hamiltonian, p.reference)) << '\n';
  if (!out_path.empty()) {
    std::string text;
    for (const auto& g : gens) text += g.word.to_string() + ' ' + format_double(g.angle) + '\n';
    write_file(out_path, text);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford-circuit iterative qubit coupled cluster"};
  app.require_subcommand(1);

  RunFlags rf;
  auto* run_cmd = app.add_subcommand("run", "optimize a Hamiltonian, CSV trace on stdout");
  run_cmd->add_option("input", rf.input, "FCIDUMP or .qubitop file")->required();
  run_cmd->add_option("--input-kind", rf.input_kind, "fcidump|qubitop (default: by extension)");
  run_cmd->add_option("--mapping", rf.mapping, "jw|bk|jkmn");
  run_cmd->add_option("--select", rf.select, "rotosolve|gradient");
  run_cmd->add_option("--eps", rf.eps, "convergence threshold (Hartree)");
  run_cmd->add_option("--max-iter", rf.max_iter, "iteration limit");
  run_cmd->add_option("--prune-eps", rf.prune_eps, "drop terms below this magnitude");
  run_cmd->add_option("--max-rank", rf.max_rank, "skip flip sets larger than this");
  run_cmd->add_flag("--compress", rf.compress, "evaluate candidates on their support only");
  run_cmd->add_option("--multi-gen", rf.multi_gen, "up to K commuting generators per step");
  run_cmd->add_option("--dump-circuit", rf.dump_circuit, "write the final circuit here");
  run_cmd->add_option("--config", rf.config, "key = value settings file");
  run_cmd->add_option("--fci", rf.fci, "reference energy for the error column");
  run_cmd->add_option("--trace", rf.trace_path, "JSON lines trace output");
  run_cmd->add_option("--csv", rf.csv_path, "CSV trace output instead of stdout");
  run_cmd->add_flag("--serial", rf.serial, "evaluate candidates on one thread");

  std::string map_input, map_mapping = "jw", map_out;
  auto* map_cmd = app.add_subcommand("map", "map an FCIDUMP to a qubit operator file");
  map_cmd->add_option("input", map_input)->required();
  map_cmd->add_option("--mapping", map_mapping, "jw|bk|jkmn");
  map_cmd->add_option("-o,--output", map_out, "output file (default stdout)");

  std::string fci_input, fci_kind, fci_mapping = "jw";
  auto* fci_cmd = app.add_subcommand("fci", "print the ground energy");
  fci_cmd->add_option("input", fci_input)->required();
  fci_cmd->add_option("--input-kind", fci_kind, "fcidump|qubitop");
  fci_cmd->add_option("--mapping", fci_mapping, "jw|bk|jkmn");

  std::string stats_trace;
  auto* stats_cmd = app.add_subcommand("stats", "summarize a JSONL or CSV trace");
  stats_cmd->add_option("trace", stats_trace)->required();

  std::string int_input, int_trace, int_mapping = "jw", int_out;
  int int_sweeps = 1;
  std::uint64_t int_budget = kInteriorJobBudget;
  auto* int_cmd = app.add_subcommand("interior-sweep", "re-optimize interior angles of a trace");
  int_cmd->add_option("input", int_input)->required();
  int_cmd->add_option("trace", int_trace)->required();
  int_cmd->add_option("--mapping", int_mapping, "jw|bk|jkmn");
  int_cmd->add_option("--sweeps", int_sweeps, "number of passes")->check(CLI::PositiveNumber);
  int_cmd->add_option("--budget", int_budget, "maximum Hadamard tests per energy");
  int_cmd->add_option("-o,--output", int_out, "write updated generators (word angle per line)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*run_cmd) return cmd_run(rf, out, err);
    if (*map_cmd) return cmd_map(map_input, map_mapping, map_out, out);
    if (*fci_cmd) return cmd_fci(fci_input, fci_kind, fci_mapping, out);
    if (*stats_cmd) return cmd_stats(stats_trace, out);
    if (*int_cmd) return cmd_interior(int_input, int_trace, int_mapping, int_sweeps, int_budget, int_out, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace ciqcc
