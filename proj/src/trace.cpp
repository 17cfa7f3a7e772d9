#include "ciqcc/trace.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "ciqcc/errors.hpp"

namespace ciqcc {

namespace {

std::string join_words(const IterationRecord& r) {
  std::string s;
  for (const auto& g : r.generators()) {
    if (!s.empty()) s += ';';
    s += g.word.to_string();
  }
  return s;
}

std::string join_angles(const IterationRecord& r) {
  std::string s;
  for (const auto& g : r.generators()) {
    if (!s.empty()) s += ';';
    s += format_double(g.angle);
  }
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(const std::string& s, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + s + "'", line);
  }
  if (used != s.size()) throw ParseError("bad number '" + s + "'", line);
  return v;
}

void set_generators(IterationRecord& r, const std::vector<std::string>& words,
                    const std::vector<double>& angles, int line) {
  if (words.empty() || words.size() != angles.size()) {
    throw ParseError("generator and angle lists differ in length", line);
  }
  r.chosen = PauliWord::from_string(words[0]);
  r.phi = angles[0];
  for (std::size_t i = 1; i < words.size(); ++i) {
    r.extra.push_back({PauliWord::from_string(words[i]), angles[i]});
  }
}

std::vector<TraceEntry> parse_csv(std::string_view text) {
  std::vector<TraceEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != csv_header()) throw ParseError("unexpected CSV header", lineno);
      header = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 7) throw ParseError("expected 7 CSV fields", lineno);
    TraceEntry e;
    try {
      e.record.m = std::stoi(f[0]);
      e.record.energy = to_double(f[1], lineno);
      if (!f[2].empty()) e.error_vs_fci = to_double(f[2], lineno);
      e.record.n_terms = std::stoul(f[3]);
      e.record.dis_size = std::stoul(f[4]);
      std::vector<double> angles;
      for (const auto& a : split(f[5], ';')) angles.push_back(to_double(a, lineno));
      set_generators(e.record, split(f[6], ';'), angles, lineno);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError(ex.what(), lineno);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<TraceEntry> parse_jsonl(std::string_view text) {
  std::vector<TraceEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      TraceEntry e;
      e.record.m = j.at("iter").get<int>();
      e.record.energy = j.at("energy").get<double>();
      if (j.contains("error_vs_fci") && !j["error_vs_fci"].is_null()) {
        e.error_vs_fci = j["error_vs_fci"].get<double>();
      }
      e.record.n_terms = j.at("n_terms").get<std::size_t>();
      e.record.dis_size = j.at("dis_size").get<std::size_t>();
      e.record.n_candidates = j.value("n_candidates", std::size_t{0});
      e.record.max_imag = j.value("max_imag", 0.0);
      e.record.selection_mode = parse_selection(j.value("selection_mode", std::string("rotosolve")));
      std::vector<std::string> words;
      std::vector<double> angles;
      for (const auto& g : j.at("generators")) {
        words.push_back(g.at("pauli").get<std::string>());
        angles.push_back(g.at("phi").get<double>());
      }
      set_generators(e.record, words, angles, lineno);
      out.push_back(std::move(e));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError(ex.what(), lineno);
    }
  }
  return out;
}

}  // namespace

std::string csv_header() { return "iter,energy,error_vs_fci,n_terms,dis_size,phi,pauli"; }

std::string csv_row(const IterationRecord& r, std::optional<double> fci) {
  std::string s = std::to_string(r.m) + ',' + format_double(r.energy) + ',';
  if (fci) s += format_double(r.energy - *fci);
  s += ',' + std::to_string(r.n_terms) + ',' + std::to_string(r.dis_size) + ',';
  s += join_angles(r) + ',' + join_words(r);
  return s;
}

std::string jsonl_line(const IterationRecord& r, std::optional<double> fci) {
  nlohmann::ordered_json j;
  j["iter"] = r.m;
  j["energy"] = r.energy;
  j["error_vs_fci"] = fci ? nlohmann::ordered_json(r.energy - *fci) : nlohmann::ordered_json(nullptr);
  j["n_terms"] = r.n_terms;
  j["dis_size"] = r.dis_size;
  j["n_candidates"] = r.n_candidates;
  j["phi"] = r.phi;
  j["pauli"] = r.chosen.to_string();
  j["rank"] = r.chosen.weight();
  j["selection_mode"] = to_string(r.selection_mode);
  j["max_imag"] = r.max_imag;
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : r.generators()) gens.push_back({{"pauli", g.word.to_string()}, {"phi", g.angle}});
  j["generators"] = gens;
  return j.dump();
}

std::vector<TraceEntry> parse_trace(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  return text[first] == '{' ? parse_jsonl(text) : parse_csv(text);
}

std::vector<PauliRotation> trace_generators(const std::vector<TraceEntry>& trace) {
  std::vector<PauliRotation> out;
  for (const auto& e : trace) {
    for (const auto& g : e.record.generators()) out.push_back(g);
  }
  return out;
}

TermStats term_stats(const std::vector<TraceEntry>& trace) {
  TermStats s;
  const std::size_t n = trace.size();
  for (const auto& e : trace) s.max_terms = std::max(s.max_terms, e.record.n_terms);
  auto level = [&](std::size_t i) {
    const double a = static_cast<double>(trace[i - 3].record.n_terms);
    const double b = static_cast<double>(trace[i].record.n_terms);
    return std::abs(b - a) < 0.01 * std::max(a, 1.0);
  };
  // Walk back from the end while windows stay level.
  std::optional<std::size_t> start;
  for (std::size_t i = n; i-- > 3;) {
    if (!level(i)) break;
    start = i - 3;
  }
  if (start) {
    s.plateau_iteration = trace[*start].record.m;
    s.plateau_terms = trace[*start].record.n_terms;
  }
  return s;
}

}  // namespace ciqcc
