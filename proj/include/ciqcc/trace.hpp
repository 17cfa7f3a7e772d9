#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ciqcc/engine.hpp"

namespace ciqcc {

/// One parsed trace row. `error_vs_fci` is absent when no reference
/// energy was known.
struct TraceEntry {
  IterationRecord record;
  std::optional<double> error_vs_fci;
};

/// Header "iter,energy,error_vs_fci,n_terms,dis_size,phi,pauli".
std::string csv_header();
/// Multi-generator steps list every word and angle joined by ';'.
std::string csv_row(const IterationRecord& r, std::optional<double> fci);

/// One JSON object, no trailing newline.
std::string jsonl_line(const IterationRecord& r, std::optional<double> fci);

/// Reads a JSONL or CSV trace (detected from the first non-blank
/// character). Throws ParseError with the offending line.
std::vector<TraceEntry> parse_trace(std::string_view text);

/// Generators of a trace in iteration order, extras flattened in place.
std::vector<PauliRotation> trace_generators(const std::vector<TraceEntry>& trace);

struct TermStats {
  /// First iteration from which every 3-step window changes n_terms by
  /// less than 1%; absent if the trace never levels.
  std::optional<int> plateau_iteration;
  std::size_t plateau_terms = 0;
  std::size_t max_terms = 0;
};

TermStats term_stats(const std::vector<TraceEntry>& trace);

}  // namespace ciqcc
