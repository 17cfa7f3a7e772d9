#include <doctest.h>

#include "ciqcc/errors.hpp"
#include "ciqcc/run_config.hpp"
#include "ciqcc/trace.hpp"

using namespace ciqcc;

namespace {

IterationRecord record(int m, std::size_t terms) {
  IterationRecord r;
  r.m = m;
  r.chosen = PauliWord::from_string("XYII");
  r.phi = -0.125 * m;
  r.energy = -1.0 - 0.1 * m;
  r.n_terms = terms;
  r.dis_size = 4;
  r.n_candidates = 12;
  return r;
}

}  // namespace

TEST_CASE("csv rows") {
  CHECK(csv_header() == "iter,energy,error_vs_fci,n_terms,dis_size,phi,pauli");
  const IterationRecord r = record(1, 90);
  CHECK(csv_row(r, std::nullopt) == "1,-1.1,,90,4,-0.125,XYII");
  CHECK(csv_row(r, -1.5) == "1,-1.1,0.3999999999999999,90,4,-0.125,XYII");
  IterationRecord multi = r;
  multi.extra.push_back({PauliWord::from_string("IIXY"), 0.5});
  CHECK(csv_row(multi, std::nullopt) == "1,-1.1,,90,4,-0.125;0.5,XYII;IIXY");
}

TEST_CASE("trace round trips") {
  std::string jsonl, csv = csv_header() + "\n";
  std::vector<IterationRecord> recs;
  for (int m = 1; m <= 4; ++m) recs.push_back(record(m, 100 + m));
  recs[2].extra.push_back({PauliWord::from_string("IIXY"), 0.5});
  for (const auto& r : recs) {
    jsonl += jsonl_line(r, -2.0) + "\n";
    csv += csv_row(r, -2.0) + "\n";
  }
  for (const std::string& text : {jsonl, csv}) {
    const auto t = parse_trace(text);
    REQUIRE(t.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(t[i].record.m == recs[i].m);
      CHECK(t[i].record.energy == recs[i].energy);
      CHECK(t[i].record.phi == recs[i].phi);
      CHECK(t[i].record.chosen == recs[i].chosen);
      CHECK(t[i].record.n_terms == recs[i].n_terms);
      CHECK(*t[i].error_vs_fci == doctest::Approx(recs[i].energy + 2.0));
    }
    CHECK(trace_generators(t).size() == 5);
  }
  CHECK(parse_trace("").empty());
  CHECK(parse_trace(csv_header() + "\n").empty());
  CHECK_THROWS_AS(parse_trace("{\"iter\": 1}\n"), ParseError);
  CHECK_THROWS_AS(parse_trace("a,b\n"), ParseError);
}

TEST_CASE("plateau detection") {
  std::vector<TraceEntry> t;
  const std::size_t terms[] = {90, 124, 170, 200, 258, 258, 258, 258, 273, 279, 280, 280, 280, 280};
  int m = 1;
  for (std::size_t n : terms) t.push_back({record(m++, n), std::nullopt});
  const TermStats s = term_stats(t);
  REQUIRE(s.plateau_iteration);
  CHECK(*s.plateau_iteration == 10);
  CHECK(s.plateau_terms == 279);
  CHECK(s.max_terms == 280);

  std::vector<TraceEntry> growing;
  for (int k = 1; k <= 6; ++k) growing.push_back({record(k, 100 * k), std::nullopt});
  CHECK_FALSE(term_stats(growing).plateau_iteration);
}

TEST_CASE("config text and environment") {
  RunConfig cfg;
  apply_config_text(cfg, "[run]\nmapping = bk   # comment\nselection=gradient\neps = 1e-9\nmax_iterations = 12\n"
                         "max_candidate_rank = 4\ncompression = true\nmulti_generator = 3\nprune_eps=1e-10\n; note\n");
  CHECK(cfg.mapping == MappingKind::BK);
  CHECK(cfg.selection == SelectionMode::Gradient);
  CHECK(cfg.epsilon_conv == 1e-9);
  CHECK(cfg.max_iterations == 12);
  CHECK(*cfg.max_candidate_rank == 4);
  CHECK(cfg.compression);
  CHECK(cfg.multi_generator == 3);
  CHECK(cfg.prune_eps == 1e-10);

  apply_environment(cfg, {{"CLIFFORD_IQCC_MAX_ITER", "7"}, {"CLIFFORD_IQCC_MAPPING", "jkmn"}, {"OTHER", "x"}});
  CHECK(cfg.max_iterations == 7);
  CHECK(cfg.mapping == MappingKind::JKMN);

  CHECK_THROWS_AS(apply_config_text(cfg, "mapping\n"), ParseError);
  CHECK_THROWS_AS(apply_config_text(cfg, "colour = red\n"), ParseError);
  CHECK_THROWS_AS(apply_setting(cfg, "eps", "small"), ArgumentError);
  CHECK_THROWS_AS(apply_environment(cfg, {{"CLIFFORD_IQCC_BOGUS", "1"}}), ArgumentError);
}
