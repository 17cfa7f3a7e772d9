#include <doctest.h>

#include <algorithm>
#include <random>

#include "ciqcc/errors.hpp"
#include "ciqcc/pauli.hpp"
#include "dense.hpp"

using namespace ciqcc;
using namespace ciqcc::test;

TEST_CASE("letters and strings") {
  const PauliWord w = PauliWord::from_string("XZIY");
  CHECK(w.n_qubits() == 4);
  CHECK(w.at(0) == Pauli::X);
  CHECK(w.at(1) == Pauli::Z);
  CHECK(w.at(2) == Pauli::I);
  CHECK(w.at(3) == Pauli::Y);
  CHECK(w.weight() == 3);
  CHECK(w.y_count() == 1);
  CHECK(w.x_count() == 1);
  CHECK(w.to_string() == "XZIY");
  CHECK(w.to_sparse_string() == "X0 Z1 Y3");
  CHECK(PauliWord(3).to_sparse_string() == "I");
  CHECK(PauliWord::from_string("-iXY").phase_exponent() == 3);
  CHECK(PauliWord::from_string("-iXY").to_string() == "-iXY");
  CHECK_THROWS_AS(PauliWord::from_string("XQ"), ParseError);
  CHECK_THROWS_AS(PauliWord::from_string(""), DimensionError);
}

TEST_CASE("two-qubit products match 4x4 matrices") {
  // every ordered pair of the 16 two-qubit words
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const PauliWord pa(2, a & 3, a >> 2);
      const PauliWord pb(2, b & 3, b >> 2);
      const PauliWord prod = pa * pb;
      CHECK((dense(prod) - dense(pa) * dense(pb)).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
      const bool dense_commute = (dense(pa) * dense(pb) - dense(pb) * dense(pa)).cwiseAbs().maxCoeff() < 1e-14;
      CHECK(commutes(pa, pb) == dense_commute);
    }
  }
  const PauliWord xz = PauliWord::from_string("XZ"), zx = PauliWord::from_string("ZX");
  CHECK((xz * zx).to_string() == "YY");
}

TEST_CASE("random products with phases on 5 qubits") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const PauliWord a = random_word(rng, 5).with_phase(trial % 4);
    const PauliWord b = random_word(rng, 5).with_phase(trial / 4 % 4);
    CHECK((dense(a * b) - dense(a) * dense(b)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("words square to identity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const PauliWord w = random_word(rng, 7);
    const PauliWord sq = w * w;
    CHECK(sq.is_identity());
    CHECK(sq.phase_exponent() == 0);
  }
}

TEST_CASE("lexicographic order") {
  std::vector<PauliWord> all;
  for (std::uint64_t k = 0; k < 16; ++k) all.emplace_back(2, k & 3, k >> 2);
  std::sort(all.begin(), all.end(), LexicographicLess{});
  std::vector<std::string> names;
  for (const auto& w : all) names.push_back(w.to_string());
  CHECK(names.front() == "II");
  CHECK(names[1] == "IX");
  CHECK(names[4] == "XI");
  CHECK(names.back() == "ZZ");
  CHECK(lexicographic_less(PauliWord::from_string("XY"), PauliWord::from_string("YX")));
  CHECK_FALSE(lexicographic_less(PauliWord::from_string("XY"), PauliWord::from_string("-XY")));
}

TEST_CASE("flip sets") {
  const PauliWord w = PauliWord::from_string("XZYI");
  CHECK(flip_indices(w).indices() == std::vector<int>{0, 2});
  CHECK(flip_indices(PauliWord::from_string("ZZZ")).empty());
  CHECK(FlipSet::from_indices(4, {1, 3}).mask() == 0b1010);
  CHECK_THROWS_AS(FlipSet::from_indices(4, {3, 1}), ArgumentError);
  CHECK_THROWS_AS(FlipSet::from_indices(4, {4}), DimensionError);
}

TEST_CASE("size limits") {
  CHECK_THROWS(PauliWord(65));
  CHECK_NOTHROW(PauliWord(64));
  CHECK_THROWS_AS(PauliWord(3, 0b1000, 0), DimensionError);
  CHECK_THROWS_AS(PauliWord::from_string("XY") * PauliWord::from_string("XYZ"), DimensionError);
}
