#include <doctest.h>

#include <random>

#include "ciqcc/errors.hpp"
#include "ciqcc/qubit_operator.hpp"
#include "dense.hpp"

using namespace ciqcc;
using namespace ciqcc::test;

TEST_CASE("builder merges and sorts") {
  OperatorBuilder b(2);
  b.add(PauliWord::from_string("ZI"), 1.0);
  b.add(PauliWord::from_string("XX"), 0.5);
  b.add(PauliWord::from_string("ZI"), 2.0);
  b.add(PauliWord::from_string("iYY"), 1.0);  // phase goes into the coefficient
  b.add(PauliWord::from_string("IZ"), 1e-14);
  const QubitOperator h = b.build(1e-12);
  REQUIRE(h.size() == 3);
  CHECK(h.terms()[0].word.to_string() == "XX");
  CHECK(h.coefficient(PauliWord::from_string("ZI")) == Cx(3.0));
  CHECK(h.coefficient(PauliWord::from_string("YY")) == Cx(0, 1));
  CHECK(h.coefficient(PauliWord::from_string("-iYY")) == Cx(-1, 0));  // i·YY = −1·(−iYY)
  CHECK(h.coefficient(PauliWord::from_string("ZZ")) == Cx(0.0));
  CHECK(h.max_imag() == 1.0);
  CHECK_THROWS_AS(h.real_part(1e-9), NumericError);
}

TEST_CASE("arithmetic matches dense matrices") {
  std::mt19937_64 rng(5);
  const QubitOperator a = random_hermitian(rng, 3, 10);
  const QubitOperator b = random_hermitian(rng, 3, 10);
  CHECK((dense(a * b) - dense(a) * dense(b)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((dense(a + b) - dense(a) - dense(b)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((dense(a - b) - dense(a) + dense(b)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((dense((a * b).adjoint()) - (dense(a) * dense(b)).adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("commutator of a random 4-qubit operator") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const QubitOperator h = random_hermitian(rng, 4, 20);
    const PauliWord p = random_word(rng, 4, false);
    const Mat expect = dense(h) * dense(p) - dense(p) * dense(h);
    CHECK((dense(commutator(h, p)) - expect).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("commutator with a commuting word is empty") {
  const QubitOperator h = QubitOperator::from_word(PauliWord::from_string("ZZ"), 0.7);
  CHECK(commutator(h, PauliWord::from_string("XX")).empty());
}

TEST_CASE("text round trip is exact") {
  std::mt19937_64 rng(23);
  const QubitOperator h = random_hermitian(rng, 6, 40) + QubitOperator::identity(6, Cx(0.1, -1.0 / 3.0));
  const QubitOperator back = from_text(to_text(h), 6);
  CHECK(back == h);
}

TEST_CASE("text parsing") {
  const QubitOperator h = from_text("# comment\n(0.5,0) X0 Z2\n(0.25,0) I\n(0.5,0) Z2 X0\n");
  CHECK(h.n_qubits() == 3);
  CHECK(h.size() == 2);
  CHECK(h.coefficient(PauliWord::from_string("XIZ")) == Cx(1.0));
  CHECK_THROWS_AS(from_text("(1,0) X0 X0\n"), ParseError);
  CHECK_THROWS_AS(from_text("(1,0) Q0\n"), ParseError);
  CHECK_THROWS_AS(from_text("(1,0 X0\n"), ParseError);
  CHECK_THROWS(from_text("(1,0) X5\n", 3));
}

TEST_CASE("pruning") {
  OperatorBuilder b(2);
  b.add(PauliWord::from_string("ZI"), 1.0);
  b.add(PauliWord::from_string("IZ"), 1e-13);
  const QubitOperator h = b.build();
  CHECK(prune(h, 1e-12).size() == 1);
  CHECK(prune(h, 0.0).size() == 2);
  CHECK_THROWS_AS(prune(h, -1.0), ArgumentError);
}

TEST_CASE("maximum term count") {
  CHECK(max_term_count(1) == 2);
  CHECK(max_term_count(6) == 2079);
  CHECK(max_term_count(8) == 32895);
  CHECK(max_term_count(12) == 8390655);
  // brute force: non-identity words with an even number of Y
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < (1u << n); ++x) {
      for (std::uint64_t z = 0; z < (1u << n); ++z) {
        if ((x | z) != 0 && std::popcount(x & z) % 2 == 0) ++count;
      }
    }
    CHECK(max_term_count(n) == count);
  }
  CHECK(max_term_count(32) == (std::uint64_t{1} << 63) + (std::uint64_t{1} << 31) - 1);
  CHECK_THROWS_AS(max_term_count(33), std::overflow_error);
  CHECK_THROWS_AS(max_term_count(64), std::overflow_error);
}
