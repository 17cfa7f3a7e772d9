#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ciqcc/pauli.hpp"

namespace ciqcc {

inline constexpr double kDefaultPruneEps = 1e-12;

/// Sparse sum of Pauli words with complex coefficients.
///
/// Terms are stored once per word, sorted by `lexicographic_less`, with the
/// word's phase folded into the coefficient. Values are immutable after
/// construction; build new operators through `OperatorBuilder`.
class QubitOperator {
 public:
  using Coefficient = std::complex<double>;
  struct Term {
    PauliWord word;
    Coefficient coeff;
  };

  QubitOperator() = default;
  explicit QubitOperator(int n_qubits);

  static QubitOperator identity(int n_qubits, Coefficient c = 1.0);
  static QubitOperator from_word(const PauliWord& w, Coefficient c = 1.0);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /// The c for which c·w is a term (w's own phase divided out); 0 if absent.
  Coefficient coefficient(const PauliWord& w) const;

  /// Largest |Im(c)| over all terms.
  double max_imag() const noexcept;
  /// Drops imaginary parts. Throws NumericError if any exceeds `tolerance`.
  QubitOperator real_part(double tolerance) const;

  QubitOperator adjoint() const;

  friend QubitOperator operator+(const QubitOperator& a, const QubitOperator& b);
  friend QubitOperator operator-(const QubitOperator& a, const QubitOperator& b);
  friend QubitOperator operator*(const QubitOperator& a, const QubitOperator& b);
  friend QubitOperator operator*(Coefficient s, const QubitOperator& a);

  friend bool operator==(const QubitOperator& a, const QubitOperator& b);

 private:
  friend class OperatorBuilder;
  int n_qubits_ = 0;
  std::vector<Term> terms_;
};

/// Hash-map accumulator for operator arithmetic.
class OperatorBuilder {
 public:
  explicit OperatorBuilder(int n_qubits);

  void reserve(std::size_t n) { acc_.reserve(n); }
  /// Adds c·w; the phase of `w` is absorbed into the coefficient.
  void add(const PauliWord& w, QubitOperator::Coefficient c);
  void add(const QubitOperator& op, QubitOperator::Coefficient scale = 1.0);

  /// Sorted operator without terms whose |c| < eps (eps = 0: exact zeros only).
  QubitOperator build(double prune_eps = 0.0) const;

 private:
  int n_qubits_;
  std::unordered_map<PauliWord, QubitOperator::Coefficient, PauliWordHash> acc_;
};

/// [H, P] = HP − PH; only anticommuting terms survive, each as 2·h·(P_j·P).
QubitOperator commutator(const QubitOperator& h, const PauliWord& p);

QubitOperator prune(const QubitOperator& h, double eps);

/// Number of non-identity words with an even count of Y factors.
/// Throws std::overflow_error when the count does not fit in 64 bits.
std::uint64_t max_term_count(int n_qubits);

/// One term per line: "(re,im) X0 Z2". Doubles are written in shortest
/// round-trip form so to_text/from_text is exact.
std::string to_text(const QubitOperator& op);

/// Parses the `to_text` format. Lines starting with '#' are skipped.
/// `n_qubits` = 0 infers the count as highest index + 1.
QubitOperator from_text(std::string_view text, int n_qubits = 0);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace ciqcc
