#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ciqcc {

/// Words are packed into one 64-bit mask per component.
inline constexpr int kMaxQubits = 64;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_letter(Pauli p);

/// N-qubit Pauli word in symplectic form with a phase i^k.
///
/// Qubit q carries X if only bit q of x_mask is set, Z if only bit q of
/// z_mask is set, Y if both are set. The letters always denote the
/// Hermitian single-qubit matrices, so a word with phase exponent 0 is
/// Hermitian and squares to the identity.
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(int n_qubits);
  PauliWord(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
            int phase_exponent = 0);

  /// Letters in qubit order, e.g. "XZIY" is X on qubit 0 and Y on qubit 3.
  /// A leading sign or phase ("-", "i", "-i") is accepted.
  static PauliWord from_string(std::string_view letters);
  static PauliWord single(int n_qubits, int qubit, Pauli p);

  int n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }
  int phase_exponent() const noexcept { return phase_; }
  std::complex<double> phase() const noexcept;

  Pauli at(int qubit) const noexcept;
  int weight() const noexcept { return std::popcount(x_ | z_); }
  int y_count() const noexcept { return std::popcount(x_ & z_); }
  int x_count() const noexcept { return std::popcount(x_ & ~z_); }
  bool is_identity() const noexcept { return (x_ | z_) == 0; }
  std::uint64_t support() const noexcept { return x_ | z_; }

  /// Same letters with phase +1.
  PauliWord canonical() const noexcept { return {n_qubits_, x_, z_, 0, Unchecked{}}; }
  PauliWord negated() const noexcept { return with_phase(phase_ + 2); }
  PauliWord with_phase(int exponent) const noexcept {
    return {n_qubits_, x_, z_, exponent & 3, Unchecked{}};
  }

  /// Dense letters, phase prefix when not +1: "-iXYZ".
  std::string to_string() const;
  /// Sparse tokens "X0 Z2"; the identity is "I". Phase is not printed.
  std::string to_sparse_string() const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;

 private:
  struct Unchecked {};
  PauliWord(int n, std::uint64_t x, std::uint64_t z, int phase, Unchecked) noexcept
      : n_qubits_(n), x_(x), z_(z), phase_(static_cast<std::uint8_t>(phase)) {}

  friend PauliWord multiply(const PauliWord& a, const PauliWord& b);

  int n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  std::uint8_t phase_ = 0;
};

/// Exact product a·b including phase.
PauliWord multiply(const PauliWord& a, const PauliWord& b);
inline PauliWord operator*(const PauliWord& a, const PauliWord& b) { return multiply(a, b); }

bool commutes(const PauliWord& a, const PauliWord& b);

/// Letter order from qubit 0 upward with I < X < Y < Z; phase ignored.
/// Total order on words of one size, used for storage and tie-breaking.
bool lexicographic_less(const PauliWord& a, const PauliWord& b) noexcept;

struct LexicographicLess {
  bool operator()(const PauliWord& a, const PauliWord& b) const noexcept {
    return lexicographic_less(a, b);
  }
};

/// Qubits on which a word carries X or Y, in increasing order.
class FlipSet {
 public:
  FlipSet() = default;
  FlipSet(int n_qubits, std::uint64_t mask);
  static FlipSet from_indices(int n_qubits, const std::vector<int>& indices);

  int n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t mask() const noexcept { return mask_; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }

  friend bool operator==(const FlipSet& a, const FlipSet& b) {
    return a.n_qubits_ == b.n_qubits_ && a.mask_ == b.mask_;
  }

 private:
  int n_qubits_ = 0;
  std::uint64_t mask_ = 0;
  std::vector<int> indices_;
};

FlipSet flip_indices(const PauliWord& p);

struct PauliWordHash {
  std::size_t operator()(const PauliWord& p) const noexcept {
    std::uint64_t h = p.x_mask() * 0x9E3779B97F4A7C15ULL;
    h ^= (p.z_mask() + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

}  // namespace ciqcc
