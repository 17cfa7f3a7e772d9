#include "ciqcc/pauli.hpp"

#include <cctype>

#include "ciqcc/errors.hpp"

namespace ciqcc {

namespace {

std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_size(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n) + " outside [1, 64]");
  }
}

void check_same_size(const PauliWord& a, const PauliWord& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("Pauli words act on " + std::to_string(a.n_qubits()) +
                         " and " + std::to_string(b.n_qubits()) + " qubits");
  }
}

}  // namespace

char pauli_letter(Pauli p) {
  constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  return kLetters[static_cast<int>(p)];
}

PauliWord::PauliWord(int n_qubits) : n_qubits_(n_qubits) { check_size(n_qubits); }

PauliWord::PauliWord(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
                     int phase_exponent)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask),
      phase_(static_cast<std::uint8_t>(phase_exponent & 3)) {
  check_size(n_qubits);
  if (((x_ | z_) & ~low_bits(n_qubits)) != 0) {
    throw DimensionError("Pauli mask has bits beyond qubit " + std::to_string(n_qubits - 1));
  }
}

PauliWord PauliWord::from_string(std::string_view letters) {
  int phase = 0;
  if (!letters.empty() && (letters.front() == '-' || letters.front() == '+')) {
    if (letters.front() == '-') phase = 2;
    letters.remove_prefix(1);
  }
  if (!letters.empty() && letters.front() == 'i') {
    phase += 1;
    letters.remove_prefix(1);
  }
  const int n = static_cast<int>(letters.size());
  check_size(n);
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (std::toupper(static_cast<unsigned char>(letters[q]))) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw ParseError(std::string("bad Pauli letter '") + letters[q] + "'");
    }
  }
  return {n, x, z, phase};
}

PauliWord PauliWord::single(int n_qubits, int qubit, Pauli p) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw DimensionError("qubit " + std::to_string(qubit) + " out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const bool has_x = p == Pauli::X || p == Pauli::Y;
  const bool has_z = p == Pauli::Z || p == Pauli::Y;
  return {n_qubits, has_x ? bit : 0, has_z ? bit : 0, 0};
}

std::complex<double> PauliWord::phase() const noexcept {
  constexpr std::complex<double> kPhases[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPhases[phase_];
}

Pauli PauliWord::at(int qubit) const noexcept {
  const int x = static_cast<int>((x_ >> qubit) & 1U);
  const int z = static_cast<int>((z_ >> qubit) & 1U);
  // (x,z): (0,0)=I (1,0)=X (1,1)=Y (0,1)=Z
  constexpr Pauli kTable[2][2] = {{Pauli::I, Pauli::Z}, {Pauli::X, Pauli::Y}};
  return kTable[x][z];
}

std::string PauliWord::to_string() const {
  constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
  std::string out = kPrefix[phase_];
  for (int q = 0; q < n_qubits_; ++q) out += pauli_letter(at(q));
  return out;
}

std::string PauliWord::to_sparse_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (std::uint64_t s = support(); s != 0; s &= s - 1) {
    const int q = std::countr_zero(s);
    if (!out.empty()) out += ' ';
    out += pauli_letter(at(q));
    out += std::to_string(q);
  }
  return out;
}

PauliWord multiply(const PauliWord& a, const PauliWord& b) {
  check_same_size(a, b);
  // Letters P = i^{y} X^x Z^z; moving Z^{z_a} past X^{x_b} costs (-1)^{|z_a & x_b|}.
  const std::uint64_t x = a.x_ ^ b.x_;
  const std::uint64_t z = a.z_ ^ b.z_;
  const int k = a.phase_ + b.phase_ + std::popcount(a.x_ & a.z_) + std::popcount(b.x_ & b.z_) +
                2 * std::popcount(a.z_ & b.x_) - std::popcount(x & z);
  return {a.n_qubits_, x, z, k & 3, PauliWord::Unchecked{}};
}

bool commutes(const PauliWord& a, const PauliWord& b) {
  check_same_size(a, b);
  return ((std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask())) & 1) == 0;
}

bool lexicographic_less(const PauliWord& a, const PauliWord& b) noexcept {
  if (a.n_qubits() != b.n_qubits()) return a.n_qubits() < b.n_qubits();
  const std::uint64_t diff = (a.x_mask() ^ b.x_mask()) | (a.z_mask() ^ b.z_mask());
  if (diff == 0) return false;
  const int q = std::countr_zero(diff);
  return static_cast<int>(a.at(q)) < static_cast<int>(b.at(q));
}

FlipSet::FlipSet(int n_qubits, std::uint64_t mask) : n_qubits_(n_qubits), mask_(mask) {
  check_size(n_qubits);
  if ((mask & ~low_bits(n_qubits)) != 0) {
    throw DimensionError("flip set index out of range");
  }
  for (std::uint64_t s = mask; s != 0; s &= s - 1) indices_.push_back(std::countr_zero(s));
}

FlipSet FlipSet::from_indices(int n_qubits, const std::vector<int>& indices) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= n_qubits) {
      throw DimensionError("flip set index out of range");
    }
    if (i > 0 && indices[i] <= indices[i - 1]) {
      throw ArgumentError("flip set indices must be strictly increasing");
    }
    mask |= std::uint64_t{1} << indices[i];
  }
  return {n_qubits, mask};
}

FlipSet flip_indices(const PauliWord& p) { return {p.n_qubits(), p.x_mask()}; }

}  // namespace ciqcc
