#include "ciqcc/mappings.hpp"

#include <algorithm>
#include <map>

#include "ciqcc/errors.hpp"

namespace ciqcc {

std::string to_string(MappingKind kind) {
  switch (kind) {
    case MappingKind::JW: return "jw";
    case MappingKind::BK: return "bk";
    case MappingKind::JKMN: return "jkmn";
  }
  return "?";
}

MappingKind parse_mapping(std::string_view name) {
  if (name == "jw") return MappingKind::JW;
  if (name == "bk") return MappingKind::BK;
  if (name == "jkmn") return MappingKind::JKMN;
  throw ArgumentError("unknown mapping '" + std::string(name) + "' (jw|bk|jkmn)");
}

int min_candidate_rank(MappingKind kind) { return kind == MappingKind::JKMN ? 0 : 1; }

QubitOperator MajoranaSet::number_operator(int mode) const {
  const PauliWord prod = gamma(2 * mode) * gamma(2 * mode + 1);
  return QubitOperator::identity(n_modes, 0.5) +
         QubitOperator::from_word(prod, std::complex<double>(0.0, 0.5));
}

namespace {

std::uint64_t mask_of(const std::vector<int>& qubits) {
  std::uint64_t m = 0;
  for (int q : qubits) m |= std::uint64_t{1} << q;
  return m;
}

void check_modes(int n) {
  if (n < 1 || n > kMaxQubits) throw DimensionError("mode count outside [1, 64]");
}

}  // namespace

MajoranaSet jw_majoranas(int n_modes) {
  check_modes(n_modes);
  MajoranaSet m{n_modes, {}};
  for (int j = 0; j < n_modes; ++j) {
    const std::uint64_t below = (std::uint64_t{1} << j) - 1;
    const std::uint64_t bit = std::uint64_t{1} << j;
    m.gammas.emplace_back(n_modes, bit, below);        // X_j Z_{<j}
    m.gammas.emplace_back(n_modes, bit, below | bit);  // Y_j Z_{<j}
  }
  return m;
}

BravyiKitaevSets bk_sets(int mode, int n_modes) {
  // Qubit i stores the parity of modes (i + 1 - lowbit(i + 1), i].
  auto lowbit = [](int v) { return v & -v; };
  BravyiKitaevSets s;
  for (int i = mode | (mode + 1); i < n_modes; i |= i + 1) s.update.push_back(i);
  for (int k = mode; k > 0; k -= lowbit(k)) s.parity.push_back(k - 1);
  const int start = mode + 1 - lowbit(mode + 1);
  for (int k = mode; k > start; k -= lowbit(k)) s.flip.push_back(k - 1);
  for (int q : s.parity) {
    if (std::find(s.flip.begin(), s.flip.end(), q) == s.flip.end()) s.remainder.push_back(q);
  }
  return s;
}

MajoranaSet bk_majoranas(int n_modes) {
  check_modes(n_modes);
  MajoranaSet m{n_modes, {}};
  for (int j = 0; j < n_modes; ++j) {
    const BravyiKitaevSets s = bk_sets(j, n_modes);
    const std::uint64_t bit = std::uint64_t{1} << j;
    const std::uint64_t up = mask_of(s.update);
    m.gammas.emplace_back(n_modes, up | bit, mask_of(s.parity));           // X_U X_j Z_P
    m.gammas.emplace_back(n_modes, up | bit, mask_of(s.remainder) | bit);  // X_U Y_j Z_R
  }
  return m;
}

MajoranaSet build_jkmn_majoranas(int n_modes) {
  check_modes(n_modes);
  const int n = n_modes;
  // Leaves in left-to-right (depth-first, X<Y<Z) order.
  std::vector<PauliWord> leaves;
  std::vector<std::pair<int, Pauli>> path;
  auto visit = [&](auto&& self, int node) -> void {
    constexpr Pauli kLegs[] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (int leg = 0; leg < 3; ++leg) {
      path.emplace_back(node, kLegs[leg]);
      const int child = 3 * node + 1 + leg;
      if (child < n) {
        self(self, child);
      } else {
        PauliWord w(n);
        for (auto [q, p] : path) w = w * PauliWord::single(n, q, p);
        leaves.push_back(w.canonical());
      }
      path.pop_back();
    }
  };
  visit(visit, 0);
  leaves.pop_back();  // all-Z leaf

  std::uint64_t relabel = 0;
  for (int i = 0; i < n; ++i) {
    const PauliWord prod = leaves[2 * i] * leaves[2 * i + 1];
    relabel |= prod.x_mask() & ~prod.z_mask();
  }
  for (auto& w : leaves) {
    // Swap X and Z letters on the relabelled qubits (Y letters kept).
    const std::uint64_t x = w.x_mask(), z = w.z_mask();
    const std::uint64_t only_x = x & ~z & relabel;
    const std::uint64_t only_z = z & ~x & relabel;
    w = PauliWord(n, (x & ~only_x) | only_z, (z & ~only_z) | only_x);
  }

  std::vector<PauliWord> gammas(2 * static_cast<std::size_t>(n));
  std::vector<bool> assigned(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    PauliWord a = leaves[2 * i];
    const PauliWord& b = leaves[2 * i + 1];
    const PauliWord prod = a * b;
    if (prod.x_mask() != 0) throw std::logic_error("ternary-tree pair is not diagonal");
    // X/Y content differs on exactly one qubit.
    const std::uint64_t differ = (a.x_mask() & ~a.z_mask()) ^ (b.x_mask() & ~b.z_mask());
    if (std::popcount(differ) != 1) throw std::logic_error("ternary-tree pair differs on several qubits");
    const int q = std::countr_zero(differ);
    if (assigned[q]) throw std::logic_error("two ternary-tree pairs share a qubit");
    assigned[q] = true;
    if (a.at(q) == Pauli::Y) a = a.negated();
    gammas[2 * q] = a;
    gammas[2 * q + 1] = b;
  }
  return {n, std::move(gammas)};
}

MajoranaSet majoranas(MappingKind kind, int n_modes) {
  switch (kind) {
    case MappingKind::JW: return jw_majoranas(n_modes);
    case MappingKind::BK: return bk_majoranas(n_modes);
    case MappingKind::JKMN: return build_jkmn_majoranas(n_modes);
  }
  throw ArgumentError("unknown mapping");
}

QubitOperator map_fermion(const FermionOperator& f, const MajoranaSet& m, double prune_eps) {
  const int n = m.n_modes;
  if (f.mode_count() > n) {
    throw DimensionError("fermion operator uses mode " + std::to_string(f.mode_count() - 1) +
                         " but only " + std::to_string(n) + " modes are mapped");
  }
  using C = std::complex<double>;
  // a = ½(γ_even + iγ_odd), a† = ½(γ_even − iγ_odd)
  std::vector<QubitOperator> ladder(2 * static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    for (int dagger = 0; dagger < 2; ++dagger) {
      OperatorBuilder b(n);
      b.add(m.gamma(2 * p), 0.5);
      b.add(m.gamma(2 * p + 1), dagger ? C(0, -0.5) : C(0, 0.5));
      ladder[2 * p + dagger] = b.build();
    }
  }
  OperatorBuilder acc(n);
  for (const auto& [term, c] : f.terms()) {
    QubitOperator prod = QubitOperator::identity(n, c);
    for (const auto& op : term) prod = prod * ladder[2 * op.mode + (op.creation ? 1 : 0)];
    acc.add(prod);
  }
  return acc.build(prune_eps);
}

QubitOperator map_jw(const FermionOperator& f, int n) { return map_fermion(f, jw_majoranas(n)); }
QubitOperator map_bk(const FermionOperator& f, int n) { return map_fermion(f, bk_majoranas(n)); }
QubitOperator map_jkmn(const FermionOperator& f, int n) {
  return map_fermion(f, build_jkmn_majoranas(n));
}
QubitOperator map_operator(const FermionOperator& f, int n, MappingKind kind) {
  return map_fermion(f, majoranas(kind, n));
}

std::vector<bool> bk_encode(const std::vector<bool>& occ) {
  const int n = static_cast<int>(occ.size());
  std::vector<bool> bits(occ.size(), false);
  for (int i = 0; i < n; ++i) {
    const int low = (i + 1) & -(i + 1);
    bool parity = false;
    for (int j = i + 1 - low; j <= i; ++j) parity = parity != occ[j];
    bits[i] = parity;
  }
  return bits;
}

int OccupationVector::electron_count() const {
  return static_cast<int>(std::count(bits.begin(), bits.end(), true));
}

OccupationVector aufbau_occupation(int n_spatial, int n_electrons, int ms2) {
  if (n_electrons < 0 || n_electrons > 2 * n_spatial || (n_electrons + ms2) % 2 != 0 ||
      std::abs(ms2) > n_electrons) {
    throw ArgumentError("inconsistent electron count / MS2");
  }
  const int n_alpha = (n_electrons + ms2) / 2;
  const int n_beta = n_electrons - n_alpha;
  OccupationVector occ{std::vector<bool>(2 * static_cast<std::size_t>(n_spatial), false)};
  for (int p = 0; p < n_alpha; ++p) occ.bits[spin_orbital(p, 0)] = true;
  for (int p = 0; p < n_beta; ++p) occ.bits[spin_orbital(p, 1)] = true;
  return occ;
}

CliffordCircuit reference_circuit(const OccupationVector& occ, MappingKind kind) {
  const int n = static_cast<int>(occ.bits.size());
  CliffordCircuit c(n);
  switch (kind) {
    case MappingKind::JW:
      for (int q = 0; q < n; ++q) {
        if (occ.bits[q]) c.x(q);
      }
      break;
    case MappingKind::BK: {
      const std::vector<bool> bits = bk_encode(occ.bits);
      for (int q = 0; q < n; ++q) {
        if (bits[q]) c.x(q);
      }
      break;
    }
    case MappingKind::JKMN: {
      const MajoranaSet m = build_jkmn_majoranas(n);
      PauliWord prod(n);
      for (int i = 0; i < n; ++i) {
        if (occ.bits[i]) prod = prod * m.gamma(2 * i);
      }
      for (int q = 0; q < n; ++q) {
        const Pauli p = prod.at(q);
        if (p == Pauli::X) c.x(q);
        if (p == Pauli::Y) c.y(q);
      }
      break;
    }
  }
  return c;
}

}  // namespace ciqcc
