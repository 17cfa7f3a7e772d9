#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "ciqcc/fcidump.hpp"

namespace ciqcc {

struct LadderOp {
  int mode = 0;
  bool creation = false;

  friend auto operator<=>(const LadderOp&, const LadderOp&) = default;
};

/// Product of ladder operators, applied right to left as written.
using FermionTerm = std::vector<LadderOp>;

/// Complex-weighted sum of ladder-operator products; the empty product is
/// the constant term. Products are stored as given, not normal ordered.
class FermionOperator {
 public:
  using Coefficient = std::complex<double>;

  void add(const FermionTerm& term, Coefficient c);
  void add_constant(Coefficient c) { add({}, c); }

  const std::map<FermionTerm, Coefficient>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Largest mode index + 1 (0 for a constant operator).
  int mode_count() const noexcept;

  /// Reverses each product, swaps creation/annihilation, conjugates.
  FermionOperator adjoint() const;

  /// Term-wise comparison within `tol`; missing terms count as zero.
  bool approx_equal(const FermionOperator& other, double tol) const;

 private:
  std::map<FermionTerm, Coefficient> terms_;
};

/// Spin-orbital index for interleaved ordering (alpha0, beta0, alpha1, ...).
constexpr int spin_orbital(int spatial, int spin) { return 2 * spatial + spin; }

/// E_core + Σ h_pq a†_p a_q + ½ Σ (pq|rs) a†_p a†_r a_s a_q over spin orbitals.
FermionOperator build_second_quantized(const MolecularIntegrals& m);

/// Ladder-product shorthand "3^ 1" (3 creation, 1 annihilation).
FermionTerm parse_fermion_term(const std::string& spec);

}  // namespace ciqcc
