#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ciqcc {

/// Spatial-orbital integrals. Two-body values are chemists' notation (pq|rs).
class MolecularIntegrals {
 public:
  MolecularIntegrals() = default;
  MolecularIntegrals(int n_spatial_orbitals, int n_electrons, int ms2);

  int n_orbitals() const noexcept { return n_; }
  int n_electrons() const noexcept { return n_electrons_; }
  int ms2() const noexcept { return ms2_; }
  double core_energy() const noexcept { return core_energy_; }
  void set_core_energy(double e) noexcept { core_energy_ = e; }

  double one_body(int p, int q) const { return h1_[index(p, q)]; }
  double two_body(int p, int q, int r, int s) const { return h2_[index(p, q, r, s)]; }

  /// Sets h_pq and h_qp.
  void set_one_body(int p, int q, double v);
  /// Sets all 8 symmetry images of (pq|rs).
  void set_two_body(int p, int q, int r, int s, double v);

 private:
  std::size_t index(int p, int q) const {
    return static_cast<std::size_t>(p) * n_ + q;
  }
  std::size_t index(int p, int q, int r, int s) const {
    return ((static_cast<std::size_t>(p) * n_ + q) * n_ + r) * n_ + s;
  }

  int n_ = 0;
  int n_electrons_ = 0;
  int ms2_ = 0;
  double core_energy_ = 0.0;
  std::vector<double> h1_;
  std::vector<double> h2_;
};

/// Reads an FCIDUMP: a `&FCI ... /` (or `&END`) namelist with NORB, NELEC
/// and MS2, then `value i j k l` lines with 1-based indices. Orbital-energy
/// lines (`i 0 0 0`) are ignored. Throws ParseError with the line number.
MolecularIntegrals parse_fcidump(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace ciqcc
