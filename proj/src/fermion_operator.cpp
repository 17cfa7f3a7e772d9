#include "ciqcc/fermion_operator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ciqcc/errors.hpp"

namespace ciqcc {

void FermionOperator::add(const FermionTerm& term, Coefficient c) {
  auto [it, inserted] = terms_.try_emplace(term, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Coefficient{}) terms_.erase(it);
  }
}

int FermionOperator::mode_count() const noexcept {
  int m = 0;
  for (const auto& [term, c] : terms_) {
    for (const auto& op : term) m = std::max(m, op.mode + 1);
  }
  return m;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out;
  for (const auto& [term, c] : terms_) {
    FermionTerm t(term.rbegin(), term.rend());
    for (auto& op : t) op.creation = !op.creation;
    out.add(t, std::conj(c));
  }
  return out;
}

bool FermionOperator::approx_equal(const FermionOperator& other, double tol) const {
  auto check = [tol](const FermionOperator& a, const FermionOperator& b) {
    for (const auto& [term, c] : a.terms_) {
      auto it = b.terms_.find(term);
      const Coefficient d = it == b.terms_.end() ? Coefficient{} : it->second;
      if (std::abs(c - d) > tol) return false;
    }
    return true;
  };
  return check(*this, other) && check(other, *this);
}

FermionOperator build_second_quantized(const MolecularIntegrals& m) {
  FermionOperator op;
  const int n = m.n_orbitals();
  if (m.core_energy() != 0.0) op.add_constant(m.core_energy());
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double h = m.one_body(p, q);
      if (h == 0.0) continue;
      for (int s = 0; s < 2; ++s) {
        op.add({{spin_orbital(p, s), true}, {spin_orbital(q, s), false}}, h);
      }
    }
  }
  // Physicists' ordering: a†_{pσ} a†_{rτ} a_{sτ} a_{qσ} weighted by (pq|rs).
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          const double g = m.two_body(p, q, r, s);
          if (g == 0.0) continue;
          for (int sig = 0; sig < 2; ++sig) {
            for (int tau = 0; tau < 2; ++tau) {
              const int a = spin_orbital(p, sig);
              const int b = spin_orbital(r, tau);
              const int c = spin_orbital(s, tau);
              const int d = spin_orbital(q, sig);
              if (a == b || c == d) continue;  // a†a† or aa on one mode vanishes
              op.add({{a, true}, {b, true}, {c, false}, {d, false}}, 0.5 * g);
            }
          }
        }
      }
    }
  }
  return op;
}

FermionTerm parse_fermion_term(const std::string& spec) {
  FermionTerm term;
  std::istringstream in(spec);
  std::string tok;
  while (in >> tok) {
    LadderOp op;
    if (tok.back() == '^') {
      op.creation = true;
      tok.pop_back();
    }
    try {
      std::size_t used = 0;
      op.mode = std::stoi(tok, &used);
      if (used != tok.size() || op.mode < 0) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("bad ladder operator '" + tok + "'");
    }
    term.push_back(op);
  }
  return term;
}

}  // namespace ciqcc
