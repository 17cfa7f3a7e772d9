#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "ciqcc/errors.hpp"
#include "ciqcc/statevector.hpp"

namespace ciqcc {

namespace {

using Amp = StateVector::Amplitude;

void axpy(Amp a, const StateVector& x, StateVector& y) {
  for (std::size_t k = 0; k < y.dimension(); ++k) y[k] += a * x[k];
}

}  // namespace

LanczosResult lanczos_ground_state(const QubitOperator& h, const LanczosOptions& opt) {
  const int n = h.n_qubits();
  StateVector v(n);
  const std::size_t dim = v.dimension();
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss;
  for (std::size_t k = 0; k < dim; ++k) v[k] = Amp(gauss(rng), gauss(rng));
  v.normalize();

  const int kmax = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(opt.krylov_dim), dim));
  LanczosResult best;
  for (int restart = 0; restart <= opt.max_restarts; ++restart) {
    std::vector<StateVector> basis{v};
    std::vector<double> alpha, beta;
    for (int j = 0; j < kmax; ++j) {
      StateVector w = apply_operator(h, basis[j]);
      alpha.push_back(std::real(inner(basis[j], w)));
      // Full reorthogonalization, applied twice for stability.
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) axpy(-inner(b, w), b, w);
      }
      const double nb = w.norm();
      if (j + 1 == kmax || nb < 1e-12) break;
      beta.push_back(nb);
      for (std::size_t k = 0; k < dim; ++k) w[k] /= nb;
      basis.push_back(std::move(w));
    }

    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int j = 0; j < m; ++j) {
      t(j, j) = alpha[j];
      if (j + 1 < m) t(j, j + 1) = t(j + 1, j) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t);
    const Eigen::VectorXd y = eig.eigenvectors().col(0);

    StateVector psi(n);
    psi[0] = 0.0;
    for (int j = 0; j < m; ++j) axpy(y(j), basis[j], psi);
    psi.normalize();
    const StateVector hpsi = apply_operator(h, psi);
    const double e = std::real(inner(psi, hpsi));
    double res = 0.0;
    for (std::size_t k = 0; k < dim; ++k) res += std::norm(hpsi[k] - e * psi[k]);
    res = std::sqrt(res);

    best = {e, res, restart, psi};
    if (res <= opt.residual_tol) return best;
    v = std::move(psi);
  }
  throw ConvergenceError("Lanczos did not reach residual " + std::to_string(opt.residual_tol) +
                         " (last " + std::to_string(best.residual) + ")");
}

double ground_energy(const QubitOperator& h, const LanczosOptions& opt) {
  return lanczos_ground_state(h, opt).energy;
}

}  // namespace ciqcc
