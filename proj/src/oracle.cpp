#include "symwork/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "symwork/errors.hpp"

namespace symwork::oracle {

namespace {

void check_size(int n, Eigen::Index dim, int cap) {
  if (n < 1) throw DomainError("oracle needs n >= 1");
  if (n > cap) {
    throw CapacityError("oracle limited to n <= " + std::to_string(cap) + ", got n = " +
                        std::to_string(n));
  }
  if (dim != (Eigen::Index{1} << n)) {
    throw DomainError("oracle state of " + std::to_string(n) + " particles needs dimension 2^n");
  }
}

Eigen::MatrixXd dicke_basis(int n) {
  Eigen::MatrixXd basis(Eigen::Index{1} << n, n + 1);
  for (int k = 0; k <= n; ++k) {
    const auto amps = embed_full(DickeKet(n, k), n);
    basis.col(k) = Eigen::Map<const Eigen::VectorXd>(amps.data(), static_cast<Eigen::Index>(amps.size()));
  }
  return basis;
}

}  // namespace

FullState::FullState(Eigen::VectorXcd amps, int n_particles, int cap)
    : amplitudes(std::move(amps)), n(n_particles) {
  check_size(n, amplitudes.size(), cap);
  if (std::abs(amplitudes.norm() - 1.0) > kStateTolerance) {
    throw ValidationError("full state is not normalized: norm " + std::to_string(amplitudes.norm()));
  }
}

FullDensity::FullDensity(Eigen::MatrixXcd m, int n_particles, int cap)
    : matrix(std::move(m)), n(n_particles) {
  if (matrix.rows() != matrix.cols()) throw DomainError("density matrix must be square");
  check_size(n, matrix.rows(), cap);
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance) {
    throw ValidationError("density matrix is not Hermitian");
  }
  if (std::abs(matrix.trace() - 1.0) > kStateTolerance) {
    throw ValidationError("density matrix trace is not 1");
  }
}

FullState embed(const DickeKet& ket, int cap) {
  const auto amps = embed_full(ket, cap);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
  return {std::move(v), static_cast<int>(ket.n_particles()), cap};
}

FullDensity outer(const FullState& psi) {
  return {psi.amplitudes * psi.amplitudes.adjoint(), psi.n};
}

FullDensity from_ladder(const SymmetricDensity& rho, int cap) {
  const int n = static_cast<int>(rho.n_particles());
  if (n > cap) {
    throw CapacityError("oracle limited to n <= " + std::to_string(cap) + ", got n = " +
                        std::to_string(n));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < rho.levels(); ++k) {
    const double w = rho.weight(k);
    if (w == 0.0) continue;
    const FullState psi = embed(DickeKet(n, k), cap);
    m += w * (psi.amplitudes * psi.amplitudes.adjoint());
  }
  return {std::move(m), n, cap};
}

LastFactorExpansion expand_last(const FullState& psi) {
  const Eigen::Index half = psi.amplitudes.size() / 2;
  LastFactorExpansion out{Eigen::VectorXcd(half), Eigen::VectorXcd(half)};
  for (Eigen::Index i = 0; i < half; ++i) {
    out.g_part(i) = psi.amplitudes(2 * i);
    out.e_part(i) = psi.amplitudes(2 * i + 1);
  }
  return out;
}

Reduction oracle_reduce_last(const FullDensity& rho) {
  if (rho.n < 2) throw DomainError("reducing the last factor needs n >= 2");
  const Eigen::Index half = rho.matrix.rows() / 2;
  Eigen::MatrixXcd block_g(half, half);
  Eigen::MatrixXcd block_e(half, half);
  for (Eigen::Index i = 0; i < half; ++i) {
    for (Eigen::Index j = 0; j < half; ++j) {
      block_g(i, j) = rho.matrix(2 * i, 2 * j);
      block_e(i, j) = rho.matrix(2 * i + 1, 2 * j + 1);
    }
  }
  Reduction r{block_g.trace().real(), std::nullopt, block_e.trace().real(), std::nullopt};
  if (r.p_g > kStateTolerance) r.rho_g.emplace(block_g / r.p_g, rho.n - 1);
  if (r.p_e > kStateTolerance) r.rho_e.emplace(block_e / r.p_e, rho.n - 1);
  return r;
}

double oracle_entropy(const FullDensity& rho) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lambda : solver.eigenvalues()) {
    if (lambda < -1e-9) {
      throw ValidationError("density matrix has eigenvalue " + std::to_string(lambda));
    }
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

Eigen::MatrixXd dicke_matrix(const FullDensity& rho) {
  const Eigen::MatrixXd basis = dicke_basis(rho.n);
  return (basis.transpose() * rho.matrix * basis).real();
}

double symmetric_residual(const FullDensity& rho) {
  const Eigen::MatrixXd basis = dicke_basis(rho.n);
  const Eigen::MatrixXd projector = basis * basis.transpose();
  return (rho.matrix - projector * rho.matrix * projector).cwiseAbs().maxCoeff();
}

}  // namespace symwork::oracle
