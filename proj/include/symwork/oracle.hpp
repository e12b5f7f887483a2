#pragma once

// Brute-force reference in the full 2^n product space. It shares no code path
// with the ladder formulas beyond the DickeKet embedding and is used to check
// them.

#include <Eigen/Dense>
#include <optional>

#include "symwork/dicke.hpp"
#include "symwork/thermal.hpp"

namespace symwork::oracle {

inline constexpr double kStateTolerance = 1e-12;

struct FullState {
  Eigen::VectorXcd amplitudes;
  int n;

  FullState(Eigen::VectorXcd amps, int n_particles, int cap = kDefaultOracleCap);
};

struct FullDensity {
  Eigen::MatrixXcd matrix;
  int n;

  FullDensity(Eigen::MatrixXcd m, int n_particles, int cap = kDefaultOracleCap);
};

FullState embed(const DickeKet& ket, int cap = kDefaultOracleCap);
FullDensity outer(const FullState& psi);

/// sum_k w_k |n,k><n,k| built from explicit product-state embeddings.
FullDensity from_ladder(const SymmetricDensity& rho, int cap = kDefaultOracleCap);

/// Unnormalized pieces of psi with the last factor fixed to g and to e:
/// psi = g_part (x) |g> + e_part (x) |e>.
struct LastFactorExpansion {
  Eigen::VectorXcd g_part;
  Eigen::VectorXcd e_part;
};
LastFactorExpansion expand_last(const FullState& psi);

struct Reduction {
  double p_g;
  std::optional<FullDensity> rho_g;
  double p_e;
  std::optional<FullDensity> rho_e;
};

/// Projects the last factor onto g and e. A branch whose probability is below
/// kStateTolerance is left empty.
Reduction oracle_reduce_last(const FullDensity& rho);

/// -sum lambda ln lambda over eigenvalues; eigenvalues in [-1e-9, 0) are
/// clamped, anything more negative raises ValidationError.
double oracle_entropy(const FullDensity& rho);

/// Matrix elements <n,j| rho |n,k> for j, k = 0..n.
Eigen::MatrixXd dicke_matrix(const FullDensity& rho);

/// max |rho - P rho P| with P the projector onto the symmetric subspace.
double symmetric_residual(const FullDensity& rho);

}  // namespace symwork::oracle
