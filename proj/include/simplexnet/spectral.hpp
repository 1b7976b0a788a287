#pragma once

#include <Eigen/Dense>

#include "simplexnet/density.hpp"
#include "simplexnet/frustration.hpp"
#include "simplexnet/lattice.hpp"
#include "simplexnet/state.hpp"

namespace simplexnet {

// H = sum_{ij in T} J_ij sigma^z_i sigma^z_j + lambda sum_i sigma^x_i.
// J > 0 is antiferromagnetic; couplings are per edge (empty = all +1).
struct HamiltonianSpec {
  LatticeGraph lattice;
  std::vector<double> couplings;
  double field = 0.0;
};

// Diagonal operator plus a uniform single-bit-flip (transverse field) part,
// stored matrix-free over the 2^n computational basis.
struct SpinOperator {
  int n_qubits = 0;
  Eigen::VectorXd diag;
  double field = 0.0;

  void apply(const Eigen::VectorXd& v, Eigen::VectorXd& out) const;
  Eigen::MatrixXd to_dense() const;  // n_qubits <= 12
};

SpinOperator build_hamiltonian(const HamiltonianSpec& spec, int cap = 24);

// H_W = sum_{T*} (z_i + z_j + z_k - 1)^2 with z the bit-count operator;
// ground energy 0 on configurations with exactly one 1 per up-triangle.
SpinOperator build_hw(const LatticeGraph& lattice, int cap = 24);

// Diagonal pieces used by the operator-identity check
// sum_T sigma^z sigma^z = sum_{T*} [(s-1)^2 + (s-2)^2 - 2].
Eigen::VectorXd diag_zz_sum(const LatticeGraph& lattice,
                            const std::vector<double>& couplings = {});
Eigen::VectorXd diag_w_penalty(const LatticeGraph& lattice);     // sum (s-1)^2
Eigen::VectorXd diag_wbar_penalty(const LatticeGraph& lattice);  // sum (s-2)^2

// Lowest eigenvector at the spec's field (> 0 required), dense up to n = 12
// and restarted Lanczos beyond. Errors out when the lowest eigenvalue is
// degenerate within 1e-9 (field too small to resolve numerically).
PureState ground_state_small_lambda(const HamiltonianSpec& spec);

// First-order degenerate perturbation theory: diagonalizes sum sigma^x
// projected onto the classical ground manifold and returns the eigenvector
// continuously connected to the lambda -> 0+ ground state.
PureState degenerate_pt_ground(const HamiltonianSpec& spec, const GroundManifold& manifold);

}  // namespace simplexnet
