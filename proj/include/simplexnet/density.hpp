#pragma once

#include <Eigen/Dense>

#include "simplexnet/lattice.hpp"
#include "simplexnet/state.hpp"

namespace simplexnet {

// Reduced density matrix of a region: Hermitian, PSD, trace 1.
struct ReducedDensity {
  Region region;
  Eigen::MatrixXcd matrix;

  ReducedDensity(Region r, Eigen::MatrixXcd m);  // checks hermiticity and trace
};

// Traces out the complement of `region`. Region cap: 14 sites.
ReducedDensity partial_trace(const PureState& state, const Region& region);

// Von Neumann entropy in ebits (base 2); eigenvalues below 1e-14 are
// clamped to zero before the log.
double entropy_bits(const ReducedDensity& rho);

}  // namespace simplexnet
