#pragma once

#include <vector>

#include "simplexnet/density.hpp"
#include "simplexnet/lattice.hpp"
#include "simplexnet/simplex.hpp"
#include "simplexnet/state.hpp"

namespace simplexnet {

// One tensor placed on a tuple of sites; local bit k of the amplitude index
// belongs to sites[k]. Entries need not be normalized (the Exact Cover
// clause tensors are 0/1 indicators).
struct PlacedTensor {
  std::vector<int> sites;
  std::vector<cplx> amps;  // length 2^sites.size()
};

// Simplex states on up-triangles (or checked squares) joined by per-site
// copy projectors: the projector forces every incident ancilla index and the
// physical index to agree, so the contracted amplitude of configuration x is
// the product of simplex amplitudes at the restrictions of x.
struct NetworkSpec {
  int n_sites = 0;
  std::vector<PlacedTensor> tensors;

  static NetworkSpec from_lattice(const LatticeGraph& lattice,
                                  const std::vector<SimplexState>& per_triangle);
  static NetworkSpec uniform(const LatticeGraph& lattice, const SimplexState& simplex);
  static NetworkSpec from_square_network(const SquareNetworkGraph& net,
                                         const SimplexState& simplex);
};

// Diagonal contraction: enumerates the nonzero support directly. Terms come
// back normalized with the unnormalized squared norm in raw_norm2 (the model
// count for 0/1 tensors). Throws when every amplitude vanishes.
SparseState contract_diagonal(const NetworkSpec& spec);
PureState contract_diagonal_dense(const NetworkSpec& spec);

// Streaming reduced density matrix of a region of the contracted state,
// normalized to trace 1. Handles systems too large for a dense state vector.
ReducedDensity contract_region_density(const NetworkSpec& spec, const Region& region);

}  // namespace simplexnet
