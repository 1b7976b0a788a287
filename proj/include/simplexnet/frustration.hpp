#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simplexnet/lattice.hpp"
#include "simplexnet/state.hpp"

namespace simplexnet {

// All classical configurations of minimum edge energy sum_{ij} J_ij s_i s_j,
// s = +-1. Energies are exact integers; the list is sorted and duplicate-free.
struct GroundManifold {
  LatticeGraph lattice;
  std::vector<std::uint64_t> configurations;
  long long energy = 0;
};

// Exhaustive scan over all 2^n configurations, n <= 26. `couplings` holds one
// integer J per lattice edge (index-aligned); empty means all +1.
GroundManifold enumerate_ground(const LatticeGraph& lattice,
                                const std::vector<int>& couplings = {});

// |psi0> = M^{-1/2} sum_i |psi_i> over the manifold configurations.
PureState equal_superposition(const GroundManifold& manifold);

struct WStructureReport {
  bool pass = true;
  // (configuration, triangle index) pairs whose restriction is monochromatic.
  std::vector<std::pair<std::uint64_t, int>> witnesses;
};

// Checks every basis state with |amplitude| > threshold against every
// up-triangle: the restriction must not be 000 or 111.
WStructureReport verify_w_structure(const PureState& state, const LatticeGraph& lattice,
                                    double threshold = 1e-10);
WStructureReport verify_w_structure(const SparseState& state, const LatticeGraph& lattice,
                                    double threshold = 1e-10);

struct WannierPoint {
  int side = 0;
  int n = 0;
  std::uint64_t degeneracy = 0;
  double exponent = 0.0;  // log2(M) / n
};

// Finite-patch exponent estimates only; open-boundary patches are expected to
// deviate from the thermodynamic value and no extrapolation is performed.
std::vector<WannierPoint> wannier_estimate(const std::vector<int>& sides);

}  // namespace simplexnet
