#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "simplexnet/frustration.hpp"
#include "simplexnet/lattice.hpp"
#include "simplexnet/simplex.hpp"
#include "simplexnet/state.hpp"

namespace simplexnet {

inline constexpr const char* kVersion = "0.1.0";

// Deterministic provenance line written at the top of every experiment file.
std::string provenance_header(const std::string& experiment, const std::string& config);

// The five simplex rows of the outward-entangling-power table, in order:
// GHZ, W, W+111, W+Wbar, W+Wbar+111 (equal-weight mixes).
std::vector<std::pair<std::string, SimplexState>> simplex_catalog();

struct EntanglingPowerRow {
  int side = 0;
  RegionPlacement placement = RegionPlacement::Centered;
  std::string simplex;
  int n_A = 0;
  double entropy = 0.0;
};

struct EntanglingPowerCheck {
  std::string simplex;
  std::array<double, 3> targets{};  // reference values for n_A = 3, 6, 10
  int best_side = -1;               // side with the smallest maximal residual
  double best_residual = 0.0;
  bool within_tolerance = false;    // best residual <= 0.05
};

struct EntanglingPowerReport {
  std::vector<int> sides;
  RegionPlacement placement = RegionPlacement::Centered;
  std::vector<EntanglingPowerRow> rows;
  std::vector<EntanglingPowerCheck> checks;

  double entropy_of(int side, const std::string& simplex, int n_A) const;
  std::string to_csv() const;
};

// Assigns each catalog simplex to every up-triangle of each patch, contracts,
// and reports the region entropies for n_A = 3, 6, 10 (where the region fits:
// n_A = 10 needs side >= 4).
EntanglingPowerReport run_entangling_power(const std::vector<int>& sides,
                        RegionPlacement placement = RegionPlacement::Centered);

struct AmplitudeClass {
  double magnitude = 0.0;  // mean over members
  int size = 0;
  bool uniform_sign = true;
  double example = 0.0;    // gauge-fixed amplitude of the lowest-index member
};

struct SixSpinReport {
  double lambda = 1e-3;
  PureState small_lambda_state;
  PureState pt_state;
  double method_overlap = 0.0;
  std::vector<AmplitudeClass> classes;  // descending magnitude, separation > 1e-3
  double support_leakage = 0.0;         // max |amplitude| outside the classical manifold
  bool w_structure_pass = false;
  // The thirteen reference kets of the six-spin ground state, with the
  // computed (gauge-fixed) small-lambda amplitudes beside them.
  std::vector<std::pair<std::string, double>> listed_states;

  std::string to_text() const;
};

SixSpinReport run_six_spin();

struct ScanConfig {
  int grid_resolution = 3;   // grid points per coefficient in [-1, 1]
  std::uint64_t seed = 7;
  int restarts = 1;
  int iteration_cap = 4000;  // refinement evaluation budget
  double tolerance = 1e-6;   // stop when a full refinement pass gains less
};

struct ScanEval {
  std::array<double, 5> coeffs{};
  double entropy = 0.0;
};

struct ScanResult {
  std::array<double, 5> best_coeffs{};
  double best_entropy = 0.0;
  std::vector<ScanEval> trace;
  bool converged = false;
  // Max coefficient distance to the a0=a2=a3=a4=-a1 pattern after sign and
  // weight-reversal gauge fixing.
  double pattern_residual = 0.0;
  // Every evaluated point within 1e-9 of the best entropy; the maximum on
  // this network is degenerate and the reference pattern is one maximizer.
  std::vector<std::array<double, 5>> maximizers;
  bool pattern_attains_max = false;

  std::string to_csv(const ScanConfig& config) const;
};

// Entropy of the inner square of the 24-spin network for one symmetric
// 4-qubit simplex; returns 0 when the network contracts to the zero state.
double scan4_entropy(const std::array<double, 5>& coeffs);

// Coarse deterministic grid followed by coordinate-wise golden-section
// refinement and seeded restarts.
ScanResult run_scan4(const ScanConfig& config);

// -1 on horizontal (same patch row) edges, +1 on the diagonal directions.
std::vector<int> anisotropic_couplings(const LatticeGraph& patch);

struct AnisotropyReport {
  // Local patterns are written in (bottom-left, bottom-right, top) site order.
  std::vector<std::string> triangle_patterns;  // observed on the single triangle
  std::uint64_t degeneracy = 0;
  long long energy = 0;
  bool patterns_match = false;      // exactly {001, 110}
  bool unfrustrated = false;        // E0 equals the sum of per-edge minima
  bool six_site_patterns_match = false;
  bool w_structure_pass = false;

  std::string to_text() const;
};

AnisotropyReport run_anisotropy();

}  // namespace simplexnet
