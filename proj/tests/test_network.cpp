#include <doctest.h>

#include <cmath>
#include <random>

#include "simplexnet/density.hpp"
#include "simplexnet/engine.hpp"
#include "simplexnet/frustration.hpp"
#include "simplexnet/network.hpp"

using namespace simplexnet;

namespace {

SimplexState wwbar() { return mix({{w_state(), 1.0}, {wbar_state(), 1.0}}); }

// Exchange-asymmetric random real simplex with full support; exercises the
// leg ordering of both contraction paths.
SimplexState random_simplex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.2, 1.0);
  std::vector<cplx> amps(8);
  for (auto& a : amps) a = uni(rng) * (rng() % 2 ? 1.0 : -1.0);
  return SimplexState(3, std::move(amps), "random");
}

}  // namespace

TEST_CASE("single triangle with W+Wbar contracts to the frustrated state") {
  const NetworkSpec spec = NetworkSpec::uniform(build_triangular_patch(1), wwbar());
  const SparseState state = contract_diagonal(spec);
  REQUIRE(state.terms.size() == 6);
  const double r6 = 1.0 / std::sqrt(6.0);
  for (const auto& [x, a] : state.terms) {
    CHECK(x != 0);
    CHECK(x != 7);
    CHECK(std::abs(a - cplx(r6)) < 1e-12);
  }
}

TEST_CASE("GHZ simplices give global ferromagnetic order") {
  for (int side : {2, 3}) {
    const LatticeGraph patch = build_triangular_patch(side);
    const NetworkSpec spec = NetworkSpec::uniform(patch, ghz_state(3));
    const SparseState state = contract_diagonal(spec);
    REQUIRE(state.terms.size() == 2);
    CHECK(state.terms[0].first == 0);
    CHECK(state.terms[1].first == (std::uint64_t{1} << patch.n_sites) - 1);
    CHECK(std::abs(state.terms[0].second - cplx(1.0 / std::sqrt(2.0))) < 1e-12);
  }
}

TEST_CASE("support characterization of W and W+Wbar networks") {
  const LatticeGraph six = build_six_site_example();
  const SparseState w_net = contract_diagonal(NetworkSpec::uniform(six, w_state()));
  for (const auto& [x, a] : w_net.terms) {
    for (const auto& t : six.up_triangles) {
      CHECK(bit_at(x, t[0]) + bit_at(x, t[1]) + bit_at(x, t[2]) == 1);
    }
  }
  const SparseState both = contract_diagonal(NetworkSpec::uniform(six, wwbar()));
  for (const auto& [x, a] : both.terms) {
    for (const auto& t : six.up_triangles) {
      const int ones = bit_at(x, t[0]) + bit_at(x, t[1]) + bit_at(x, t[2]);
      CHECK(ones >= 1);
      CHECK(ones <= 2);
    }
  }
}

TEST_CASE("W+Wbar network equals the equal superposition of the ground manifold") {
  for (int side : {1, 2, 3, 4}) {
    const LatticeGraph patch = build_triangular_patch(side);
    const PureState from_network =
        contract_diagonal_dense(NetworkSpec::uniform(patch, wwbar()));
    const PureState from_manifold = equal_superposition(enumerate_ground(patch));
    for (Eigen::Index i = 0; i < from_network.amplitudes.size(); ++i) {
      CHECK(std::abs(from_network.amplitudes(i) - from_manifold.amplitudes(i)) < 1e-10);
    }
  }
}

TEST_CASE("inconsistent simplices contract to the zero state") {
  NetworkSpec spec;
  spec.n_sites = 3;
  std::vector<cplx> only_ones(8, 0.0);
  only_ones[7] = 1.0;
  std::vector<cplx> only_zeros(8, 0.0);
  only_zeros[0] = 1.0;
  spec.tensors.push_back({{0, 1, 2}, only_ones});
  spec.tensors.push_back({{0, 1, 2}, only_zeros});
  CHECK_THROWS_AS((void)contract_diagonal(spec), std::runtime_error);
}

TEST_CASE("pairwise engine reproduces the diagonal contraction") {
  // Single W triangle: projectors are identity-like wires.
  const NetworkSpec tri = NetworkSpec::uniform(build_triangular_patch(1), w_state());
  const PureState w_physical = contract_pairwise(tri, plan_order(tri));
  const double r3 = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(w_physical.amplitude(1) - cplx(r3)) < 1e-12);
  CHECK(std::abs(w_physical.amplitude(2) - cplx(r3)) < 1e-12);
  CHECK(std::abs(w_physical.amplitude(4) - cplx(r3)) < 1e-12);
  CHECK(std::abs(w_physical.amplitude(7)) < 1e-14);

  // Six-site lattice with mixed assignments, including asymmetric tensors.
  const LatticeGraph six = build_six_site_example();
  std::mt19937_64 rng(11);
  const std::vector<SimplexState> assignment{random_simplex(rng), wwbar(),
                                             random_simplex(rng)};
  const NetworkSpec spec = NetworkSpec::from_lattice(six, assignment);
  const PureState diag = contract_diagonal_dense(spec);
  const PureState pair = contract_pairwise(spec, plan_order(spec));
  for (Eigen::Index i = 0; i < 64; ++i) {
    CHECK(std::abs(diag.amplitudes(i) - pair.amplitudes(i)) < 1e-10);
  }
}

TEST_CASE("both contraction routes agree for every catalog simplex") {
  const std::vector<SimplexState> catalog = {
      ghz_state(3), w_state(), wbar_state(), wwbar(),
      equal_superposition_simplex(3, {"001", "010", "100", "111"}, "W+111"),
      equal_superposition_simplex(3, {"001", "010", "100", "011", "101", "110", "111"},
                                  "W+Wbar+111")};
  for (int side : {1, 2, 3}) {
    const LatticeGraph patch = build_triangular_patch(side);
    for (const SimplexState& simplex : catalog) {
      const NetworkSpec spec = NetworkSpec::uniform(patch, simplex);
      const PureState diag = contract_diagonal_dense(spec);
      const PureState pair = contract_pairwise(spec, plan_order(spec));
      CHECK((diag.amplitudes - pair.amplitudes).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("planner output shape and instrumentation") {
  const NetworkSpec tri = NetworkSpec::uniform(build_triangular_patch(1), w_state());
  const ContractionOrder tri_order = plan_order(tri);
  CHECK(tri_order.steps.size() == 3);  // one simplex + three projectors

  const LatticeGraph six = build_six_site_example();
  const NetworkSpec spec = NetworkSpec::uniform(six, wwbar());
  ContractStats stats;
  (void)contract_pairwise(spec, plan_order(spec), kDefaultMemCap, &stats);
  CHECK(stats.peak_elems <= (std::size_t{1} << 6));  // never above six open legs

  const SquareNetworkGraph square = build_square_network();
  const NetworkSpec sq_spec = NetworkSpec::from_square_network(square, ghz_state(4));
  const ContractionOrder sq_order = plan_order(sq_spec);
  CHECK(sq_order.steps.size() == 12 + 24 - 1);  // covers all squares and sites
}

TEST_CASE("memory cap errors are deterministic") {
  const NetworkSpec spec =
      NetworkSpec::uniform(build_triangular_patch(4), wwbar());
  const ContractionOrder order = plan_order(spec);
  CHECK_THROWS_AS((void)contract_pairwise(spec, order, std::size_t{1} << 10),
                  std::runtime_error);
  CHECK_THROWS_AS((void)contract_pairwise(spec, order, std::size_t{1} << 10),
                  std::runtime_error);

  ContractionOrder bad;
  bad.steps.push_back({0, 99});
  CHECK_THROWS_AS((void)contract_pairwise(spec, bad), std::invalid_argument);
}

TEST_CASE("streaming region density matches the dense partial trace") {
  const LatticeGraph patch = build_triangular_patch(3);
  std::mt19937_64 rng(23);
  std::vector<SimplexState> assignment;
  for (std::size_t t = 0; t < patch.up_triangles.size(); ++t) {
    assignment.push_back(t % 2 == 0 ? random_simplex(rng) : wwbar());
  }
  const NetworkSpec spec = NetworkSpec::from_lattice(patch, assignment);
  for (const Region& region :
       {triangular_core_region(patch, 2), make_region(10, {0, 4, 7, 9})}) {
    const ReducedDensity streamed = contract_region_density(spec, region);
    const ReducedDensity dense = partial_trace(contract_diagonal_dense(spec), region);
    CHECK((streamed.matrix - dense.matrix).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("network spec validation") {
  const LatticeGraph six = build_six_site_example();
  CHECK_THROWS_AS((void)NetworkSpec::from_lattice(six, {w_state()}), std::invalid_argument);
  CHECK_THROWS_AS((void)NetworkSpec::from_lattice(
                      six, std::vector<SimplexState>(3, ghz_state(4))),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)NetworkSpec::from_square_network(build_square_network(), ghz_state(3)),
      std::invalid_argument);
}

TEST_CASE("raw squared norm counts models for indicator tensors") {
  // Clause-style 0/1 tensors: the unnormalized norm^2 is the solution count.
  NetworkSpec spec;
  spec.n_sites = 3;
  std::vector<cplx> indicator(8, 0.0);
  indicator[1] = indicator[2] = indicator[4] = 1.0;
  spec.tensors.push_back({{0, 1, 2}, indicator});
  const SparseState state = contract_diagonal(spec);
  CHECK(state.raw_norm2 == doctest::Approx(3.0).epsilon(1e-12));
}
