#include <doctest.h>

#include <cmath>

#include "simplexnet/frustration.hpp"

using namespace simplexnet;

namespace {

// Independent energy oracle: spin products summed edge by edge.
long long edge_energy(const LatticeGraph& g, std::uint64_t x) {
  long long e = 0;
  for (auto [i, j] : g.edges) {
    const int si = bit_at(x, i) ? -1 : 1;
    const int sj = bit_at(x, j) ? -1 : 1;
    e += si * sj;
  }
  return e;
}

}  // namespace

TEST_CASE("single triangle ground manifold") {
  const GroundManifold m = enumerate_ground(build_triangular_patch(1));
  CHECK(m.energy == -1);
  CHECK(m.configurations.size() == 6);
  for (std::uint64_t x : m.configurations) {
    CHECK(x != 0);
    CHECK(x != 7);
  }
}

TEST_CASE("six-site manifold against the exhaustive oracle") {
  const LatticeGraph six = build_six_site_example();
  const GroundManifold m = enumerate_ground(six);

  long long best = 1'000'000;
  std::vector<std::uint64_t> expected;
  for (std::uint64_t x = 0; x < 64; ++x) {
    const long long e = edge_energy(six, x);
    if (e < best) {
      best = e;
      expected.clear();
    }
    if (e == best) expected.push_back(x);
  }
  CHECK(m.energy == best);
  CHECK(m.energy == -3);
  CHECK(m.configurations == expected);
  CHECK(m.configurations.size() == 26);  // frozen regression value
}

TEST_CASE("ferromagnet has the two aligned ground states") {
  const LatticeGraph patch = build_triangular_patch(2);
  const GroundManifold m =
      enumerate_ground(patch, std::vector<int>(patch.edges.size(), -1));
  CHECK(m.configurations == std::vector<std::uint64_t>{0, 63});
}

TEST_CASE("manifold configurations are sorted and duplicate-free") {
  const GroundManifold m = enumerate_ground(build_triangular_patch(3));
  for (std::size_t i = 1; i < m.configurations.size(); ++i) {
    CHECK(m.configurations[i - 1] < m.configurations[i]);
  }
  CHECK_THROWS_AS((void)enumerate_ground(build_triangular_patch(1), {1, 1}),
                  std::invalid_argument);
}

TEST_CASE("equal superposition") {
  const GroundManifold tri = enumerate_ground(build_triangular_patch(1));
  const PureState psi0 = equal_superposition(tri);
  const double r6 = 1.0 / std::sqrt(6.0);
  for (std::uint64_t x = 1; x < 7; ++x) {
    CHECK(std::abs(psi0.amplitude(x) - cplx(r6)) < 1e-12);
  }
  CHECK(psi0.amplitude(0) == cplx(0.0));

  GroundManifold single;
  single.lattice = tri.lattice;
  single.configurations = {3};
  CHECK(std::abs(equal_superposition(single).amplitude(3) - cplx(1.0)) < 1e-14);

  GroundManifold empty;
  empty.lattice = tri.lattice;
  CHECK_THROWS_AS((void)equal_superposition(empty), std::invalid_argument);
}

TEST_CASE("w-structure verification") {
  const LatticeGraph tri = build_triangular_patch(1);
  const PureState psi0 = equal_superposition(enumerate_ground(tri));
  CHECK(verify_w_structure(psi0, tri).pass);

  // |000> fails with the offending (configuration, triangle) witness.
  Eigen::VectorXcd zeros = Eigen::VectorXcd::Zero(8);
  zeros(0) = 1.0;
  const WStructureReport report = verify_w_structure(PureState(3, zeros), tri);
  CHECK_FALSE(report.pass);
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0].first == 0);
  CHECK(report.witnesses[0].second == 0);

  // The six-site equal superposition keeps every up-triangle non-monochromatic.
  const LatticeGraph six = build_six_site_example();
  CHECK(verify_w_structure(equal_superposition(enumerate_ground(six)), six).pass);
}

TEST_CASE("finite-patch degeneracy exponents") {
  const auto points = wannier_estimate({1, 2, 3, 4});
  REQUIRE(points.size() == 4);
  CHECK(points[0].degeneracy == 6);
  CHECK(points[0].exponent == doctest::Approx(std::log2(6.0) / 3.0).epsilon(1e-12));
  CHECK(points[0].exponent == doctest::Approx(0.8616541).epsilon(1e-6));
  // Frozen regression values from the exhaustive enumeration.
  CHECK(points[1].degeneracy == 26);
  CHECK(points[2].degeneracy == 160);
  CHECK(points[3].degeneracy == 1386);
  // Finite-size exponents decrease toward the bulk value but stay above it.
  for (std::size_t i = 1; i < points.size(); ++i) {
    CHECK(points[i].exponent < points[i - 1].exponent);
    CHECK(points[i].exponent > 0.488);
  }
}

TEST_CASE("every J=1 ground configuration frustrates one edge per triangle") {
  for (int side : {1, 2, 3}) {
    const LatticeGraph patch = build_triangular_patch(side);
    const GroundManifold m = enumerate_ground(patch);
    for (std::uint64_t x : m.configurations) {
      for (const auto& t : patch.up_triangles) {
        const int b0 = bit_at(x, t[0]), b1 = bit_at(x, t[1]), b2 = bit_at(x, t[2]);
        const int aligned = (b0 == b1) + (b0 == b2) + (b1 == b2);
        CHECK(aligned == 1);
      }
    }
  }
}
