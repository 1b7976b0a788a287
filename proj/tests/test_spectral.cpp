#include <doctest.h>

#include <cmath>

#include "simplexnet/spectral.hpp"

using namespace simplexnet;

namespace {

const LatticeGraph& triangle() {
  static const LatticeGraph g = build_triangular_patch(1);
  return g;
}

}  // namespace

TEST_CASE("antiferromagnetic Hamiltonian on a single triangle") {
  const SpinOperator h = build_hamiltonian({triangle(), {}, 0.0});
  // Three +-1 edge products cannot all be -1: the minimum is -1, six times.
  int minima = 0;
  for (Eigen::Index x = 0; x < 8; ++x) {
    CHECK(h.diag(x) >= -1.0);
    if (h.diag(x) == -1.0) ++minima;
  }
  CHECK(minima == 6);
  CHECK(h.diag(parse_bitstring("111")) == 3.0);  // all edges aligned
  CHECK(h.diag(0) == 3.0);
}

TEST_CASE("transverse field adds one flip per qubit") {
  const SpinOperator h = build_hamiltonian({triangle(), {}, 0.1});
  const Eigen::MatrixXd dense = h.to_dense();
  for (Eigen::Index x = 0; x < 8; ++x) {
    int off_diagonal = 0;
    for (Eigen::Index y = 0; y < 8; ++y) {
      if (x != y && dense(y, x) != 0.0) {
        CHECK(dense(y, x) == 0.1);
        ++off_diagonal;
      }
    }
    CHECK(off_diagonal == 3);
  }
  CHECK((dense - dense.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("H_W picks out the one-excitation-per-triangle manifold") {
  const SpinOperator hw = build_hw(triangle());
  int zeros = 0;
  for (Eigen::Index x = 0; x < 8; ++x) {
    CHECK(hw.diag(x) >= 0.0);
    if (hw.diag(x) == 0.0) ++zeros;
  }
  CHECK(zeros == 3);
  CHECK(hw.diag(parse_bitstring("001")) == 0.0);
  CHECK(hw.diag(parse_bitstring("111")) == 4.0);  // (3-1)^2

  // Six-site lattice: kernel dimension equals the Exact Cover solution count,
  // both counted exhaustively here.
  const LatticeGraph six = build_six_site_example();
  const SpinOperator hw6 = build_hw(six);
  int kernel = 0;
  for (Eigen::Index x = 0; x < 64; ++x) {
    if (hw6.diag(x) == 0.0) ++kernel;
  }
  int cover = 0;
  for (std::uint64_t x = 0; x < 64; ++x) {
    bool ok = true;
    for (const auto& t : six.up_triangles) {
      if (bit_at(x, t[0]) + bit_at(x, t[1]) + bit_at(x, t[2]) != 1) ok = false;
    }
    if (ok) ++cover;
  }
  CHECK(kernel == cover);
  CHECK(kernel == 4);
  CHECK_THROWS_AS((void)build_hw(six, 5), std::invalid_argument);
}

TEST_CASE("decomposition of the coupling into the two penalty terms") {
  // sum_T sigma^z sigma^z = sum_{T*} [(s-1)^2 + (s-2)^2 - 2] entrywise,
  // on every edge-disjoint fixture.
  const std::vector<LatticeGraph> fixtures = {
      triangle(), build_six_site_example(), build_triangular_patch(3),
      LatticeGraph::from_triangles(6, {{0, 1, 2}, {3, 4, 5}})};
  for (const LatticeGraph& g : fixtures) {
    const Eigen::VectorXd lhs = diag_zz_sum(g);
    const Eigen::VectorXd rhs = diag_w_penalty(g) + diag_wbar_penalty(g) -
                                2.0 * static_cast<double>(g.up_triangles.size()) *
                                    Eigen::VectorXd::Ones(lhs.size());
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("ground energy is minus the number of up-triangles when edge-disjoint") {
  for (int side : {1, 2, 3}) {
    const LatticeGraph patch = build_triangular_patch(side);
    const Eigen::VectorXd diag = diag_zz_sum(patch);
    CHECK(diag.minCoeff() == -static_cast<double>(patch.up_triangles.size()));
  }
}

TEST_CASE("small-field ground state of the frustrated triangle") {
  const PureState gs = ground_state_small_lambda({triangle(), {}, 1e-3});
  const double r6 = 1.0 / std::sqrt(6.0);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const double m = std::abs(gs.amplitude(x));
    if (x == 0 || x == 7) {
      CHECK(m < 1e-3);  // first-order leakage only
    } else {
      CHECK(std::abs(m - r6) < 1e-4);
    }
  }
  // The field lifts the degeneracy into W minus Wbar: opposite signs on the
  // two Hamming classes after the gauge makes the W class positive.
  CHECK(gs.amplitude(parse_bitstring("100")).real() > 0.0);
  CHECK(gs.amplitude(parse_bitstring("010")).real() > 0.0);
  CHECK(gs.amplitude(parse_bitstring("110")).real() < 0.0);

  CHECK_THROWS_AS((void)ground_state_small_lambda({triangle(), {}, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("two-site antiferromagnet at small field") {
  const LatticeGraph chain = LatticeGraph::explicit_graph(2, {}, {{0, 1}});
  const PureState gs = ground_state_small_lambda({chain, {}, 1e-3});
  const double r2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(gs.amplitude(parse_bitstring("01")).real() - r2) < 1e-3);
  CHECK(std::abs(gs.amplitude(parse_bitstring("10")).real() - r2) < 1e-3);
  CHECK(std::abs(gs.amplitude(parse_bitstring("00"))) < 1e-3);
}

TEST_CASE("degenerate perturbation theory matches small-field diagonalization") {
  const GroundManifold tri_manifold = enumerate_ground(triangle());
  const PureState pt = degenerate_pt_ground({triangle(), {}, 1e-3}, tri_manifold);
  const PureState gs = ground_state_small_lambda({triangle(), {}, 1e-3});
  for (std::uint64_t x = 0; x < 8; ++x) {
    CHECK(std::abs(pt.amplitude(x) - gs.amplitude(x)) < 1e-3);
  }

  const LatticeGraph six = build_six_site_example();
  const PureState pt6 = degenerate_pt_ground({six, {}, 1e-3}, enumerate_ground(six));
  const PureState gs6 = ground_state_small_lambda({six, {}, 1e-3});
  CHECK(overlap(pt6, gs6) >= 0.999);

  // Size-one manifold: the projected problem is trivial.
  GroundManifold single;
  single.lattice = six;
  single.configurations = {5};
  single.energy = 0;
  const PureState basis = degenerate_pt_ground({six, {}, 1e-3}, single);
  CHECK(std::abs(basis.amplitude(5) - cplx(1.0)) < 1e-14);

  GroundManifold empty;
  empty.lattice = six;
  CHECK_THROWS_AS((void)degenerate_pt_ground({six, {}, 1e-3}, empty), std::invalid_argument);
}

TEST_CASE("partial trace and entropy") {
  // Bell pair: one site carries one ebit.
  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const PureState bell_state(2, bell);
  CHECK(entropy_bits(partial_trace(bell_state, make_region(2, {0}))) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Product state: zero entropy for any region.
  Eigen::VectorXcd prod = Eigen::VectorXcd::Zero(8);
  prod(5) = 1.0;
  const PureState prod_state(3, prod);
  CHECK(entropy_bits(partial_trace(prod_state, make_region(3, {0, 2}))) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // W state, one site: eigenvalues {1/3, 2/3}.
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(8);
  w(1) = w(2) = w(4) = 1.0 / std::sqrt(3.0);
  const PureState w_state_(3, w);
  const double expected = -(1.0 / 3.0) * std::log2(1.0 / 3.0) -
                          (2.0 / 3.0) * std::log2(2.0 / 3.0);
  CHECK(entropy_bits(partial_trace(w_state_, make_region(3, {1}))) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.9182958340544896).epsilon(1e-12));
}

TEST_CASE("entropy is symmetric between a region and its complement") {
  // Deterministic pseudo-random six-qubit state.
  Eigen::VectorXcd v(64);
  double x = 0.1234;
  for (Eigen::Index i = 0; i < 64; ++i) {
    x = std::fmod(x * 997.0 + 0.7171, 1.0);
    const double y = std::fmod(x * 709.0 + 0.3131, 1.0);
    v(i) = cplx(x - 0.5, y - 0.5);
  }
  const PureState state = PureState::normalized(6, v);
  const double sa = entropy_bits(partial_trace(state, make_region(6, {0, 2, 5})));
  const double sb = entropy_bits(partial_trace(state, make_region(6, {1, 3, 4})));
  CHECK(std::abs(sa - sb) < 1e-9);
}

TEST_CASE("iterative ground state beyond the dense cutoff") {
  // Thirteen sites force the Lanczos path; degenerate perturbation theory is
  // the independent cross-check.
  const LatticeGraph chain = LatticeGraph::from_triangles(
      13, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}, {8, 9, 10}, {10, 11, 12}});
  const HamiltonianSpec spec{chain, {}, 0.1};
  const PureState iterative = ground_state_small_lambda(spec);
  const PureState pt = degenerate_pt_ground(spec, enumerate_ground(chain));
  CHECK(overlap(iterative, pt) >= 0.99);

  Eigen::VectorXd re = iterative.amplitudes.real();
  Eigen::VectorXd hv(re.size());
  build_hamiltonian(spec).apply(re, hv);
  CHECK(re.dot(hv) < -6.0);  // below the classical ground energy
}

TEST_CASE("anisotropic couplings remove frustration on a triangle") {
  // +1 on the two diagonal edges, -1 on the horizontal (1,2) edge.
  const std::vector<double> couplings{1.0, 1.0, -1.0};
  const Eigen::VectorXd diag = diag_zz_sum(triangle(), couplings);
  CHECK(diag.minCoeff() == -3.0);  // every edge satisfied: unfrustrated
  std::vector<std::uint64_t> minima;
  for (Eigen::Index x = 0; x < 8; ++x) {
    if (diag(x) == -3.0) minima.push_back(static_cast<std::uint64_t>(x));
  }
  CHECK(minima == std::vector<std::uint64_t>{1, 6});  // top-only and bottom-pair
}
