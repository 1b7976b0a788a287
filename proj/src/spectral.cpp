#include "simplexnet/spectral.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "parallel_util.hpp"

namespace simplexnet {

namespace {

constexpr int kDenseCap = 12;

void check_cap(int n, int cap) {
  if (n > cap) throw std::invalid_argument("spectral: lattice exceeds the qubit cap");
  if (n < 1) throw std::invalid_argument("spectral: empty lattice");
}

std::vector<double> resolve_couplings(const LatticeGraph& lattice,
                                      const std::vector<double>& couplings) {
  if (couplings.empty()) return std::vector<double>(lattice.edges.size(), 1.0);
  if (couplings.size() != lattice.edges.size()) {
    throw std::invalid_argument("spectral: one coupling per lattice edge required");
  }
  return couplings;
}

// Fills diag[x] = f(x) in fixed chunks.
template <typename F>
Eigen::VectorXd fill_diag(int n, F&& f) {
  const std::uint64_t total = std::uint64_t{1} << n;
  Eigen::VectorXd diag(static_cast<Eigen::Index>(total));
  detail::run_chunked(total, n >= 18 ? 64 : 1, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t x = begin; x < end; ++x) {
      diag(static_cast<Eigen::Index>(x)) = f(x);
    }
  });
  return diag;
}

}  // namespace

void SpinOperator::apply(const Eigen::VectorXd& v, Eigen::VectorXd& out) const {
  out.array() = diag.array() * v.array();
  if (field == 0.0) return;
  const std::uint64_t total = std::uint64_t{1} << n_qubits;
  for (int i = 0; i < n_qubits; ++i) {
    const std::uint64_t mask = std::uint64_t{1} << i;
    for (std::uint64_t x = 0; x < total; ++x) {
      out(static_cast<Eigen::Index>(x)) += field * v(static_cast<Eigen::Index>(x ^ mask));
    }
  }
}

Eigen::MatrixXd SpinOperator::to_dense() const {
  if (n_qubits > kDenseCap) throw std::invalid_argument("SpinOperator::to_dense: n > 12");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  h.diagonal() = diag;
  for (int i = 0; i < n_qubits; ++i) {
    const Eigen::Index mask = Eigen::Index{1} << i;
    for (Eigen::Index x = 0; x < dim; ++x) h(x ^ mask, x) += field;
  }
  return h;
}

Eigen::VectorXd diag_zz_sum(const LatticeGraph& lattice, const std::vector<double>& couplings) {
  const std::vector<double> j = resolve_couplings(lattice, couplings);
  return fill_diag(lattice.n_sites, [&](std::uint64_t x) {
    double e = 0.0;
    for (std::size_t k = 0; k < lattice.edges.size(); ++k) {
      const auto [a, b] = lattice.edges[k];
      e += ((x >> a) ^ (x >> b)) & 1u ? -j[k] : j[k];
    }
    return e;
  });
}

namespace {

Eigen::VectorXd diag_triangle_penalty(const LatticeGraph& lattice, int offset) {
  return fill_diag(lattice.n_sites, [&](std::uint64_t x) {
    double e = 0.0;
    for (const auto& t : lattice.up_triangles) {
      const int s = bit_at(x, t[0]) + bit_at(x, t[1]) + bit_at(x, t[2]);
      e += static_cast<double>((s - offset) * (s - offset));
    }
    return e;
  });
}

}  // namespace

Eigen::VectorXd diag_w_penalty(const LatticeGraph& lattice) {
  return diag_triangle_penalty(lattice, 1);
}

Eigen::VectorXd diag_wbar_penalty(const LatticeGraph& lattice) {
  return diag_triangle_penalty(lattice, 2);
}

SpinOperator build_hamiltonian(const HamiltonianSpec& spec, int cap) {
  check_cap(spec.lattice.n_sites, cap);
  SpinOperator op;
  op.n_qubits = spec.lattice.n_sites;
  op.diag = diag_zz_sum(spec.lattice, spec.couplings);
  op.field = spec.field;
  return op;
}

SpinOperator build_hw(const LatticeGraph& lattice, int cap) {
  check_cap(lattice.n_sites, cap);
  SpinOperator op;
  op.n_qubits = lattice.n_sites;
  op.diag = diag_w_penalty(lattice);
  op.field = 0.0;
  return op;
}

namespace {

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;
};

// Restarted Lanczos with full reorthogonalization; `deflate` vectors are
// projected out so the routine can be reused for the first excited state.
Eigenpair lanczos_lowest(const SpinOperator& op, const std::vector<Eigen::VectorXd>& deflate,
                         int max_basis = 80, int max_restarts = 200, double tol = 1e-11) {
  const Eigen::Index dim = Eigen::Index{1} << op.n_qubits;
  std::mt19937_64 rng(0x51e7c0de);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = gauss(rng);

  auto project_out = [&](Eigen::VectorXd& w) {
    for (const auto& d : deflate) w -= d.dot(w) * d;
  };

  const double scale = std::max(1.0, op.diag.cwiseAbs().maxCoeff() +
                                         std::abs(op.field) * op.n_qubits);
  Eigenpair best;
  Eigen::VectorXd hv(dim);
  for (int restart = 0; restart < max_restarts; ++restart) {
    project_out(v);
    if (v.norm() < 1e-12) throw std::runtime_error("lanczos: start vector vanished");
    v.normalize();

    std::vector<Eigen::VectorXd> basis;
    std::vector<double> alpha, beta;
    basis.push_back(v);
    for (int k = 0; k < max_basis; ++k) {
      op.apply(basis.back(), hv);
      alpha.push_back(basis.back().dot(hv));
      hv -= alpha.back() * basis.back();
      if (basis.size() > 1) hv -= beta.back() * basis[basis.size() - 2];
      project_out(hv);
      for (const auto& b : basis) hv -= b.dot(hv) * b;  // full reorthogonalization
      const double nrm = hv.norm();
      if (nrm < 1e-13 * scale) break;
      beta.push_back(nrm);
      basis.push_back(hv / nrm);
    }

    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      tri(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < m) {
        tri(i, i + 1) = tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
    const Eigen::VectorXd y = solver.eigenvectors().col(0);
    Eigen::VectorXd ritz = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < m; ++i) ritz += y(i) * basis[static_cast<std::size_t>(i)];
    ritz.normalize();
    best.value = solver.eigenvalues()(0);
    best.vector = ritz;

    op.apply(ritz, hv);
    const double residual = (hv - best.value * ritz).norm();
    if (residual < tol * scale) return best;
    v = ritz;
  }
  return best;  // best effort after the restart budget
}

Eigenpair dense_lowest(const SpinOperator& op, double* gap) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.to_dense());
  if (solver.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
  if (gap) *gap = solver.eigenvalues()(1) - solver.eigenvalues()(0);
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

PureState to_pure(int n, const Eigen::VectorXd& v) {
  Eigen::VectorXcd amps = v.cast<cplx>();
  PureState state = PureState::normalized(n, std::move(amps));
  fix_gauge(state);
  return state;
}

}  // namespace

PureState ground_state_small_lambda(const HamiltonianSpec& spec) {
  if (spec.field <= 0.0) {
    throw std::invalid_argument("ground_state_small_lambda: field must be positive");
  }
  const SpinOperator op = build_hamiltonian(spec);
  double gap = 0.0;
  Eigenpair ground;
  if (op.n_qubits <= kDenseCap) {
    ground = dense_lowest(op, &gap);
  } else {
    ground = lanczos_lowest(op, {});
    const Eigenpair excited = lanczos_lowest(op, {ground.vector});
    gap = excited.value - ground.value;
  }
  if (gap < 1e-9) {
    throw std::runtime_error(
        "ground_state_small_lambda: lowest eigenvalue degenerate at this field");
  }
  return to_pure(op.n_qubits, ground.vector);
}

PureState degenerate_pt_ground(const HamiltonianSpec& spec, const GroundManifold& manifold) {
  const auto& configs = manifold.configurations;
  if (configs.empty()) throw std::invalid_argument("degenerate_pt_ground: empty manifold");
  const int k = static_cast<int>(configs.size());
  if (k > 4096) throw std::invalid_argument("degenerate_pt_ground: manifold larger than 4096");
  const int n = spec.lattice.n_sites;
  if (n > 24) throw std::invalid_argument("degenerate_pt_ground: n > 24");

  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  if (k == 1) {
    amps(static_cast<Eigen::Index>(configs[0])) = 1.0;
    return PureState(n, std::move(amps));
  }

  // Projected perturbation: <c'| sum_i sigma^x_i |c> = 1 at Hamming distance 1.
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(k, k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (std::popcount(configs[static_cast<std::size_t>(a)] ^
                        configs[static_cast<std::size_t>(b)]) == 1) {
        v(a, b) = v(b, a) = 1.0;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(v);
  if (solver.info() != Eigen::Success) throw std::runtime_error("pt eigensolver failed");
  const Eigen::VectorXd weights = solver.eigenvectors().col(0);
  for (int a = 0; a < k; ++a) {
    amps(static_cast<Eigen::Index>(configs[static_cast<std::size_t>(a)])) = weights(a);
  }
  PureState state = PureState::normalized(n, std::move(amps));
  fix_gauge(state);
  return state;
}

}  // namespace simplexnet
