#include "simplexnet/density.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace simplexnet {

ReducedDensity::ReducedDensity(Region r, Eigen::MatrixXcd m)
    : region(std::move(r)), matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("density matrix not square");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("density matrix not Hermitian");
  }
  if (std::abs(matrix.trace().real() - 1.0) > 1e-10 || std::abs(matrix.trace().imag()) > 1e-10) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
}

ReducedDensity partial_trace(const PureState& state, const Region& region) {
  const int n = state.n_qubits;
  const int na = static_cast<int>(region.sites.size());
  if (na > 14) throw std::invalid_argument("partial_trace: region larger than 14 sites");
  for (int s : region.sites) {
    if (s < 0 || s >= n) throw std::invalid_argument("partial_trace: region site out of range");
  }
  std::vector<int> comp;
  {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int s : region.sites) in[static_cast<std::size_t>(s)] = true;
    for (int s = 0; s < n; ++s)
      if (!in[static_cast<std::size_t>(s)]) comp.push_back(s);
  }
  const int nb = n - na;
  const Eigen::Index dim_a = Eigen::Index{1} << na;
  const std::uint64_t dim_b = std::uint64_t{1} << nb;

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim_a, dim_a);
  Eigen::VectorXcd v(dim_a);
  for (std::uint64_t b = 0; b < dim_b; ++b) {
    std::uint64_t base = 0;
    for (int k = 0; k < nb; ++k) {
      if (bit_at(b, k)) base |= std::uint64_t{1} << comp[static_cast<std::size_t>(k)];
    }
    for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(dim_a); ++a) {
      std::uint64_t x = base;
      for (int k = 0; k < na; ++k) {
        if (bit_at(a, k)) x |= std::uint64_t{1} << region.sites[static_cast<std::size_t>(k)];
      }
      v(static_cast<Eigen::Index>(a)) = state.amplitude(x);
    }
    rho.noalias() += v * v.adjoint();
  }
  return ReducedDensity(region, std::move(rho));
}

double entropy_bits(const ReducedDensity& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("entropy: eigensolver failed");
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double p = solver.eigenvalues()(i);
    if (p < -1e-10 || p > 1.0 + 1e-10) {
      throw std::runtime_error("entropy: eigenvalue outside [0,1]");
    }
    if (p > 1e-14) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace simplexnet
