#include "simplexnet/frustration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parallel_util.hpp"

namespace simplexnet {

namespace {

std::vector<int> resolve_couplings(const LatticeGraph& lattice, const std::vector<int>& couplings) {
  if (couplings.empty()) return std::vector<int>(lattice.edges.size(), 1);
  if (couplings.size() != lattice.edges.size()) {
    throw std::invalid_argument("enumerate_ground: one coupling per edge required");
  }
  return couplings;
}

}  // namespace

GroundManifold enumerate_ground(const LatticeGraph& lattice, const std::vector<int>& couplings) {
  const int n = lattice.n_sites;
  if (n > 26) throw std::invalid_argument("enumerate_ground: n > 26");
  const std::vector<int> j = resolve_couplings(lattice, couplings);
  const std::uint64_t total = std::uint64_t{1} << n;

  struct Chunk {
    long long best = std::numeric_limits<long long>::max();
    std::vector<std::uint64_t> configs;
  };
  const int n_chunks = n >= 18 ? 64 : 1;
  std::vector<Chunk> chunks(static_cast<std::size_t>(n_chunks));

  const std::size_t n_edges = lattice.edges.size();
  detail::run_chunked(total, n_chunks, [&](int ci, std::uint64_t begin, std::uint64_t end) {
    Chunk& c = chunks[static_cast<std::size_t>(ci)];
    for (std::uint64_t x = begin; x < end; ++x) {
      long long e = 0;
      for (std::size_t k = 0; k < n_edges; ++k) {
        const auto [a, b] = lattice.edges[k];
        // s_a s_b = +1 when the bits agree, -1 otherwise
        e += ((x >> a) ^ (x >> b)) & 1u ? -j[k] : j[k];
      }
      if (e < c.best) {
        c.best = e;
        c.configs.clear();
        c.configs.push_back(x);
      } else if (e == c.best) {
        c.configs.push_back(x);
      }
    }
  });

  long long best = std::numeric_limits<long long>::max();
  for (const Chunk& c : chunks) best = std::min(best, c.best);
  GroundManifold m;
  m.lattice = lattice;
  m.energy = best;
  for (const Chunk& c : chunks) {
    if (c.best == best) {
      m.configurations.insert(m.configurations.end(), c.configs.begin(), c.configs.end());
    }
  }
  return m;
}

PureState equal_superposition(const GroundManifold& manifold) {
  if (manifold.configurations.empty()) {
    throw std::invalid_argument("equal_superposition: empty manifold");
  }
  const int n = manifold.lattice.n_sites;
  if (n > 24) throw std::invalid_argument("equal_superposition: n > 24");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  const double v = 1.0 / std::sqrt(static_cast<double>(manifold.configurations.size()));
  for (std::uint64_t x : manifold.configurations) amps(static_cast<Eigen::Index>(x)) = v;
  return PureState(n, std::move(amps));
}

namespace {

template <typename Terms>
WStructureReport verify_terms(const Terms& terms, const LatticeGraph& lattice, double threshold) {
  WStructureReport report;
  for (const auto& [x, amp] : terms) {
    if (std::abs(amp) <= threshold) continue;
    for (std::size_t t = 0; t < lattice.up_triangles.size(); ++t) {
      const auto& tri = lattice.up_triangles[t];
      const int b0 = bit_at(x, tri[0]);
      if (b0 == bit_at(x, tri[1]) && b0 == bit_at(x, tri[2])) {
        report.pass = false;
        report.witnesses.emplace_back(x, static_cast<int>(t));
      }
    }
  }
  return report;
}

}  // namespace

WStructureReport verify_w_structure(const PureState& state, const LatticeGraph& lattice,
                                    double threshold) {
  std::vector<std::pair<std::uint64_t, cplx>> terms;
  for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
    if (std::abs(state.amplitudes(i)) > threshold) {
      terms.emplace_back(static_cast<std::uint64_t>(i), state.amplitudes(i));
    }
  }
  return verify_terms(terms, lattice, threshold);
}

WStructureReport verify_w_structure(const SparseState& state, const LatticeGraph& lattice,
                                    double threshold) {
  return verify_terms(state.terms, lattice, threshold);
}

std::vector<WannierPoint> wannier_estimate(const std::vector<int>& sides) {
  std::vector<WannierPoint> points;
  for (int side : sides) {
    const LatticeGraph patch = build_triangular_patch(side);
    const GroundManifold m = enumerate_ground(patch);
    WannierPoint p;
    p.side = side;
    p.n = patch.n_sites;
    p.degeneracy = m.configurations.size();
    p.exponent = std::log2(static_cast<double>(p.degeneracy)) / static_cast<double>(p.n);
    points.push_back(p);
  }
  return points;
}

}  // namespace simplexnet
