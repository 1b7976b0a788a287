#include "simplexnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace simplexnet {

namespace {

void validate_spec(const NetworkSpec& spec) {
  if (spec.n_sites < 1 || spec.n_sites > 28) {
    throw std::invalid_argument("network: site count must be 1..28");
  }
  for (const auto& t : spec.tensors) {
    if (t.sites.size() < 2 || t.sites.size() > 4) {
      throw std::invalid_argument("network: tensor arity must be 2..4");
    }
    if (t.amps.size() != (std::size_t{1} << t.sites.size())) {
      throw std::invalid_argument("network: tensor amplitude length mismatch");
    }
    for (std::size_t a = 0; a < t.sites.size(); ++a) {
      if (t.sites[a] < 0 || t.sites[a] >= spec.n_sites) {
        throw std::invalid_argument("network: tensor site out of range");
      }
      for (std::size_t b = a + 1; b < t.sites.size(); ++b) {
        if (t.sites[a] == t.sites[b]) {
          throw std::invalid_argument("network: tensor sites must be distinct");
        }
      }
    }
  }
}

bool all_real(const NetworkSpec& spec) {
  for (const auto& t : spec.tensors) {
    for (const cplx& a : t.amps) {
      if (a.imag() != 0.0) return false;
    }
  }
  return true;
}

// DFS over site assignments in a fixed order. Tensors contribute their
// amplitude factor once their last site is assigned; partially assigned
// tensors prune branches with no nonzero completion.
template <typename Scalar>
struct DiagonalWalker {
  struct TensorState {
    std::vector<Scalar> amps;         // 2^arity
    std::vector<std::uint16_t> allowed;  // local patterns with nonzero entry
    std::uint16_t partial_mask = 0;
    std::uint16_t partial_bits = 0;
  };
  struct Touch {
    int tensor = 0;
    std::uint16_t local_bit = 0;
    bool completes = false;
  };

  int n_sites = 0;
  std::vector<int> order;                   // order[depth] = site
  std::vector<TensorState> tensors;
  std::vector<std::vector<Touch>> touches;  // per depth

  DiagonalWalker(const NetworkSpec& spec, std::vector<int> site_order)
      : n_sites(spec.n_sites), order(std::move(site_order)) {
    std::vector<int> depth_of(static_cast<std::size_t>(n_sites));
    for (int d = 0; d < n_sites; ++d) depth_of[static_cast<std::size_t>(order[d])] = d;
    touches.resize(static_cast<std::size_t>(n_sites));
    for (const auto& pt : spec.tensors) {
      TensorState ts;
      ts.amps.resize(pt.amps.size());
      for (std::size_t i = 0; i < pt.amps.size(); ++i) {
        if constexpr (std::is_same_v<Scalar, double>) {
          ts.amps[i] = pt.amps[i].real();
        } else {
          ts.amps[i] = pt.amps[i];
        }
        if (std::abs(pt.amps[i]) > 0.0) ts.allowed.push_back(static_cast<std::uint16_t>(i));
      }
      const int idx = static_cast<int>(tensors.size());
      int last_depth = -1;
      for (int s : pt.sites) last_depth = std::max(last_depth, depth_of[static_cast<std::size_t>(s)]);
      for (std::size_t k = 0; k < pt.sites.size(); ++k) {
        const int d = depth_of[static_cast<std::size_t>(pt.sites[k])];
        touches[static_cast<std::size_t>(d)].push_back(
            {idx, static_cast<std::uint16_t>(1u << k), d == last_depth});
      }
      tensors.push_back(std::move(ts));
    }
  }

  template <typename Leaf>
  void run(Leaf&& leaf) {
    descend(0, 0, Scalar{1.0}, leaf);
  }

 private:
  template <typename Leaf>
  void descend(int depth, std::uint64_t x, Scalar amp, Leaf& leaf) {
    if (depth == n_sites) {
      leaf(x, amp);
      return;
    }
    const std::uint64_t site_bit = std::uint64_t{1} << order[static_cast<std::size_t>(depth)];
    for (int bit = 0; bit < 2; ++bit) {
      Scalar next_amp = amp;
      bool feasible = true;
      std::size_t applied = 0;
      const auto& tl = touches[static_cast<std::size_t>(depth)];
      for (; applied < tl.size(); ++applied) {
        const Touch& t = tl[applied];
        TensorState& ts = tensors[static_cast<std::size_t>(t.tensor)];
        ts.partial_mask |= t.local_bit;
        if (bit) ts.partial_bits |= t.local_bit;
        if (t.completes) {
          next_amp *= ts.amps[ts.partial_bits];
          if (next_amp == Scalar{0.0}) {
            ++applied;
            feasible = false;
            break;
          }
        } else {
          bool any = false;
          for (std::uint16_t p : ts.allowed) {
            if ((p & ts.partial_mask) == ts.partial_bits) {
              any = true;
              break;
            }
          }
          if (!any) {
            ++applied;
            feasible = false;
            break;
          }
        }
      }
      if (feasible) {
        descend(depth + 1, bit ? (x | site_bit) : x, next_amp, leaf);
      }
      for (std::size_t k = 0; k < applied; ++k) {
        const Touch& t = tl[k];
        TensorState& ts = tensors[static_cast<std::size_t>(t.tensor)];
        ts.partial_mask = static_cast<std::uint16_t>(ts.partial_mask & ~t.local_bit);
        ts.partial_bits = static_cast<std::uint16_t>(ts.partial_bits & ~t.local_bit);
      }
    }
  }
};

std::vector<int> natural_order(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

template <typename Scalar>
SparseState contract_diagonal_impl(const NetworkSpec& spec) {
  SparseState out;
  out.n_qubits = spec.n_sites;
  DiagonalWalker<Scalar> walker(spec, natural_order(spec.n_sites));
  walker.run([&](std::uint64_t x, Scalar amp) {
    out.terms.emplace_back(x, cplx(amp));
    out.raw_norm2 += std::norm(cplx(amp));
  });
  if (out.terms.empty()) {
    throw std::runtime_error("contract_diagonal: network contracts to the zero state");
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const double inv = 1.0 / std::sqrt(out.raw_norm2);
  for (auto& [x, a] : out.terms) a *= inv;
  return out;
}

}  // namespace

NetworkSpec NetworkSpec::from_lattice(const LatticeGraph& lattice,
                                      const std::vector<SimplexState>& per_triangle) {
  if (per_triangle.size() != lattice.up_triangles.size()) {
    throw std::invalid_argument("network: one simplex per up-triangle required");
  }
  NetworkSpec spec;
  spec.n_sites = lattice.n_sites;
  for (std::size_t t = 0; t < per_triangle.size(); ++t) {
    if (per_triangle[t].arity != 3) {
      throw std::invalid_argument("network: triangle simplex must have arity 3");
    }
    const auto& tri = lattice.up_triangles[t];
    spec.tensors.push_back({{tri[0], tri[1], tri[2]}, per_triangle[t].amplitudes});
  }
  validate_spec(spec);
  return spec;
}

NetworkSpec NetworkSpec::uniform(const LatticeGraph& lattice, const SimplexState& simplex) {
  return from_lattice(lattice,
                      std::vector<SimplexState>(lattice.up_triangles.size(), simplex));
}

NetworkSpec NetworkSpec::from_square_network(const SquareNetworkGraph& net,
                                             const SimplexState& simplex) {
  if (simplex.arity != 4) {
    throw std::invalid_argument("network: square simplex must have arity 4");
  }
  NetworkSpec spec;
  spec.n_sites = net.n_sites;
  for (const auto& sq : net.checked_squares) {
    spec.tensors.push_back({{sq[0], sq[1], sq[2], sq[3]}, simplex.amplitudes});
  }
  validate_spec(spec);
  return spec;
}

SparseState contract_diagonal(const NetworkSpec& spec) {
  validate_spec(spec);
  if (all_real(spec)) return contract_diagonal_impl<double>(spec);
  return contract_diagonal_impl<cplx>(spec);
}

PureState contract_diagonal_dense(const NetworkSpec& spec) {
  return contract_diagonal(spec).to_dense();
}

namespace {

template <typename Scalar, typename Matrix>
void accumulate_density(const NetworkSpec& spec, const Region& region, Matrix& rho) {
  const int n = spec.n_sites;
  const int na = static_cast<int>(region.sites.size());
  std::vector<bool> in_region(static_cast<std::size_t>(n), false);
  for (int s : region.sites) in_region[static_cast<std::size_t>(s)] = true;

  std::vector<int> order;
  for (int s = 0; s < n; ++s)
    if (!in_region[static_cast<std::size_t>(s)]) order.push_back(s);
  for (int s : region.sites) order.push_back(s);

  std::uint64_t comp_mask = 0;
  for (int s = 0; s < n; ++s)
    if (!in_region[static_cast<std::size_t>(s)]) comp_mask |= std::uint64_t{1} << s;

  std::vector<Scalar> v(std::size_t{1} << na, Scalar{0.0});
  std::vector<std::uint32_t> touched;
  std::uint64_t current_b = 0;
  bool have_group = false;

  // Only the upper triangle is accumulated; the caller mirrors it once.
  auto flush = [&]() {
    for (std::size_t x = 0; x < touched.size(); ++x) {
      const std::uint32_t p = touched[x];
      if constexpr (std::is_same_v<Scalar, double>) {
        rho(p, p) += v[p] * v[p];
      } else {
        rho(p, p) += v[p] * std::conj(v[p]);
      }
      for (std::size_t y = x + 1; y < touched.size(); ++y) {
        const std::uint32_t q = touched[y];
        const std::uint32_t lo = std::min(p, q), hi = std::max(p, q);
        if constexpr (std::is_same_v<Scalar, double>) {
          rho(lo, hi) += v[lo] * v[hi];
        } else {
          rho(lo, hi) += v[lo] * std::conj(v[hi]);
        }
      }
    }
    for (std::uint32_t i : touched) v[i] = Scalar{0.0};
    touched.clear();
  };

  DiagonalWalker<Scalar> walker(spec, order);
  walker.run([&](std::uint64_t x, Scalar amp) {
    const std::uint64_t b = x & comp_mask;
    if (!have_group || b != current_b) {
      flush();
      current_b = b;
      have_group = true;
    }
    std::uint32_t a = 0;
    for (int k = 0; k < na; ++k) {
      if (bit_at(x, region.sites[static_cast<std::size_t>(k)])) a |= 1u << k;
    }
    v[a] += amp;
    touched.push_back(a);
  });
  flush();
}

}  // namespace

ReducedDensity contract_region_density(const NetworkSpec& spec, const Region& region) {
  validate_spec(spec);
  const int na = static_cast<int>(region.sites.size());
  if (na > 14) throw std::invalid_argument("contract_region_density: region larger than 14");
  for (int s : region.sites) {
    if (s < 0 || s >= spec.n_sites) {
      throw std::invalid_argument("contract_region_density: region site out of range");
    }
  }
  const Eigen::Index dim = Eigen::Index{1} << na;
  Eigen::MatrixXcd rho;
  if (all_real(spec)) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(dim, dim);
    accumulate_density<double>(spec, region, r);
    const Eigen::MatrixXd rt = r.transpose();
    r.triangularView<Eigen::StrictlyLower>() = rt;
    rho = r.cast<cplx>();
  } else {
    rho = Eigen::MatrixXcd::Zero(dim, dim);
    accumulate_density<cplx>(spec, region, rho);
    const Eigen::MatrixXcd ra = rho.adjoint();
    rho.triangularView<Eigen::StrictlyLower>() = ra;
  }
  const double tr = rho.trace().real();
  if (tr < 1e-280) {
    throw std::runtime_error("contract_region_density: network contracts to the zero state");
  }
  rho /= tr;
  return ReducedDensity(region, std::move(rho));
}

}  // namespace simplexnet
