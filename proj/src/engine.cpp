#include "simplexnet/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

namespace simplexnet {

namespace {

// Copy projector of the given degree: +1 when all indices agree.
Tensor copy_projector(std::vector<int> legs) {
  Tensor t;
  t.legs = std::move(legs);
  t.data.assign(std::size_t{1} << t.legs.size(), 0.0);
  t.data.front() = 1.0;
  t.data.back() = 1.0;
  return t;
}

void check_leg_multiplicity(const TensorNetwork& net) {
  std::map<int, int> count;
  for (const Tensor& t : net.tensors) {
    for (int leg : t.legs) {
      if (++count[leg] > 2) {
        throw std::invalid_argument("engine: a leg appears in more than two tensors");
      }
    }
  }
}

std::vector<std::uint64_t> scatter_table(const std::vector<int>& bit_positions) {
  const std::size_t n = bit_positions.size();
  std::vector<std::uint64_t> table(std::size_t{1} << n, 0);
  for (std::uint64_t i = 1; i < table.size(); ++i) {
    const int low = std::countr_zero(i);
    table[i] = table[i & (i - 1)] | (std::uint64_t{1} << bit_positions[static_cast<std::size_t>(low)]);
  }
  return table;
}

Tensor contract_pair(const Tensor& ta, const Tensor& tb, std::size_t mem_cap,
                     ContractStats* stats) {
  std::vector<int> shared;
  for (int leg : ta.legs) {
    if (std::find(tb.legs.begin(), tb.legs.end(), leg) != tb.legs.end()) shared.push_back(leg);
  }
  std::vector<int> free_a, free_b;
  for (int leg : ta.legs) {
    if (std::find(shared.begin(), shared.end(), leg) == shared.end()) free_a.push_back(leg);
  }
  for (int leg : tb.legs) {
    if (std::find(shared.begin(), shared.end(), leg) == shared.end()) free_b.push_back(leg);
  }

  auto positions = [](const Tensor& t, const std::vector<int>& legs) {
    std::vector<int> pos;
    pos.reserve(legs.size());
    for (int leg : legs) {
      pos.push_back(static_cast<int>(
          std::find(t.legs.begin(), t.legs.end(), leg) - t.legs.begin()));
    }
    return pos;
  };

  Tensor out;
  out.legs = free_a;
  out.legs.insert(out.legs.end(), free_b.begin(), free_b.end());
  const std::size_t out_size = std::size_t{1} << out.legs.size();
  if (out_size > mem_cap) {
    throw std::runtime_error("engine: intermediate tensor exceeds the memory cap");
  }
  if (stats) stats->peak_elems = std::max(stats->peak_elems, out_size);
  out.data.assign(out_size, 0.0);

  const auto off_a_free = scatter_table(positions(ta, free_a));
  const auto off_a_sh = scatter_table(positions(ta, shared));
  const auto off_b_free = scatter_table(positions(tb, free_b));
  const auto off_b_sh = scatter_table(positions(tb, shared));
  const std::uint64_t na = std::uint64_t{1} << free_a.size();
  const std::uint64_t nb = std::uint64_t{1} << free_b.size();
  const std::uint64_t ns = std::uint64_t{1} << shared.size();

  for (std::uint64_t ib = 0; ib < nb; ++ib) {
    for (std::uint64_t ia = 0; ia < na; ++ia) {
      cplx acc = 0.0;
      for (std::uint64_t is = 0; is < ns; ++is) {
        acc += ta.data[off_a_free[ia] | off_a_sh[is]] * tb.data[off_b_free[ib] | off_b_sh[is]];
      }
      out.data[ia | (ib << free_a.size())] = acc;
    }
  }
  return out;
}

TensorNetwork assemble(const NetworkSpec& spec, bool counting) {
  TensorNetwork net;
  // Ancilla leg ids follow the physical ids (0..n_sites-1).
  int next_leg = spec.n_sites;
  std::vector<std::vector<int>> site_anc(static_cast<std::size_t>(spec.n_sites));
  for (const auto& pt : spec.tensors) {
    Tensor t;
    for (int s : pt.sites) {
      t.legs.push_back(next_leg);
      site_anc[static_cast<std::size_t>(s)].push_back(next_leg);
      ++next_leg;
    }
    t.data = pt.amps;
    net.tensors.push_back(std::move(t));
  }
  for (int s = 0; s < spec.n_sites; ++s) {
    std::vector<int> legs = site_anc[static_cast<std::size_t>(s)];
    legs.push_back(s);  // physical leg
    net.tensors.push_back(copy_projector(std::move(legs)));
  }
  if (counting) {
    for (int s = 0; s < spec.n_sites; ++s) {
      net.tensors.push_back(Tensor{{s}, {1.0, 1.0}});
    }
  }
  return net;
}

}  // namespace

TensorNetwork build_state_network(const NetworkSpec& spec) { return assemble(spec, false); }

TensorNetwork build_counting_network(const NetworkSpec& spec) { return assemble(spec, true); }

ContractionOrder plan_order(const TensorNetwork& net) {
  check_leg_multiplicity(net);
  std::vector<std::optional<std::vector<int>>> nodes;  // sorted leg lists of live nodes
  for (const Tensor& t : net.tensors) {
    std::vector<int> legs = t.legs;
    std::sort(legs.begin(), legs.end());
    nodes.emplace_back(std::move(legs));
  }

  auto merged_legs = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
  };
  auto shares_leg = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> tmp;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(tmp));
    return !tmp.empty();
  };

  ContractionOrder order;
  const std::size_t n_initial = net.tensors.size();
  if (n_initial == 0) throw std::invalid_argument("plan_order: empty network");
  for (std::size_t step = 0; step + 1 < n_initial; ++step) {
    int best_a = -1, best_b = -1;
    std::size_t best_size = 0;
    bool best_connected = false;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      if (!nodes[a]) continue;
      for (std::size_t b = a + 1; b < nodes.size(); ++b) {
        if (!nodes[b]) continue;
        const bool connected = shares_leg(*nodes[a], *nodes[b]);
        const std::size_t size = std::size_t{1} << merged_legs(*nodes[a], *nodes[b]).size();
        // Connected pairs take priority; then smallest result; then lowest indices.
        const bool better = best_a < 0 || (connected && !best_connected) ||
                            (connected == best_connected && size < best_size);
        if (better) {
          best_a = static_cast<int>(a);
          best_b = static_cast<int>(b);
          best_size = size;
          best_connected = connected;
        }
      }
    }
    order.steps.push_back({best_a, best_b});
    std::vector<int> merged = merged_legs(*nodes[static_cast<std::size_t>(best_a)],
                                          *nodes[static_cast<std::size_t>(best_b)]);
    nodes[static_cast<std::size_t>(best_a)].reset();
    nodes[static_cast<std::size_t>(best_b)].reset();
    nodes.emplace_back(std::move(merged));
  }
  return order;
}

ContractionOrder plan_order(const NetworkSpec& spec) {
  return plan_order(build_state_network(spec));
}

Tensor contract_network(const TensorNetwork& net, const ContractionOrder& order,
                        std::size_t mem_cap_elems, ContractStats* stats) {
  check_leg_multiplicity(net);
  std::vector<std::optional<Tensor>> nodes(net.tensors.begin(), net.tensors.end());
  if (stats) {
    for (const Tensor& t : net.tensors) {
      stats->peak_elems = std::max(stats->peak_elems, t.data.size());
    }
  }
  for (const ContractionStep& step : order.steps) {
    const auto valid = [&](int i) {
      return i >= 0 && static_cast<std::size_t>(i) < nodes.size() &&
             nodes[static_cast<std::size_t>(i)].has_value();
    };
    if (!valid(step.a) || !valid(step.b) || step.a == step.b) {
      throw std::invalid_argument("contract_network: order references an unknown tensor");
    }
    Tensor merged = contract_pair(*nodes[static_cast<std::size_t>(step.a)],
                                  *nodes[static_cast<std::size_t>(step.b)], mem_cap_elems, stats);
    nodes[static_cast<std::size_t>(step.a)].reset();
    nodes[static_cast<std::size_t>(step.b)].reset();
    nodes.emplace_back(std::move(merged));
  }
  Tensor result;
  int alive = 0;
  for (auto& node : nodes) {
    if (node) {
      ++alive;
      result = std::move(*node);
    }
  }
  if (alive != 1) throw std::invalid_argument("contract_network: order is incomplete");
  return result;
}

PureState contract_pairwise(const NetworkSpec& spec, const ContractionOrder& order,
                            std::size_t mem_cap_elems, ContractStats* stats) {
  if (spec.n_sites > 24) throw std::invalid_argument("contract_pairwise: n > 24");
  const TensorNetwork net = build_state_network(spec);
  Tensor result = contract_network(net, order, mem_cap_elems, stats);
  if (static_cast<int>(result.legs.size()) != spec.n_sites) {
    throw std::runtime_error("contract_pairwise: result does not cover all physical legs");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << spec.n_sites);
  for (std::uint64_t f = 0; f < result.data.size(); ++f) {
    std::uint64_t x = 0;
    for (std::size_t k = 0; k < result.legs.size(); ++k) {
      if ((f >> k) & 1u) x |= std::uint64_t{1} << result.legs[k];
    }
    amps(static_cast<Eigen::Index>(x)) = result.data[f];
  }
  return PureState::normalized(spec.n_sites, std::move(amps));
}

}  // namespace simplexnet
