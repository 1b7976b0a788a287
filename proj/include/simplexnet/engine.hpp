#pragma once

#include <cstddef>
#include <vector>

#include "simplexnet/network.hpp"
#include "simplexnet/state.hpp"

namespace simplexnet {

// Dense tensor for the pairwise contraction engine. Bit k of the flat data
// index carries the value of legs[k]; every leg has dimension 2 and appears
// in at most two tensors of a network.
struct Tensor {
  std::vector<int> legs;
  std::vector<cplx> data;
};

struct TensorNetwork {
  std::vector<Tensor> tensors;
};

// One pairwise merge; node indices count the initial tensors first, then
// each step's result in order.
struct ContractionStep {
  int a = 0;
  int b = 0;
};

struct ContractionOrder {
  std::vector<ContractionStep> steps;
};

struct ContractStats {
  std::size_t peak_elems = 0;  // largest tensor materialized
};

// Bipartite simplex/projector network with open physical legs (leg id =
// site id). Site projectors are generalized copy tensors whose degree adapts
// to the number of incident simplices.
TensorNetwork build_state_network(const NetworkSpec& spec);

// Same network with every physical leg closed by an all-ones vector, so the
// full contraction is the sum of all amplitudes.
TensorNetwork build_counting_network(const NetworkSpec& spec);

// Greedy minimum-intermediate-size order; deterministic (ties broken by
// lowest node index pair). Falls back to smallest outer product when no pair
// shares a leg.
ContractionOrder plan_order(const TensorNetwork& net);
ContractionOrder plan_order(const NetworkSpec& spec);

// Executes an order. Throws on steps referencing dead/unknown nodes and on
// intermediates exceeding mem_cap_elems.
Tensor contract_network(const TensorNetwork& net, const ContractionOrder& order,
                        std::size_t mem_cap_elems, ContractStats* stats = nullptr);

inline constexpr std::size_t kDefaultMemCap = std::size_t{1} << 24;

// Full pairwise contraction to a normalized state vector.
PureState contract_pairwise(const NetworkSpec& spec, const ContractionOrder& order,
                            std::size_t mem_cap_elems = kDefaultMemCap,
                            ContractStats* stats = nullptr);

}  // namespace simplexnet
