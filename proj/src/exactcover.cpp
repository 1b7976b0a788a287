#include "simplexnet/exactcover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "simplexnet/engine.hpp"
#include "simplexnet/network.hpp"

namespace simplexnet {

void validate_instance(const CoverInstance& inst) {
  if (inst.n_bits < 1 || inst.n_bits > 26) {
    throw std::invalid_argument("exact cover: n_bits must be 1..26");
  }
  std::set<std::array<int, 3>> seen;
  for (const auto& c : inst.clauses) {
    for (int b : c) {
      if (b < 0 || b >= inst.n_bits) throw std::invalid_argument("exact cover: bit out of range");
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
      throw std::invalid_argument("exact cover: clause bits must be distinct");
    }
    std::array<int, 3> key = c;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) throw std::invalid_argument("exact cover: duplicate clause");
  }
}

std::uint64_t count_solutions_bruteforce(const CoverInstance& inst) {
  validate_instance(inst);
  const std::uint64_t total = std::uint64_t{1} << inst.n_bits;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool ok = true;
    for (const auto& c : inst.clauses) {
      const int ones = bit_at(x, c[0]) + bit_at(x, c[1]) + bit_at(x, c[2]);
      if (ones != 1) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

std::uint64_t count_solutions_tn(const CoverInstance& inst, TnCountStats* stats) {
  validate_instance(inst);

  // Map the bits that appear in a clause onto dense network sites.
  std::vector<int> site_of(static_cast<std::size_t>(inst.n_bits), -1);
  int n_used = 0;
  for (const auto& c : inst.clauses) {
    for (int b : c) {
      if (site_of[static_cast<std::size_t>(b)] < 0) site_of[static_cast<std::size_t>(b)] = n_used++;
    }
  }
  const int free_bits = inst.n_bits - n_used;
  if (stats) stats->free_bits = free_bits;
  if (n_used == 0) return std::uint64_t{1} << free_bits;

  NetworkSpec spec;
  spec.n_sites = n_used;
  std::vector<cplx> clause_amps(8, 0.0);
  clause_amps[1] = clause_amps[2] = clause_amps[4] = 1.0;  // exactly one bit set
  for (const auto& c : inst.clauses) {
    spec.tensors.push_back({{site_of[static_cast<std::size_t>(c[0])],
                             site_of[static_cast<std::size_t>(c[1])],
                             site_of[static_cast<std::size_t>(c[2])]},
                            clause_amps});
  }

  const TensorNetwork net = build_counting_network(spec);
  const ContractionOrder order = plan_order(net);
  ContractStats cstats;
  const Tensor scalar = contract_network(net, order, kDefaultMemCap, &cstats);
  if (stats) stats->peak_elems = cstats.peak_elems;
  if (!scalar.legs.empty()) throw std::runtime_error("exact cover: contraction left open legs");

  const double value = scalar.data.at(0).real();
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > 1e-6 * std::max(1.0, std::abs(value)) || rounded < 0.0) {
    throw std::runtime_error("exact cover: contraction did not produce an integer count");
  }
  return static_cast<std::uint64_t>(rounded) << free_bits;
}

CoverInstance lattice_to_instance(const LatticeGraph& lattice) {
  CoverInstance inst;
  inst.n_bits = lattice.n_sites;
  for (const auto& t : lattice.up_triangles) inst.clauses.push_back({t[0], t[1], t[2]});
  validate_instance(inst);
  return inst;
}

}  // namespace simplexnet
