#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "simplexnet/lattice.hpp"

namespace simplexnet {

// Exact Cover instance: every 3-bit clause must take value 001, 010 or 100.
struct CoverInstance {
  int n_bits = 0;
  std::vector<std::array<int, 3>> clauses;  // distinct indices, duplicate-free list
};

void validate_instance(const CoverInstance& inst);

struct TnCountStats {
  std::size_t peak_elems = 0;
  int free_bits = 0;
};

// Counts satisfying assignments by contracting the clause tensor network
// (0/1 clause indicators, copy projectors at shared bits, all physical legs
// closed with ones). Bits in no clause contribute a factor 2 analytically.
std::uint64_t count_solutions_tn(const CoverInstance& inst, TnCountStats* stats = nullptr);

// Exhaustive oracle over all 2^n assignments.
std::uint64_t count_solutions_bruteforce(const CoverInstance& inst);

// One clause per up-triangle; bits are the lattice sites.
CoverInstance lattice_to_instance(const LatticeGraph& lattice);

}  // namespace simplexnet
