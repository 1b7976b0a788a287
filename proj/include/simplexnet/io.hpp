#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "simplexnet/exactcover.hpp"
#include "simplexnet/lattice.hpp"
#include "simplexnet/simplex.hpp"
#include "simplexnet/state.hpp"

namespace simplexnet {

// Plain-text lattice file: `k` kind line, `n <n_sites>`, one `t <i> <j> <k>`
// line per up-triangle, `e <i> <j>` for explicit extra edges and
// `r <i> <j> ...` for regions. `#` starts a comment.
struct LatticeFile {
  LatticeGraph lattice;
  std::vector<Region> regions;
};

void write_lattice(std::ostream& os, const LatticeGraph& lattice,
                   const std::vector<Region>& regions = {});
LatticeFile read_lattice(std::istream& is);
void write_lattice_file(const std::string& path, const LatticeGraph& lattice,
                        const std::vector<Region>& regions = {});
LatticeFile read_lattice_file(const std::string& path);

// Network file: lattice lines plus simplex definitions
//   s <arity> <label> <2^arity amplitudes>   (amplitude token: re or re,im)
//   sym4 <a0> <a1> <a2> <a3> <a4>            (defines label "sym4")
// and per-triangle assignments `a <triangle> <label>` (`a * <label>` assigns
// every triangle). Labels resolve against file definitions first, then the
// built-in catalog: W, Wbar, GHZ, GHZ4, 111, W+Wbar, W+111, W+Wbar+111.
struct NetworkFile {
  LatticeGraph lattice;
  std::vector<Region> regions;
  std::vector<SimplexState> assignment;  // one per up-triangle
};

NetworkFile read_network(std::istream& is);
NetworkFile read_network_file(const std::string& path);
void write_network(std::ostream& os, const LatticeGraph& lattice,
                   const std::vector<SimplexState>& assignment,
                   const std::vector<Region>& regions = {});
void write_network_file(const std::string& path, const LatticeGraph& lattice,
                        const std::vector<SimplexState>& assignment,
                        const std::vector<Region>& regions = {});

// DIMACS-like instance file: `p ec <n_bits> <n_clauses>` then `c <i> <j> <k>`.
void write_instance(std::ostream& os, const CoverInstance& inst);
CoverInstance read_instance(std::istream& is);
void write_instance_file(const std::string& path, const CoverInstance& inst);
CoverInstance read_instance_file(const std::string& path);

// State CSV: header `bitstring,re,im`, one row per nonzero amplitude.
void write_state_csv(std::ostream& os, const SparseState& state);
void write_state_csv(std::ostream& os, const PureState& state);
PureState read_state_csv(std::istream& is);
void write_state_csv_file(const std::string& path, const PureState& state);
PureState read_state_csv_file(const std::string& path);

}  // namespace simplexnet
