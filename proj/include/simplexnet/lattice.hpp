#pragma once

#include <array>
#include <utility>
#include <vector>

namespace simplexnet {

enum class LatticeKind { TriangularPatch, SquareNetwork, Explicit };

// Sites, up-triangles T* and the derived edge set T. Edges are the
// deduplicated union of up-triangle edges so each link is counted once;
// explicit graphs may carry extra edges (e.g. a triangle-free chain).
struct LatticeGraph {
  int n_sites = 0;
  std::vector<std::array<int, 3>> up_triangles;  // (top, below-left, below-right) on patches
  std::vector<std::pair<int, int>> edges;        // (min,max), first-seen order
  LatticeKind kind = LatticeKind::Explicit;
  int patch_side = 0;  // > 0 only for generated patches

  // Every site must belong to at least one up-triangle.
  static LatticeGraph from_triangles(int n_sites, std::vector<std::array<int, 3>> tris);
  // No coverage requirement; extra edges allowed.
  static LatticeGraph explicit_graph(int n_sites, std::vector<std::array<int, 3>> tris,
                                     std::vector<std::pair<int, int>> extra_edges = {});

  int edge_index(int i, int j) const;  // -1 if absent
  bool contains_edge(int i, int j) const { return edge_index(i, j) >= 0; }
};

// The 6-site example lattice of the six-spin ground state: apex-numbered
// side-2 patch with up-triangles {0,1,2}, {1,3,4}, {2,4,5}.
LatticeGraph build_six_site_example();

// Triangle-shaped patch of `side` rows of up-pointing triangles,
// (side+1)(side+2)/2 sites numbered row-major from the apex.
LatticeGraph build_triangular_patch(int side);

// Row-major numbering helpers for patches.
int patch_site(int row, int pos);
std::pair<int, int> patch_row_pos(int site);

struct Region {
  std::vector<int> sites;  // sorted, unique
};

// Validates: nonempty, in range, proper subset.
Region make_region(int n_sites, std::vector<int> sites);

enum class RegionPlacement { Apex, Centered };

// Triangular sub-region of core_rows rows (n_A = 3, 6, 10, ...).
Region triangular_core_region(const LatticeGraph& patch, int core_rows,
                              RegionPlacement placement = RegionPlacement::Apex);

// dA: number of region sites sharing a lattice edge with the complement.
int boundary_size(const LatticeGraph& lattice, const Region& region);

// 24 sites on a wrapped 4x6 grid; plaquette (r,c) is checked iff r+c is odd,
// which gives 12 checked squares with every site in exactly two of them.
// The inner region is the corner set of checked plaquette (1,2).
struct SquareNetworkGraph {
  int n_sites = 24;
  int rows = 4;
  int cols = 6;
  std::vector<std::array<int, 4>> checked_squares;  // (TL, TR, BL, BR)
  Region inner_region;

  int site(int r, int c) const { return ((r % rows + rows) % rows) * cols + ((c % cols + cols) % cols); }
};

SquareNetworkGraph build_square_network();

}  // namespace simplexnet
