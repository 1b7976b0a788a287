#include "simplexnet/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace simplexnet {

namespace {

void append_edge(std::vector<std::pair<int, int>>& edges, std::set<std::pair<int, int>>& seen,
                 int i, int j) {
  auto e = std::minmax(i, j);
  std::pair<int, int> p{e.first, e.second};
  if (seen.insert(p).second) edges.push_back(p);
}

void validate_triangles(int n_sites, const std::vector<std::array<int, 3>>& tris) {
  std::set<std::array<int, 3>> seen;
  for (const auto& t : tris) {
    for (int s : t) {
      if (s < 0 || s >= n_sites) throw std::invalid_argument("triangle site out of range");
    }
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
      throw std::invalid_argument("triangle sites must be distinct");
    }
    std::array<int, 3> key = t;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate up-triangle");
  }
}

std::vector<std::pair<int, int>> derive_edges(const std::vector<std::array<int, 3>>& tris) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const auto& t : tris) {
    append_edge(edges, seen, t[0], t[1]);
    append_edge(edges, seen, t[0], t[2]);
    append_edge(edges, seen, t[1], t[2]);
  }
  return edges;
}

}  // namespace

LatticeGraph LatticeGraph::from_triangles(int n_sites, std::vector<std::array<int, 3>> tris) {
  if (n_sites < 1) throw std::invalid_argument("lattice needs at least one site");
  validate_triangles(n_sites, tris);
  std::vector<bool> covered(static_cast<std::size_t>(n_sites), false);
  for (const auto& t : tris)
    for (int s : t) covered[static_cast<std::size_t>(s)] = true;
  for (int s = 0; s < n_sites; ++s) {
    if (!covered[static_cast<std::size_t>(s)]) {
      throw std::invalid_argument("site belongs to no up-triangle");
    }
  }
  LatticeGraph g;
  g.n_sites = n_sites;
  g.edges = derive_edges(tris);
  g.up_triangles = std::move(tris);
  g.kind = LatticeKind::Explicit;
  return g;
}

LatticeGraph LatticeGraph::explicit_graph(int n_sites, std::vector<std::array<int, 3>> tris,
                                          std::vector<std::pair<int, int>> extra_edges) {
  if (n_sites < 1) throw std::invalid_argument("lattice needs at least one site");
  validate_triangles(n_sites, tris);
  LatticeGraph g;
  g.n_sites = n_sites;
  g.edges = derive_edges(tris);
  std::set<std::pair<int, int>> seen(g.edges.begin(), g.edges.end());
  for (auto [i, j] : extra_edges) {
    if (i < 0 || i >= n_sites || j < 0 || j >= n_sites || i == j) {
      throw std::invalid_argument("bad explicit edge");
    }
    append_edge(g.edges, seen, i, j);
  }
  g.up_triangles = std::move(tris);
  g.kind = LatticeKind::Explicit;
  return g;
}

int LatticeGraph::edge_index(int i, int j) const {
  auto e = std::minmax(i, j);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].first == e.first && edges[k].second == e.second) return static_cast<int>(k);
  }
  return -1;
}

int patch_site(int row, int pos) { return row * (row + 1) / 2 + pos; }

std::pair<int, int> patch_row_pos(int site) {
  int row = 0;
  while (patch_site(row + 1, 0) <= site) ++row;
  return {row, site - patch_site(row, 0)};
}

LatticeGraph build_triangular_patch(int side) {
  if (side < 1) throw std::invalid_argument("patch side must be >= 1");
  std::vector<std::array<int, 3>> tris;
  for (int r = 0; r < side; ++r) {
    for (int p = 0; p <= r; ++p) {
      tris.push_back({patch_site(r, p), patch_site(r + 1, p), patch_site(r + 1, p + 1)});
    }
  }
  LatticeGraph g = LatticeGraph::from_triangles((side + 1) * (side + 2) / 2, std::move(tris));
  g.kind = LatticeKind::TriangularPatch;
  g.patch_side = side;
  return g;
}

LatticeGraph build_six_site_example() { return build_triangular_patch(2); }

Region make_region(int n_sites, std::vector<int> sites) {
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  if (sites.empty()) throw std::invalid_argument("region is empty");
  if (sites.front() < 0 || sites.back() >= n_sites) {
    throw std::invalid_argument("region site out of range");
  }
  if (static_cast<int>(sites.size()) >= n_sites) {
    throw std::invalid_argument("region must be a proper subset");
  }
  return Region{std::move(sites)};
}

Region triangular_core_region(const LatticeGraph& patch, int core_rows,
                              RegionPlacement placement) {
  if (patch.kind != LatticeKind::TriangularPatch || patch.patch_side < 1) {
    throw std::invalid_argument("core region requires a generated triangular patch");
  }
  if (core_rows < 1) throw std::invalid_argument("core_rows must be >= 1");
  const int side = patch.patch_side;
  if (core_rows > side) throw std::invalid_argument("core region does not fit inside the patch");

  int r0 = 0, p0 = 0;
  if (placement == RegionPlacement::Centered) {
    // Rounds toward the base, where the rows are longer.
    r0 = (side + 2 - core_rows) / 2;
    p0 = r0 / 2;
  }
  std::vector<int> sites;
  for (int i = 0; i < core_rows; ++i) {
    for (int j = 0; j <= i; ++j) sites.push_back(patch_site(r0 + i, p0 + j));
  }
  return make_region(patch.n_sites, std::move(sites));
}

int boundary_size(const LatticeGraph& lattice, const Region& region) {
  std::vector<bool> in(static_cast<std::size_t>(lattice.n_sites), false);
  for (int s : region.sites) {
    if (s < 0 || s >= lattice.n_sites) throw std::invalid_argument("region site out of range");
    in[static_cast<std::size_t>(s)] = true;
  }
  std::vector<bool> on_boundary(static_cast<std::size_t>(lattice.n_sites), false);
  for (auto [i, j] : lattice.edges) {
    const bool a = in[static_cast<std::size_t>(i)];
    const bool b = in[static_cast<std::size_t>(j)];
    if (a != b) on_boundary[static_cast<std::size_t>(a ? i : j)] = true;
  }
  int count = 0;
  for (int s : region.sites)
    if (on_boundary[static_cast<std::size_t>(s)]) ++count;
  return count;
}

SquareNetworkGraph build_square_network() {
  SquareNetworkGraph g;
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      if ((r + c) % 2 == 1) {
        g.checked_squares.push_back(
            {g.site(r, c), g.site(r, c + 1), g.site(r + 1, c), g.site(r + 1, c + 1)});
      }
    }
  }
  g.inner_region = make_region(g.n_sites, {g.site(1, 2), g.site(1, 3), g.site(2, 2), g.site(2, 3)});
  return g;
}

}  // namespace simplexnet
