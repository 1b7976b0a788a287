#include "simplexnet/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace simplexnet {

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream iss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return tokens;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer token: " + s);
  return v;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number token: " + s);
  return v;
}

cplx to_amplitude(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return cplx(to_double(s), 0.0);
  return cplx(to_double(s.substr(0, comma)), to_double(s.substr(comma + 1)));
}

std::string amplitude_token(const cplx& a) {
  std::ostringstream os;
  os << std::setprecision(17);
  if (a.imag() == 0.0) {
    os << a.real();
  } else {
    os << a.real() << ',' << a.imag();
  }
  return os.str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return is;
}

// Built-in composite labels denote equal superpositions over the allowed
// basis strings, matching the outward-entangling-power catalog.
SimplexState builtin_simplex(const std::string& label) {
  std::string key = label;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "w") return w_state();
  if (key == "wbar") return wbar_state();
  if (key == "ghz" || key == "ghz3") return ghz_state(3);
  if (key == "ghz4") return ghz_state(4);
  if (key == "111") return basis_simplex(3, "111");
  if (key == "w+wbar") {
    return equal_superposition_simplex(3, {"001", "010", "100", "011", "101", "110"}, label);
  }
  if (key == "w+111") {
    return equal_superposition_simplex(3, {"001", "010", "100", "111"}, label);
  }
  if (key == "w+wbar+111") {
    return equal_superposition_simplex(
        3, {"001", "010", "100", "011", "101", "110", "111"}, label);
  }
  throw std::invalid_argument("unknown simplex label: " + label);
}

struct ParsedLines {
  int n_sites = -1;
  std::string kind;
  int patch_side = 0;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::pair<int, int>> extra_edges;
  std::vector<std::vector<int>> regions;
  std::map<std::string, SimplexState> simplex_defs;
  std::vector<std::pair<std::string, std::string>> assignments;  // (triangle or *, label)
};

ParsedLines parse_lines(std::istream& is) {
  ParsedLines out;
  std::string raw;
  while (std::getline(is, raw)) {
    const std::vector<std::string> t = tokens_of(strip_comment(raw));
    if (t.empty()) continue;
    const std::string& tag = t[0];
    if (tag == "n" && t.size() == 2) {
      out.n_sites = to_int(t[1]);
    } else if (tag == "k" && t.size() >= 2) {
      out.kind = t[1];
      if (t.size() == 3) out.patch_side = to_int(t[2]);
    } else if (tag == "t" && t.size() == 4) {
      out.triangles.push_back({to_int(t[1]), to_int(t[2]), to_int(t[3])});
    } else if (tag == "e" && t.size() == 3) {
      out.extra_edges.emplace_back(to_int(t[1]), to_int(t[2]));
    } else if (tag == "r" && t.size() >= 2) {
      std::vector<int> sites;
      for (std::size_t i = 1; i < t.size(); ++i) sites.push_back(to_int(t[i]));
      out.regions.push_back(std::move(sites));
    } else if (tag == "s" && t.size() >= 4) {
      const int arity = to_int(t[1]);
      const std::string label = t[2];
      if (t.size() != 3 + (std::size_t{1} << arity)) {
        throw std::invalid_argument("simplex line has wrong amplitude count");
      }
      std::vector<cplx> amps;
      for (std::size_t i = 3; i < t.size(); ++i) amps.push_back(to_amplitude(t[i]));
      out.simplex_defs.insert_or_assign(label, SimplexState(arity, std::move(amps), label));
    } else if (tag == "sym4" && t.size() == 6) {
      std::array<double, 5> coeffs{};
      for (int i = 0; i < 5; ++i) coeffs[static_cast<std::size_t>(i)] = to_double(t[i + 1]);
      out.simplex_defs.insert_or_assign("sym4", symmetric_four(coeffs));
    } else if (tag == "a" && t.size() == 3) {
      out.assignments.emplace_back(t[1], t[2]);
    } else {
      throw std::invalid_argument("unrecognized line: " + raw);
    }
  }
  return out;
}

LatticeGraph lattice_from(const ParsedLines& p) {
  if (p.n_sites < 1) throw std::invalid_argument("lattice file is missing the n line");
  if (p.kind == "patch") {
    LatticeGraph g = build_triangular_patch(p.patch_side);
    if (g.n_sites != p.n_sites || g.up_triangles != p.triangles) {
      throw std::invalid_argument("lattice file disagrees with the declared patch side");
    }
    return g;
  }
  return LatticeGraph::explicit_graph(p.n_sites, p.triangles, p.extra_edges);
}

std::vector<Region> regions_from(const ParsedLines& p, int n_sites) {
  std::vector<Region> regions;
  for (const auto& sites : p.regions) regions.push_back(make_region(n_sites, sites));
  return regions;
}

void write_lattice_lines(std::ostream& os, const LatticeGraph& lattice,
                         const std::vector<Region>& regions) {
  if (lattice.kind == LatticeKind::TriangularPatch) {
    os << "k patch " << lattice.patch_side << "\n";
  }
  os << "n " << lattice.n_sites << "\n";
  for (const auto& t : lattice.up_triangles) {
    os << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << "\n";
  }
  std::set<std::pair<int, int>> derived;
  for (const auto& t : lattice.up_triangles) {
    derived.insert(std::minmax(t[0], t[1]));
    derived.insert(std::minmax(t[0], t[2]));
    derived.insert(std::minmax(t[1], t[2]));
  }
  for (const auto& e : lattice.edges) {
    if (!derived.count(e)) os << "e " << e.first << ' ' << e.second << "\n";
  }
  for (const Region& r : regions) {
    os << "r";
    for (int s : r.sites) os << ' ' << s;
    os << "\n";
  }
}

}  // namespace

void write_lattice(std::ostream& os, const LatticeGraph& lattice,
                   const std::vector<Region>& regions) {
  write_lattice_lines(os, lattice, regions);
}

LatticeFile read_lattice(std::istream& is) {
  const ParsedLines p = parse_lines(is);
  if (!p.assignments.empty() || !p.simplex_defs.empty()) {
    throw std::invalid_argument("lattice file contains network lines");
  }
  LatticeFile f;
  f.lattice = lattice_from(p);
  f.regions = regions_from(p, f.lattice.n_sites);
  return f;
}

void write_lattice_file(const std::string& path, const LatticeGraph& lattice,
                        const std::vector<Region>& regions) {
  auto os = open_out(path);
  write_lattice(os, lattice, regions);
}

LatticeFile read_lattice_file(const std::string& path) {
  auto is = open_in(path);
  return read_lattice(is);
}

NetworkFile read_network(std::istream& is) {
  const ParsedLines p = parse_lines(is);
  NetworkFile f;
  f.lattice = lattice_from(p);
  f.regions = regions_from(p, f.lattice.n_sites);

  auto resolve = [&](const std::string& label) -> SimplexState {
    const auto it = p.simplex_defs.find(label);
    if (it != p.simplex_defs.end()) return it->second;
    return builtin_simplex(label);
  };

  const std::size_t n_tri = f.lattice.up_triangles.size();
  std::vector<SimplexState> assignment(n_tri);
  std::vector<bool> assigned(n_tri, false);
  for (const auto& [which, label] : p.assignments) {
    if (which == "*") {
      for (std::size_t t = 0; t < n_tri; ++t) {
        assignment[t] = resolve(label);
        assigned[t] = true;
      }
    } else {
      const int t = to_int(which);
      if (t < 0 || static_cast<std::size_t>(t) >= n_tri) {
        throw std::invalid_argument("assignment references a missing triangle");
      }
      assignment[static_cast<std::size_t>(t)] = resolve(label);
      assigned[static_cast<std::size_t>(t)] = true;
    }
  }
  for (std::size_t t = 0; t < n_tri; ++t) {
    if (!assigned[t]) throw std::invalid_argument("network file leaves a triangle unassigned");
  }
  f.assignment = std::move(assignment);
  return f;
}

NetworkFile read_network_file(const std::string& path) {
  auto is = open_in(path);
  return read_network(is);
}

void write_network(std::ostream& os, const LatticeGraph& lattice,
                   const std::vector<SimplexState>& assignment,
                   const std::vector<Region>& regions) {
  if (assignment.size() != lattice.up_triangles.size()) {
    throw std::invalid_argument("write_network: one simplex per triangle required");
  }
  write_lattice_lines(os, lattice, regions);
  std::set<std::string> defined;
  for (const SimplexState& s : assignment) {
    if (defined.insert(s.label).second) {
      os << "s " << s.arity << ' ' << s.label;
      for (const cplx& a : s.amplitudes) os << ' ' << amplitude_token(a);
      os << "\n";
    }
  }
  for (std::size_t t = 0; t < assignment.size(); ++t) {
    os << "a " << t << ' ' << assignment[t].label << "\n";
  }
}

void write_network_file(const std::string& path, const LatticeGraph& lattice,
                        const std::vector<SimplexState>& assignment,
                        const std::vector<Region>& regions) {
  auto os = open_out(path);
  write_network(os, lattice, assignment, regions);
}

void write_instance(std::ostream& os, const CoverInstance& inst) {
  os << "p ec " << inst.n_bits << ' ' << inst.clauses.size() << "\n";
  for (const auto& c : inst.clauses) {
    os << "c " << c[0] << ' ' << c[1] << ' ' << c[2] << "\n";
  }
}

CoverInstance read_instance(std::istream& is) {
  CoverInstance inst;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::string raw;
  while (std::getline(is, raw)) {
    const std::vector<std::string> t = tokens_of(strip_comment(raw));
    if (t.empty()) continue;
    if (t[0] == "p") {
      if (t.size() != 4 || t[1] != "ec") throw std::invalid_argument("bad instance header");
      inst.n_bits = to_int(t[2]);
      declared_clauses = static_cast<std::size_t>(to_int(t[3]));
      have_header = true;
    } else if (t[0] == "c") {
      if (t.size() != 4) throw std::invalid_argument("bad clause line: " + raw);
      inst.clauses.push_back({to_int(t[1]), to_int(t[2]), to_int(t[3])});
    } else {
      throw std::invalid_argument("unrecognized instance line: " + raw);
    }
  }
  if (!have_header) throw std::invalid_argument("instance file is missing the p line");
  if (inst.clauses.size() != declared_clauses) {
    throw std::invalid_argument("instance clause count disagrees with the header");
  }
  validate_instance(inst);
  return inst;
}

void write_instance_file(const std::string& path, const CoverInstance& inst) {
  auto os = open_out(path);
  write_instance(os, inst);
}

CoverInstance read_instance_file(const std::string& path) {
  auto is = open_in(path);
  return read_instance(is);
}

void write_state_csv(std::ostream& os, const SparseState& state) {
  os << "bitstring,re,im\n" << std::setprecision(17);
  for (const auto& [x, a] : state.terms) {
    os << format_bitstring(x, state.n_qubits) << ',' << a.real() << ',' << a.imag() << "\n";
  }
}

void write_state_csv(std::ostream& os, const PureState& state) {
  SparseState sparse;
  sparse.n_qubits = state.n_qubits;
  sparse.raw_norm2 = 1.0;
  for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
    if (std::abs(state.amplitudes(i)) > 1e-12) {
      sparse.terms.emplace_back(static_cast<std::uint64_t>(i), state.amplitudes(i));
    }
  }
  write_state_csv(os, sparse);
}

PureState read_state_csv(std::istream& is) {
  std::string line;
  int n = -1;
  std::vector<std::pair<std::uint64_t, cplx>> terms;
  while (std::getline(is, line)) {
    if (line.empty() || line == "bitstring,re,im" || line[0] == '#') continue;
    std::istringstream iss(line);
    std::string bits, re, im;
    if (!std::getline(iss, bits, ',') || !std::getline(iss, re, ',') || !std::getline(iss, im)) {
      throw std::invalid_argument("bad state row: " + line);
    }
    if (n < 0) {
      n = static_cast<int>(bits.size());
    } else if (static_cast<int>(bits.size()) != n) {
      throw std::invalid_argument("state rows disagree on qubit count");
    }
    terms.emplace_back(parse_bitstring(bits), cplx(to_double(re), to_double(im)));
  }
  if (n < 1) throw std::invalid_argument("state file has no amplitude rows");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  for (const auto& [x, a] : terms) amps(static_cast<Eigen::Index>(x)) = a;
  return PureState::normalized(n, std::move(amps));
}

void write_state_csv_file(const std::string& path, const PureState& state) {
  auto os = open_out(path);
  write_state_csv(os, state);
}

PureState read_state_csv_file(const std::string& path) {
  auto is = open_in(path);
  return read_state_csv(is);
}

}  // namespace simplexnet
