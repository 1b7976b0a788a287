#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "simplexnet/density.hpp"
#include "simplexnet/engine.hpp"
#include "simplexnet/exactcover.hpp"
#include "simplexnet/frustration.hpp"
#include "simplexnet/harness.hpp"
#include "simplexnet/io.hpp"
#include "simplexnet/network.hpp"
#include "simplexnet/spectral.hpp"

namespace sn = simplexnet;

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string tok = csv.substr(pos, comma == std::string::npos ? csv.npos : comma - pos);
    if (!tok.empty()) out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

sn::RegionPlacement placement_of(const std::string& name) {
  if (name == "apex") return sn::RegionPlacement::Apex;
  if (name == "centered") return sn::RegionPlacement::Centered;
  throw std::invalid_argument("placement must be apex or centered");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simplex tensor networks on frustrated lattices"};
  app.require_subcommand(1);

  // contract
  std::string net_path, method = "diagonal", out_path;
  auto* contract = app.add_subcommand("contract", "contract a network file to a state vector");
  contract->add_option("--network", net_path, "network file")->required();
  contract->add_option("--method", method, "diagonal|pairwise")->default_str("diagonal");
  contract->add_option("--out", out_path, "output state CSV")->required();

  // eig
  std::string lat_path;
  double coupling = 1.0, lambda = 1e-3;
  auto* eig = app.add_subcommand("eig", "lowest eigenpair of the transverse-field Hamiltonian");
  eig->add_option("--lattice", lat_path, "lattice file")->required();
  eig->add_option("--J", coupling, "uniform coupling")->default_val(1.0);
  eig->add_option("--lambda", lambda, "transverse field")->default_val(1e-3);
  eig->add_option("--out", out_path, "output state CSV")->required();

  // entropy
  std::string state_path, region_csv;
  auto* ent = app.add_subcommand("entropy", "von Neumann entropy of a region");
  ent->add_option("--state", state_path, "state CSV")->required();
  ent->add_option("--region", region_csv, "comma-separated region sites")->required();
  ent->add_option("--out", out_path, "output text file");

  // ground
  int coupling_int = 1;
  auto* ground = app.add_subcommand("ground", "classical ground manifold by exhaustion");
  ground->add_option("--lattice", lat_path, "lattice file")->required();
  ground->add_option("--J", coupling_int, "uniform integer coupling")->default_val(1);
  ground->add_option("--out", out_path, "output manifold file")->required();

  // xcover
  std::string inst_path;
  auto* xcover = app.add_subcommand("xcover", "count Exact Cover solutions");
  xcover->add_option("--instance", inst_path, "instance file")->required();
  xcover->add_option("--method", method, "tn|brute")->default_str("tn");

  // entpower
  std::string sides_csv = "3,4,5,6", placement_name = "centered";
  auto* entpower = app.add_subcommand("entpower", "outward entangling power of the simplex catalog");
  entpower->add_option("--sides", sides_csv, "patch sides to scan")->default_str("3,4,5,6");
  entpower->add_option("--placement", placement_name, "apex|centered")->default_str("centered");
  entpower->add_option("--out", out_path, "output CSV")->required();

  // sixspin
  auto* sixspin = app.add_subcommand("sixspin", "six-site small-field ground state report");
  sixspin->add_option("--out", out_path, "output text file")->required();

  // scan4
  sn::ScanConfig scan_cfg;
  auto* scan4 = app.add_subcommand("scan4", "symmetric 4-qubit simplex entropy scan");
  scan4->add_option("--grid", scan_cfg.grid_resolution, "grid points per coefficient")
      ->default_val(3);
  scan4->add_option("--seed", scan_cfg.seed, "restart seed")->default_val(7);
  scan4->add_option("--restarts", scan_cfg.restarts, "seeded restarts")->default_val(1);
  scan4->add_option("--out", out_path, "output CSV")->required();

  // aniso
  auto* aniso = app.add_subcommand("aniso", "anisotropic-coupling demonstration");
  aniso->add_option("--out", out_path, "output text file")->required();

  // wannier
  std::string wannier_sides = "1,2,3,4,5";
  auto* wannier = app.add_subcommand("wannier", "finite-patch degeneracy exponents");
  wannier->add_option("--sides", wannier_sides, "patch sides")->default_str("1,2,3,4,5");
  wannier->add_option("--out", out_path, "output text file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (contract->parsed()) {
      const sn::NetworkFile file = sn::read_network_file(net_path);
      const sn::NetworkSpec spec = sn::NetworkSpec::from_lattice(file.lattice, file.assignment);
      if (method == "diagonal") {
        const sn::SparseState state = sn::contract_diagonal(spec);
        auto os = open_out(out_path);
        sn::write_state_csv(os, state);
        std::printf("support=%zu raw_norm2=%.6f\n", state.terms.size(), state.raw_norm2);
      } else if (method == "pairwise") {
        sn::ContractStats stats;
        const sn::PureState state =
            sn::contract_pairwise(spec, sn::plan_order(spec), sn::kDefaultMemCap, &stats);
        auto os = open_out(out_path);
        sn::write_state_csv(os, state);
        std::printf("peak_intermediate=%zu\n", stats.peak_elems);
      } else {
        throw std::invalid_argument("method must be diagonal or pairwise");
      }
    } else if (eig->parsed()) {
      const sn::LatticeFile file = sn::read_lattice_file(lat_path);
      sn::HamiltonianSpec spec{file.lattice,
                               std::vector<double>(file.lattice.edges.size(), coupling), lambda};
      const sn::PureState state = sn::ground_state_small_lambda(spec);
      Eigen::VectorXd real = state.amplitudes.real();
      Eigen::VectorXd hv(real.size());
      sn::build_hamiltonian(spec).apply(real, hv);
      std::printf("E0 = %.6f\n", real.dot(hv));
      sn::write_state_csv_file(out_path, state);
    } else if (ent->parsed()) {
      const sn::PureState state = sn::read_state_csv_file(state_path);
      const sn::Region region = sn::make_region(state.n_qubits, parse_int_list(region_csv));
      const double s = sn::entropy_bits(sn::partial_trace(state, region));
      std::printf("S = %.6f ebits\n", s);
      if (!out_path.empty()) {
        auto os = open_out(out_path);
        char buf[64];
        std::snprintf(buf, sizeof buf, "S = %.6f ebits\n", s);
        os << buf;
      }
    } else if (ground->parsed()) {
      const sn::LatticeFile file = sn::read_lattice_file(lat_path);
      const sn::GroundManifold manifold = sn::enumerate_ground(
          file.lattice, std::vector<int>(file.lattice.edges.size(), coupling_int));
      auto os = open_out(out_path);
      os << "M=" << manifold.configurations.size() << " E0=" << manifold.energy << "\n";
      for (std::uint64_t x : manifold.configurations) {
        os << sn::format_bitstring(x, file.lattice.n_sites) << "\n";
      }
      std::printf("M=%zu E0=%lld\n", manifold.configurations.size(), manifold.energy);
    } else if (xcover->parsed()) {
      const sn::CoverInstance inst = sn::read_instance_file(inst_path);
      if (method == "tn") {
        sn::TnCountStats stats;
        const std::uint64_t count = sn::count_solutions_tn(inst, &stats);
        std::printf("count=%llu peak_intermediate=%zu free_bits=%d\n",
                    static_cast<unsigned long long>(count), stats.peak_elems, stats.free_bits);
      } else if (method == "brute") {
        std::printf("count=%llu\n",
                    static_cast<unsigned long long>(sn::count_solutions_bruteforce(inst)));
      } else {
        throw std::invalid_argument("method must be tn or brute");
      }
    } else if (entpower->parsed()) {
      const sn::EntanglingPowerReport report =
          sn::run_entangling_power(parse_int_list(sides_csv), placement_of(placement_name));
      auto os = open_out(out_path);
      os << report.to_csv();
      for (const auto& check : report.checks) {
        if (check.best_side < 0) {
          std::printf("%s: no scanned side provides all three regions\n",
                      check.simplex.c_str());
        } else {
          std::printf("%s: best side %d, max residual %.4f\n", check.simplex.c_str(),
                      check.best_side, check.best_residual);
        }
      }
    } else if (sixspin->parsed()) {
      const sn::SixSpinReport report = sn::run_six_spin();
      auto os = open_out(out_path);
      os << report.to_text();
      std::printf("overlap=%.6f classes=%zu\n", report.method_overlap, report.classes.size());
    } else if (scan4->parsed()) {
      const sn::ScanResult result = sn::run_scan4(scan_cfg);
      auto os = open_out(out_path);
      os << result.to_csv(scan_cfg);
      std::printf("best_entropy=%.4f pattern_residual=%.6f evals=%zu\n", result.best_entropy,
                  result.pattern_residual, result.trace.size());
    } else if (aniso->parsed()) {
      const sn::AnisotropyReport report = sn::run_anisotropy();
      auto os = open_out(out_path);
      os << report.to_text();
      std::printf("M=%llu E0=%lld unfrustrated=%s\n",
                  static_cast<unsigned long long>(report.degeneracy), report.energy,
                  report.unfrustrated ? "yes" : "no");
    } else if (wannier->parsed()) {
      const auto points = sn::wannier_estimate(parse_int_list(wannier_sides));
      std::string text = sn::provenance_header("wannier", "sides=" + wannier_sides) + "\n";
      text += "side,n,M,log2M_over_n\n";
      for (const auto& p : points) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d,%d,%llu,%.4f\n", p.side, p.n,
                      static_cast<unsigned long long>(p.degeneracy), p.exponent);
        text += buf;
      }
      text +=
          "# open-boundary finite patches; no extrapolation to the thermodynamic exponent\n";
      if (!out_path.empty()) {
        auto os = open_out(out_path);
        os << text;
      }
      std::fputs(text.c_str(), stdout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
