#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace simplexnet {

using cplx = std::complex<double>;

// Site s of an n-qubit configuration x lives in bit s (site 0 = LSB).
// Bitstrings are written with site 0 as the first character, so the string
// "011" sets sites 1 and 2.
inline int bit_at(std::uint64_t x, int site) {
  return static_cast<int>((x >> site) & 1u);
}

std::uint64_t parse_bitstring(std::string_view s);
std::string format_bitstring(std::uint64_t x, int n_bits);

// Dense state vector over n qubits, unit norm.
struct PureState {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  PureState() = default;
  PureState(int n, Eigen::VectorXcd amps);  // requires unit norm within 1e-10
  static PureState normalized(int n, Eigen::VectorXcd amps);

  cplx amplitude(std::uint64_t x) const {
    return amplitudes(static_cast<Eigen::Index>(x));
  }
};

// Nonzero amplitudes of an n-qubit state, sorted by basis index. Terms are
// stored normalized; raw_norm2 keeps the squared norm of the unnormalized
// contraction (the model count when all network entries are 0/1).
struct SparseState {
  int n_qubits = 0;
  std::vector<std::pair<std::uint64_t, cplx>> terms;
  double raw_norm2 = 0.0;

  PureState to_dense() const;  // n_qubits <= 24
};

// Global-phase gauge: the largest-magnitude amplitude is made real positive,
// ties broken by lowest basis index.
void fix_gauge(PureState& s);
void fix_gauge(SparseState& s);

double overlap(const PureState& a, const PureState& b);  // |<a|b>|

}  // namespace simplexnet
