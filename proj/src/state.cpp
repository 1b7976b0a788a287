#include "simplexnet/state.hpp"

#include <cmath>
#include <stdexcept>

namespace simplexnet {

std::uint64_t parse_bitstring(std::string_view s) {
  if (s.empty() || s.size() > 64) {
    throw std::invalid_argument("bitstring must have 1..64 characters");
  }
  std::uint64_t x = 0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (s[p] == '1') {
      x |= std::uint64_t{1} << p;
    } else if (s[p] != '0') {
      throw std::invalid_argument("bitstring may contain only 0 and 1");
    }
  }
  return x;
}

std::string format_bitstring(std::uint64_t x, int n_bits) {
  std::string s(static_cast<std::size_t>(n_bits), '0');
  for (int p = 0; p < n_bits; ++p) {
    if (bit_at(x, p)) s[static_cast<std::size_t>(p)] = '1';
  }
  return s;
}

PureState::PureState(int n, Eigen::VectorXcd amps) : n_qubits(n) {
  if (n < 1 || n > 28) throw std::invalid_argument("PureState: bad qubit count");
  if (amps.size() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument("PureState: amplitude vector has wrong length");
  }
  const double nrm = amps.norm();
  if (std::abs(nrm - 1.0) > 1e-10) {
    throw std::invalid_argument("PureState: vector is not normalized");
  }
  amplitudes = std::move(amps);
}

PureState PureState::normalized(int n, Eigen::VectorXcd amps) {
  const double nrm = amps.norm();
  if (nrm < 1e-14) throw std::invalid_argument("PureState: zero vector");
  amps /= nrm;
  return PureState(n, std::move(amps));
}

PureState SparseState::to_dense() const {
  if (n_qubits > 24) {
    throw std::invalid_argument("SparseState::to_dense: n_qubits > 24");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  for (const auto& [x, a] : terms) amps(static_cast<Eigen::Index>(x)) = a;
  return PureState::normalized(n_qubits, std::move(amps));
}

namespace {

// Phase that makes the leading amplitude real positive.
cplx gauge_factor(const cplx& leading) {
  const double m = std::abs(leading);
  if (m < 1e-300) return cplx(1.0, 0.0);
  return std::conj(leading) / m;
}

}  // namespace

void fix_gauge(PureState& s) {
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
    const double m = std::abs(s.amplitudes(i));
    if (m > best_mag + 1e-12) {
      best_mag = m;
      best = i;
    }
  }
  s.amplitudes *= gauge_factor(s.amplitudes(best));
}

void fix_gauge(SparseState& s) {
  if (s.terms.empty()) return;
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    const double m = std::abs(s.terms[i].second);
    if (m > best_mag + 1e-12) {
      best_mag = m;
      best = i;
    }
  }
  const cplx f = gauge_factor(s.terms[best].second);
  for (auto& [x, a] : s.terms) a *= f;
}

double overlap(const PureState& a, const PureState& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("overlap: qubit counts differ");
  }
  return std::abs(a.amplitudes.dot(b.amplitudes));
}

}  // namespace simplexnet
