#include "simplexnet/simplex.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace simplexnet {

namespace {

double norm_of(const std::vector<cplx>& amps) {
  double n2 = 0.0;
  for (const cplx& a : amps) n2 += std::norm(a);
  return std::sqrt(n2);
}

}  // namespace

SimplexState::SimplexState(int arity_, std::vector<cplx> amps, std::string label_)
    : arity(arity_), amplitudes(std::move(amps)), label(std::move(label_)) {
  if (arity < 2 || arity > 4) throw std::invalid_argument("simplex arity must be 2..4");
  if (amplitudes.size() != (std::size_t{1} << arity)) {
    throw std::invalid_argument("simplex amplitude vector has wrong length");
  }
  const double n = norm_of(amplitudes);
  if (n < 1e-12) throw std::invalid_argument("simplex state is the zero vector");
  if (std::abs(n - 1.0) > 1e-12) {
    for (cplx& a : amplitudes) a /= n;
  }
}

SimplexState w_state() {
  std::vector<cplx> amps(8, 0.0);
  const double v = 1.0 / std::sqrt(3.0);
  amps[1] = amps[2] = amps[4] = v;
  return SimplexState(3, std::move(amps), "W");
}

SimplexState wbar_state() {
  std::vector<cplx> amps(8, 0.0);
  const double v = 1.0 / std::sqrt(3.0);
  amps[3] = amps[5] = amps[6] = v;
  return SimplexState(3, std::move(amps), "Wbar");
}

SimplexState ghz_state(int arity) {
  if (arity != 3 && arity != 4) throw std::invalid_argument("GHZ arity must be 3 or 4");
  std::vector<cplx> amps(std::size_t{1} << arity, 0.0);
  const double v = 1.0 / std::sqrt(2.0);
  amps.front() = v;
  amps.back() = v;
  return SimplexState(arity, std::move(amps), "GHZ");
}

SimplexState basis_simplex(int arity, std::string_view bits) {
  if (static_cast<int>(bits.size()) != arity) {
    throw std::invalid_argument("basis string length must equal arity");
  }
  std::vector<cplx> amps(std::size_t{1} << arity, 0.0);
  amps[parse_bitstring(bits)] = 1.0;
  return SimplexState(arity, std::move(amps), std::string(bits));
}

SimplexState mix(const std::vector<std::pair<SimplexState, double>>& states) {
  if (states.empty()) throw std::invalid_argument("mix: no input states");
  const int arity = states.front().first.arity;
  std::vector<cplx> amps(std::size_t{1} << arity, 0.0);
  std::string label;
  for (const auto& [s, w] : states) {
    if (s.arity != arity) throw std::invalid_argument("mix: arities differ");
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] += w * s.amplitudes[i];
    if (!label.empty()) label += "+";
    label += s.label;
  }
  if (norm_of(amps) < 1e-12) throw std::invalid_argument("mix: weights cancel to zero");
  return SimplexState(arity, std::move(amps), std::move(label));
}

SimplexState equal_superposition_simplex(int arity, const std::vector<std::string>& bitstrings,
                                         std::string label) {
  if (bitstrings.empty()) throw std::invalid_argument("equal superposition: no basis strings");
  std::vector<cplx> amps(std::size_t{1} << arity, 0.0);
  for (const std::string& bits : bitstrings) {
    if (static_cast<int>(bits.size()) != arity) {
      throw std::invalid_argument("equal superposition: string length must equal arity");
    }
    const std::uint64_t x = parse_bitstring(bits);
    if (amps[x] != cplx(0.0)) throw std::invalid_argument("equal superposition: duplicate string");
    amps[x] = 1.0;
  }
  return SimplexState(arity, std::move(amps), std::move(label));
}

SymmetricFourQubit::SymmetricFourQubit(const std::array<double, 5>& raw) {
  static constexpr std::array<double, 5> multiplicity{1, 4, 6, 4, 1};
  double n2 = 0.0;
  for (int w = 0; w < 5; ++w) n2 += multiplicity[w] * raw[w] * raw[w];
  if (n2 < 1e-24) throw std::invalid_argument("symmetric_four: zero coefficient vector");
  const double n = std::sqrt(n2);
  for (int w = 0; w < 5; ++w) coeffs[w] = raw[w] / n;
}

SimplexState SymmetricFourQubit::to_simplex() const {
  std::vector<cplx> amps(16);
  for (std::uint64_t x = 0; x < 16; ++x) {
    amps[x] = coeffs[static_cast<std::size_t>(std::popcount(x))];
  }
  return SimplexState(4, std::move(amps), "sym4");
}

SimplexState symmetric_four(const std::array<double, 5>& coeffs) {
  return SymmetricFourQubit(coeffs).to_simplex();
}

}  // namespace simplexnet
