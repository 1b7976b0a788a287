#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "simplexnet/state.hpp"

namespace simplexnet {

// Ancillary simplex state on 3 or 4 qubits of leg dimension chi = 2.
// Amplitudes are indexed by the local bitstring (leg k = bit k) and are
// normalized on construction.
struct SimplexState {
  int arity = 0;
  std::vector<cplx> amplitudes;  // length 2^arity, unit norm
  std::string label;

  SimplexState() = default;
  SimplexState(int arity, std::vector<cplx> amps, std::string label);

  cplx amplitude(std::uint64_t local) const { return amplitudes[local]; }
};

SimplexState w_state();                          // (|001>+|010>+|100>)/sqrt(3)
SimplexState wbar_state();                       // (|011>+|101>+|110>)/sqrt(3)
SimplexState ghz_state(int arity);               // (|0..0>+|1..1>)/sqrt(2), arity 3 or 4
SimplexState basis_simplex(int arity, std::string_view bits);  // one basis string

// Normalized linear combination; all arities must match and the weighted sum
// must not cancel to zero.
SimplexState mix(const std::vector<std::pair<SimplexState, double>>& states);

// Equal superposition over a set of allowed basis strings (the catalog rows
// of the outward-entangling-power table).
SimplexState equal_superposition_simplex(int arity, const std::vector<std::string>& bitstrings,
                                         std::string label);

// Exchange-symmetric 4-qubit family: one real coefficient per Hamming-weight
// class, normalized so a0^2 + 4 a1^2 + 6 a2^2 + 4 a3^2 + a4^2 = 1.
struct SymmetricFourQubit {
  std::array<double, 5> coeffs{};

  explicit SymmetricFourQubit(const std::array<double, 5>& raw);  // normalizes
  SimplexState to_simplex() const;
};

SimplexState symmetric_four(const std::array<double, 5>& coeffs);

}  // namespace simplexnet
