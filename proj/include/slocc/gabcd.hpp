#pragma once

#include <optional>
#include <vector>

#include "slocc/invariants.hpp"
#include "slocc/state.hpp"

namespace slocc {

// Coefficients of the generic four-qubit family
//   (a+d)/2 (|0000>+|1111>) + (a-d)/2 (|0011>+|1100>)
// + (b+c)/2 (|0101>+|1010>) + (b-c)/2 (|0110>+|1001>).
// Generic means the squares a^2, b^2, c^2, d^2 are pairwise distinct.
struct GabcdParams {
    Complex a, b, c, d;

    Eigen::Vector4cd tuple() const { return Eigen::Vector4cd(a, b, c, d); }
};

// Pairwise gaps between the squares, measured against the largest square.
bool is_generic(const GabcdParams& p, double margin = 1e-8);

PureState gabcd_state(const GabcdParams& p);

// Coefficients [A, 0, -2(2B+A), 0, A] of the closed-form root polynomial at
// qubit 1, with A = (b^2-c^2)(a^2-d^2) and B = (c^2-d^2)(a^2-b^2); matches
// the three-tangle pencil up to one overall scalar.
PencilPolynomial root_quartic(const GabcdParams& p);

// Deterministic representative of a coefficient tuple: divide by the phase
// of the first largest-modulus entry, folded modulo pi so that a tuple and
// its negation stay distinct representatives (the orbit bookkeeping counts
// them separately; they describe the same projective state).
Eigen::Vector4cd canonical_tuple(const Eigen::Vector4cd& t);

// All tuples reachable by the 24 coefficient permutations and the 8 even
// sign patterns (identity, the six double flips, the all-four flip),
// canonicalized; 192 tuples for generic parameters.
std::vector<Eigen::Vector4cd> weyl_orbit(const GabcdParams& p);

// Brute-force cross-check of the orbit: every tensor product of four cube
// rotations applied to the state, keeping the images that land back in the
// family and reading their coefficient tuples off the amplitudes. Must
// reproduce weyl_orbit exactly.
std::vector<Eigen::Vector4cd> operator_orbit_check(const GabcdParams& p);

// Coefficient tuple of a state of the family shape, or nothing if any
// amplitude sits outside the eight support slots or breaks the pairing.
std::optional<Eigen::Vector4cd> read_gabcd_tuple(const PureState& state,
                                                 double tol = 1e-9);

}  // namespace slocc
