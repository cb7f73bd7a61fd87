#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "slocc/errors.hpp"
#include "slocc/extended_complex.hpp"

namespace slocc {

// Dense n-qubit pure state (2 <= n <= 8). Amplitude index i addresses the
// basis ket |bin(i)> with qubit 1 as the most significant bit. States are
// projective: nothing here ever normalizes, and two states are "the same"
// iff they are proportional by a nonzero complex scalar.
struct PureState {
    int n = 0;
    Eigen::VectorXcd amps;
};

// Components of |psi> = |0>_k |psi0> + |1>_k |psi1> after splitting off one
// qubit. The two parts are in general neither normalized nor orthogonal.
struct StatePair {
    Eigen::VectorXcd psi0;
    Eigen::VectorXcd psi1;
};

constexpr int kMaxQubits = 8;

// |det| relative to the squared largest entry, so the guard is scale-free.
bool invertible(const Eigen::Matrix2cd& m, double tol = 1e-12);

PureState make_state(int n, Eigen::VectorXcd amps);

// Reference states: "ghz3", "w3", "ghzw4" (no parameters) and "gabcd"
// (requires the coefficient 4-tuple).
PureState named_state(std::string_view name);
PureState named_state(std::string_view name, const std::array<Complex, 4>& params);

// Split qubit k (1-based) off: psi0/psi1 hold the amplitudes where qubit k
// is 0/1, with the order of the remaining qubits preserved.
StatePair decompose(const PureState& state, int k);

// Reinsert qubit k; recombine(decompose(s, k), k) == s exactly.
PureState recombine(const StatePair& pair, int k);

// z*psi0 + psi1; z = infinity gives psi0 (projective limit).
Eigen::VectorXcd family_member(const StatePair& pair, const ExtendedComplex& z);

// (ops[0] x ... x ops[n-1]) |psi> by successive single-qubit contractions.
PureState apply_local(const PureState& state, std::span<const Eigen::Matrix2cd> ops);

// Single factor acting on qubit k, identity elsewhere.
PureState apply_single(const PureState& state, const Eigen::Matrix2cd& op, int k);

// Least-squares scalar c with b ~ c*a; accepted when the max componentwise
// residual relative to the largest amplitude of b is <= tol.
std::optional<Complex> proportional(const Eigen::VectorXcd& a,
                                    const Eigen::VectorXcd& b, double tol);
std::optional<Complex> proportional(const PureState& a, const PureState& b, double tol);

// Tr_{all but k}(|psi><psi|), normalized to unit trace.
Eigen::Matrix2cd reduced_density_single(const PureState& state, int k);

}  // namespace slocc
