#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "slocc/errors.hpp"
#include "slocc/extended_complex.hpp"

namespace slocc {

// Fractional-linear map z -> (az + b)/(cz + d) on the extended plane,
// represented by its (invertible) coefficient matrix. The matrix is only
// meaningful up to a nonzero scalar.
struct MoebiusMap {
    Eigen::Matrix2cd m;
};

MoebiusMap moebius(const Eigen::Matrix2cd& m);
MoebiusMap identity_map();

ExtendedComplex apply(const MoebiusMap& map, const ExtendedComplex& z);
std::vector<ExtendedComplex> apply_all(const MoebiusMap& map,
                                       std::span<const ExtendedComplex> zs);

// apply(compose(m1, m2), z) == apply(m1, apply(m2, z))
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);
MoebiusMap inverse(const MoebiusMap& map);

// Same map up to scale, decided by action on three probe points.
bool same_map(const MoebiusMap& a, const MoebiusMap& b, double tol = 1e-10);

Eigen::Matrix2cd adjugate(const Eigen::Matrix2cd& m);

// The map zeta -> (d*zeta - b)/(-c*zeta + a) induced on a root system by the
// operator (a b; c d) acting on the traced-out qubit.
MoebiusMap operator_root_action(const Eigen::Matrix2cd& op);

// Inverse direction: the (det-normalized) operator whose induced root action
// is the given map; operator_root_action(root_action_to_operator(M)) ~ M.
Eigen::Matrix2cd root_action_to_operator(const MoebiusMap& map);

// The unique map with p_i -> q_i for two triples of pairwise-distinct points.
MoebiusMap from_three_points(const ExtendedComplex& p1, const ExtendedComplex& p2,
                             const ExtendedComplex& p3, const ExtendedComplex& q1,
                             const ExtendedComplex& q2, const ExtendedComplex& q3);

using CrossRatio = ExtendedComplex;

// (z3-z1)/(z3-z2) * (z4-z2)/(z4-z1), with limits at infinity taken by factor
// cancellation. Needs at least three distinct points.
CrossRatio cross_ratio(const ExtendedComplex& z1, const ExtendedComplex& z2,
                       const ExtendedComplex& z3, const ExtendedComplex& z4);

// The values the cross-ratio takes under reorderings of its arguments:
// {l, 1/l, 1-l, 1/(1-l), (l-1)/l, l/(l-1)}, deduplicated for special l.
std::vector<CrossRatio> cross_ratio_orbit(const CrossRatio& lambda);

// The four solutions {z0, 1/z0, -z0, -1/z0} of 4 z^2 / (1 + z^2)^2 = lambda,
// obtained from the quadratic in z^2 and checked by back-substitution.
std::array<ExtendedComplex, 4> normal_system_solutions(const CrossRatio& lambda);

// One of the 24 rotations of the sphere preserving a cube aligned with the
// coordinate axes, as a phase-canonicalized SU(2) matrix plus the generator
// word ("e" for the identity; letters x, y, z are quarter turns).
struct CubeRotation {
    Eigen::Matrix2cd u;
    std::string word;
};

// Closure of the three quarter-turn generators under multiplication, modulo
// global phase; exactly 24 elements, built once.
const std::vector<CubeRotation>& cube_rotation_group();

// First nonzero entry in row-major order made real and positive.
Eigen::Matrix2cd canonical_phase(const Eigen::Matrix2cd& u);

struct NormalSystemMap {
    MoebiusMap map;
    ExtendedComplex z0;
};

// A Moebius map sending four pairwise-distinct roots onto a normal system
// {z0, 1/z0, -z0, -1/z0}; unique up to the 24 cube rotations. The returned
// representative is fixed by preferring |z0| >= 1 and arg z0 in [0, pi/2),
// tie-broken lexicographically on (Re, Im).
NormalSystemMap normalize_to_normal_system(std::span<const ExtendedComplex> roots);

}  // namespace slocc
