#pragma once

#include <optional>
#include <vector>

#include "slocc/extended_complex.hpp"
#include "slocc/invariants.hpp"

namespace slocc {

// The h roots of a pencil polynomial on the extended plane, counted with
// multiplicity; a degree drop of the polynomial shows up as roots at
// infinity, so the cardinality is always h.
struct RootSystem {
    std::vector<ExtendedComplex> roots;
    int qubit = 0;
    int degree = 0;
};

// All roots of p: finite roots of the effective-degree truncation via
// companion-matrix eigenvalues plus one Newton step, then (h - effective
// degree) copies of infinity. Throws IdenticallyZero when every coefficient
// vanishes (relative to nothing: the pencil is zero on the whole family).
RootSystem find_roots(const PencilPolynomial& p);

// Minimal-over-permutations max chordal distance <= tol; returns the pairing
// a[i] <-> b[perm[i]] or nothing. Multiset semantics, infinity included.
std::optional<std::vector<int>> match_root_multisets(const RootSystem& a,
                                                     const RootSystem& b, double tol);

// Representatives of the distinct values (chordal separation > tol),
// ordered deterministically: finite roots by (re, im), infinity last.
std::vector<ExtendedComplex> distinct_roots(const RootSystem& rs, double tol = 1e-8);

}  // namespace slocc
