#pragma once

#include <array>
#include <string>
#include <vector>

#include "slocc/invariants.hpp"
#include "slocc/moebius.hpp"
#include "slocc/roots.hpp"
#include "slocc/state.hpp"

namespace slocc {

enum class Outcome { Equivalent, NotEquivalent, Inconclusive };

// Equivalent carries a verifying witness: apply_local(psiA, witness) is
// proportional to psiB with the reported scalar. Inconclusive is reserved
// for inputs the procedure cannot judge (degenerate roots, vanishing
// pencils, measure degree < 3), never used as a soft failure.
struct EquivalenceVerdict {
    Outcome outcome = Outcome::Inconclusive;
    std::vector<Eigen::Matrix2cd> witness;
    Complex scalar{0.0, 0.0};
    std::string reason;
};

struct CandidateSet {
    std::vector<std::vector<Eigen::Matrix2cd>> per_qubit;
};

// Split off qubit k, restrict the measure to the resulting one-parameter
// family and take the roots of that polynomial.
RootSystem roots_for_qubit(const PureState& state, int k, const SlInvariant& measure);

// One fixed ordered triple of distinct roots of A against every ordered
// 3-subset of distinct roots of B: at most 3! * C(h,3) operators per qubit,
// deduplicated up to scale.
std::vector<Eigen::Matrix2cd> candidate_operators(const RootSystem& roots_a,
                                                  const RootSystem& roots_b,
                                                  double root_tol = 1e-8);

// The full root-based decision: per-qubit candidates, then a lexicographic
// search over tensor products, stopping at the first verifying witness.
EquivalenceVerdict equivalence_check(const PureState& psi_a, const PureState& psi_b,
                                     const SlInvariant& measure, double prop_tol = 1e-7,
                                     double root_tol = 1e-8);

// The two transformation laws of a root system under a local operator: the
// system of qubit k is untouched by operators on other qubits, and moves by
// the adjugate Moebius action when the operator acts on qubit k itself.
bool check_root_transformation(const PureState& state, const Eigen::Matrix2cd& op,
                               int traced_qubit, int acting_qubit,
                               const SlInvariant& measure, double tol = 1e-8);

struct NormalFormResult {
    PureState state;
    std::array<Eigen::Matrix2cd, 4> ops;
    double reduction_deviation = 0.0;  // max entrywise |rho_k - I/2|
    bool polished = false;             // balancing fallback was applied
};

// Non-iterative normal form of a generic four-qubit state: bring each of the
// four root systems to a normal system and apply the associated operators;
// all single-qubit reductions then sit at I/2. A state whose roots fail to
// be four distinct points per qubit is rejected as NonGeneric.
NormalFormResult normal_form(const PureState& state, double tol = 1e-8);

}  // namespace slocc
