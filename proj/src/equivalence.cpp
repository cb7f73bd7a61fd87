#include "slocc/equivalence.hpp"

#include <algorithm>
#include <cmath>

namespace slocc {

namespace {

bool proportional_matrices(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b, double tol) {
    Eigen::Index r, c;
    a.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(b(r, c)) == 0.0) return false;
    const Complex ratio = b(r, c) / a(r, c);
    return ((b - ratio * a).cwiseAbs().maxCoeff()) <= tol * b.cwiseAbs().maxCoeff();
}

// Depth-first lexicographic walk over per-qubit candidates with cached
// partial applications; returns the first tensor product carrying A to B.
bool search_products(const PureState& psi_a, const PureState& psi_b,
                     const CandidateSet& cands, double prop_tol, int qubit,
                     std::vector<Eigen::Matrix2cd>& chosen, Complex& scalar) {
    const int n = psi_a.n;
    if (qubit > n) {
        const auto c = proportional(psi_a, psi_b, prop_tol);
        if (c) scalar = *c;
        return c.has_value();
    }
    for (const auto& op : cands.per_qubit[qubit - 1]) {
        const PureState next = apply_single(psi_a, op, qubit);
        chosen[qubit - 1] = op;
        if (search_products(next, psi_b, cands, prop_tol, qubit + 1, chosen, scalar))
            return true;
    }
    return false;
}

}  // namespace

RootSystem roots_for_qubit(const PureState& state, int k, const SlInvariant& measure) {
    if (measure.arity != state.n - 1)
        throw DimensionMismatch("measure arity must be n-1");
    RootSystem rs = find_roots(pencil(measure, decompose(state, k)));
    rs.qubit = k;
    return rs;
}

std::vector<Eigen::Matrix2cd> candidate_operators(const RootSystem& roots_a,
                                                  const RootSystem& roots_b,
                                                  double root_tol) {
    const auto da = distinct_roots(roots_a, root_tol);
    const auto db = distinct_roots(roots_b, root_tol);
    if (da.size() < 3 || db.size() < 3)
        throw DegenerateRoots("need three distinct roots on both sides");

    const ExtendedComplex a1 = da[0], a2 = da[1], a3 = da[2];
    std::vector<Eigen::Matrix2cd> ops;

    const int nb = static_cast<int>(db.size());
    std::array<int, 3> pick{};
    for (pick[0] = 0; pick[0] < nb; ++pick[0])
        for (pick[1] = 0; pick[1] < nb; ++pick[1])
            for (pick[2] = 0; pick[2] < nb; ++pick[2]) {
                if (pick[0] == pick[1] || pick[0] == pick[2] || pick[1] == pick[2]) continue;
                MoebiusMap map = identity_map();
                try {
                    map = from_three_points(a1, a2, a3, db[pick[0]], db[pick[1]],
                                            db[pick[2]]);
                } catch (const DegenerateTriple&) {
                    continue;
                }
                const Eigen::Matrix2cd op = root_action_to_operator(map);
                bool dup = false;
                for (const auto& prev : ops)
                    if (proportional_matrices(prev, op, 1e-9)) { dup = true; break; }
                if (!dup) ops.push_back(op);
            }
    return ops;
}

EquivalenceVerdict equivalence_check(const PureState& psi_a, const PureState& psi_b,
                                     const SlInvariant& measure, double prop_tol,
                                     double root_tol) {
    if (psi_a.n != psi_b.n) throw DimensionMismatch("states differ in qubit count");
    if (measure.arity != psi_a.n - 1) throw DimensionMismatch("measure arity must be n-1");

    EquivalenceVerdict verdict;
    if (measure.degree < 3) {
        verdict.reason = "measure degree " + std::to_string(measure.degree) +
                         " < 3: the procedure needs three distinct roots";
        return verdict;
    }

    CandidateSet cands;
    cands.per_qubit.resize(psi_a.n);
    for (int k = 1; k <= psi_a.n; ++k) {
        try {
            const RootSystem ra = roots_for_qubit(psi_a, k, measure);
            const RootSystem rb = roots_for_qubit(psi_b, k, measure);
            cands.per_qubit[k - 1] = candidate_operators(ra, rb, root_tol);
        } catch (const IdenticallyZero&) {
            verdict.reason = "pencil vanishes identically at qubit " + std::to_string(k);
            return verdict;
        } catch (const DegenerateRoots&) {
            verdict.reason = "fewer than three distinct roots at qubit " + std::to_string(k);
            return verdict;
        }
        if (cands.per_qubit[k - 1].empty()) {
            verdict.outcome = Outcome::NotEquivalent;
            return verdict;
        }
    }

    std::vector<Eigen::Matrix2cd> chosen(psi_a.n);
    Complex scalar;
    if (search_products(psi_a, psi_b, cands, prop_tol, 1, chosen, scalar)) {
        verdict.outcome = Outcome::Equivalent;
        verdict.witness = std::move(chosen);
        verdict.scalar = scalar;
        return verdict;
    }
    verdict.outcome = Outcome::NotEquivalent;
    return verdict;
}

bool check_root_transformation(const PureState& state, const Eigen::Matrix2cd& op,
                               int traced_qubit, int acting_qubit,
                               const SlInvariant& measure, double tol) {
    const RootSystem before = roots_for_qubit(state, traced_qubit, measure);
    const PureState moved = apply_single(state, op, acting_qubit);
    const RootSystem after = roots_for_qubit(moved, traced_qubit, measure);

    if (acting_qubit != traced_qubit)
        return match_root_multisets(before, after, tol).has_value();

    RootSystem expected = before;
    expected.roots = apply_all(operator_root_action(op), before.roots);
    return match_root_multisets(expected, after, tol).has_value();
}

NormalFormResult normal_form(const PureState& state, double tol) {
    if (state.n != 4) throw DimensionMismatch("normal form is implemented for four qubits");
    const SlInvariant& measure = three_tangle_measure();

    NormalFormResult result{state, {}, 0.0, false};
    for (int k = 1; k <= 4; ++k) {
        NormalSystemMap nsm;
        try {
            const RootSystem rs = roots_for_qubit(state, k, measure);
            nsm = normalize_to_normal_system(rs.roots);
        } catch (const IdenticallyZero&) {
            throw NonGeneric("pencil vanishes identically at qubit " + std::to_string(k));
        } catch (const DegenerateRoots&) {
            throw NonGeneric("root system at qubit " + std::to_string(k) +
                             " lacks four distinct roots");
        }
        result.ops[k - 1] = root_action_to_operator(nsm.map);
    }
    result.state = apply_local(state, result.ops);

    auto deviation = [](const PureState& s) {
        double dev = 0.0;
        for (int k = 1; k <= 4; ++k) {
            const Eigen::Matrix2cd rho = reduced_density_single(s, k);
            dev = std::max(dev,
                           (rho - 0.5 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
        }
        return dev;
    };

    result.reduction_deviation = deviation(result.state);
    if (result.reduction_deviation > tol) {
        // Roots are normal but the reductions drifted: one balancing pass,
        // rho_k^{-1/2} per qubit with determinant renormalized.
        for (int k = 1; k <= 4; ++k) {
            const Eigen::Matrix2cd rho = reduced_density_single(result.state, k);
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
            const Eigen::Vector2d ev = es.eigenvalues().cwiseMax(1e-300);
            const Eigen::Matrix2cd inv_sqrt = es.eigenvectors() *
                                              ev.cwiseSqrt().cwiseInverse().asDiagonal() *
                                              es.eigenvectors().adjoint();
            const Complex det = inv_sqrt(0, 0) * inv_sqrt(1, 1) - inv_sqrt(0, 1) * inv_sqrt(1, 0);
            const Eigen::Matrix2cd balance = inv_sqrt / std::sqrt(det);
            result.state = apply_single(result.state, balance, k);
            result.ops[k - 1] = balance * result.ops[k - 1];
        }
        result.polished = true;
        result.reduction_deviation = deviation(result.state);
    }
    return result;
}

}  // namespace slocc
