#include "slocc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace slocc {

namespace {

// Leading coefficients below this fraction of the largest one are an
// explicit degree drop, not noise to chase.
constexpr double kDegreeDropTol = 1e-12;
constexpr double kResidualTol = 1e-9;

Complex horner(const Eigen::VectorXcd& c, Eigen::Index top, const Complex& z) {
    Complex acc(0.0, 0.0);
    for (Eigen::Index j = top; j >= 0; --j) acc = acc * z + c(j);
    return acc;
}

bool lex_less(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.infinite != b.infinite) return b.infinite;  // finite first
    if (a.infinite) return false;
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
}

}  // namespace

RootSystem find_roots(const PencilPolynomial& p) {
    const Eigen::Index m = p.coeffs.size();
    const int h = p.nominal_degree();
    const double cmax = p.coeffs.cwiseAbs().maxCoeff();
    if (cmax == 0.0) throw IdenticallyZero("pencil polynomial vanishes identically");

    Eigen::Index deg = m - 1;
    while (deg > 0 && std::abs(p.coeffs(deg)) <= kDegreeDropTol * cmax) --deg;

    RootSystem rs;
    rs.degree = h;
    rs.roots.reserve(h);

    if (deg >= 1) {
        std::vector<Complex> finite;
        if (deg == 1) {
            finite.push_back(-p.coeffs(0) / p.coeffs(1));
        } else {
            Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
            for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
            for (Eigen::Index i = 0; i < deg; ++i)
                companion(i, deg - 1) = -p.coeffs(i) / p.coeffs(deg);
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
            for (Eigen::Index i = 0; i < deg; ++i) finite.push_back(solver.eigenvalues()(i));
        }
        for (Complex z : finite) {
            // One Newton step; skip when p' is too small (multiple root).
            Complex deriv(0.0, 0.0);
            for (Eigen::Index j = deg; j >= 1; --j)
                deriv = deriv * z + static_cast<double>(j) * p.coeffs(j);
            if (std::abs(deriv) > 1e-14 * cmax) z -= horner(p.coeffs, deg, z) / deriv;

            const double bound =
                kResidualTol * cmax * std::pow(std::max(1.0, std::abs(z)), h);
            if (std::abs(horner(p.coeffs, m - 1, z)) > bound)
                throw Error("root residual exceeds tolerance");
            rs.roots.emplace_back(z);
        }
    }
    for (Eigen::Index i = deg; i < m - 1; ++i) rs.roots.push_back(ExtendedComplex::inf());

    std::sort(rs.roots.begin(), rs.roots.end(), lex_less);
    return rs;
}

std::optional<std::vector<int>> match_root_multisets(const RootSystem& a, const RootSystem& b,
                                                     double tol) {
    if (a.roots.size() != b.roots.size()) return std::nullopt;
    const int n = static_cast<int>(a.roots.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<int> best;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (int i = 0; i < n && cost < best_cost; ++i)
            cost = std::max(cost, chordal(a.roots[i], b.roots[perm[i]]));
        if (cost < best_cost) {
            best_cost = cost;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (best_cost <= tol) return best;
    return std::nullopt;
}

std::vector<ExtendedComplex> distinct_roots(const RootSystem& rs, double tol) {
    std::vector<ExtendedComplex> sorted = rs.roots;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    std::vector<ExtendedComplex> out;
    for (const auto& z : sorted) {
        bool seen = false;
        for (const auto& w : out)
            if (chordal(z, w) <= tol) { seen = true; break; }
        if (!seen) out.push_back(z);
    }
    return out;
}

}  // namespace slocc
