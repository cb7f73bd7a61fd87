#include "slocc/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace slocc {

const SlInvariant& concurrence_measure() {
    static const SlInvariant m{2, 2, "concurrence",
                               [](const Eigen::VectorXcd& v) { return concurrence_poly(v); }};
    return m;
}

const SlInvariant& three_tangle_measure() {
    static const SlInvariant m{3, 4, "three-tangle",
                               [](const Eigen::VectorXcd& v) { return three_tangle_poly(v); }};
    return m;
}

PencilPolynomial pencil(const SlInvariant& measure, const StatePair& pair) {
    const Eigen::Index dim = Eigen::Index{1} << measure.arity;
    if (pair.psi0.size() != dim || pair.psi1.size() != dim)
        throw DimensionMismatch("pair dimension does not match measure arity");

    const int h = measure.degree;
    const int m = h + 1;

    // Nodes scaled so z*psi0 and psi1 have comparable size; keeps the
    // Vandermonde/DFT inversion well conditioned when the two parts differ
    // by orders of magnitude.
    const double n0 = pair.psi0.norm();
    const double n1 = pair.psi1.norm();
    double s = (n0 > 0.0 && n1 > 0.0) ? n1 / n0 : 1.0;
    s = std::clamp(s, 1e-6, 1e6);

    Eigen::VectorXcd values(m);
    for (int j = 0; j < m; ++j) {
        const Complex node = s * std::exp(Complex(0.0, 2.0 * M_PI * j / m));
        values(j) = measure.eval(node * pair.psi0 + pair.psi1);
    }

    PencilPolynomial p{Eigen::VectorXcd(m)};
    for (int k = 0; k < m; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < m; ++j)
            acc += values(j) * std::exp(Complex(0.0, -2.0 * M_PI * j * k / m));
        p.coeffs(k) = acc / (static_cast<double>(m) * std::pow(s, k));
    }

    // Interpolation rounding leaves ~eps-size residue in coefficients that
    // vanish identically; that residue would split multiple roots, so drop it.
    const double cmax = p.coeffs.cwiseAbs().maxCoeff();
    for (int k = 0; k < m; ++k)
        if (std::abs(p.coeffs(k)) <= 1e-13 * cmax) p.coeffs(k) = Complex(0.0, 0.0);
    return p;
}

}  // namespace slocc
