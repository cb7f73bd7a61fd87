#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "slocc/errors.hpp"
#include "slocc/extended_complex.hpp"
#include "slocc/state.hpp"

namespace slocc {

// A polynomial entanglement measure invariant under determinant-1 local
// operators: eval(kappa * v) == kappa^degree * eval(v) for complex kappa,
// and eval is unchanged under SL(2,C) factors on any qubit.
struct SlInvariant {
    int arity = 0;   // qubit count the evaluator acts on
    int degree = 0;  // homogeneity degree h
    std::string name;
    std::function<Complex(const Eigen::VectorXcd&)> eval;
};

// 2(a00*a11 - a01*a10), degree 2 on two qubits.
template <typename Derived>
Complex concurrence_poly(const Eigen::MatrixBase<Derived>& v) {
    if (v.size() != 4) throw DimensionMismatch("concurrence needs 4 amplitudes");
    return 2.0 * (v(0) * v(3) - v(1) * v(2));
}

// Cayley hyperdeterminant d1 - 2*d2 + 4*d3 of a three-qubit amplitude
// tensor a_ijk, degree 4. The 3-tangle is 4*|Hdet|; the complex polynomial
// itself is kept so pencils in z stay polynomial.
template <typename Derived>
Complex three_tangle_poly(const Eigen::MatrixBase<Derived>& v) {
    if (v.size() != 8) throw DimensionMismatch("three-tangle needs 8 amplitudes");
    const Complex a000 = v(0), a001 = v(1), a010 = v(2), a011 = v(3);
    const Complex a100 = v(4), a101 = v(5), a110 = v(6), a111 = v(7);
    const Complex d1 = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
                       a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
    const Complex d2 = a000 * a111 * (a011 * a100 + a101 * a010 + a110 * a001) +
                       a011 * a100 * a101 * a010 + a011 * a100 * a110 * a001 +
                       a101 * a010 * a110 * a001;
    const Complex d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    return d1 - 2.0 * d2 + 4.0 * d3;
}

const SlInvariant& concurrence_measure();
const SlInvariant& three_tangle_measure();

// p(z) = sum_j coeffs[j] z^j with nominal degree = measure degree; the top
// coefficient may be zero (root at infinity), the list is never truncated.
struct PencilPolynomial {
    Eigen::VectorXcd coeffs;

    int nominal_degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Complex eval(const Complex& z) const {
        Complex acc(0.0, 0.0);
        for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) acc = acc * z + coeffs(j);
        return acc;
    }
};

// Coefficients of z -> measure.eval(z*psi0 + psi1), recovered by sampling at
// h+1 scaled roots of unity and inverting the discrete Fourier relation.
PencilPolynomial pencil(const SlInvariant& measure, const StatePair& pair);

}  // namespace slocc
