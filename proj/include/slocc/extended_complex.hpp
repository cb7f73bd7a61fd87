#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "slocc/errors.hpp"

namespace slocc {

using Complex = std::complex<double>;

// A point of the extended complex plane: either a finite value or the point
// at infinity. Arithmetic that has to stay stable near infinity goes through
// the homogeneous lift (p, q) with z = p/q and infinity = (1, 0).
struct ExtendedComplex {
    Complex value{0.0, 0.0};
    bool infinite = false;

    ExtendedComplex() = default;
    ExtendedComplex(Complex v) : value(v) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error("ExtendedComplex: non-finite components");
    }
    ExtendedComplex(double re) : ExtendedComplex(Complex(re, 0.0)) {}

    static ExtendedComplex inf() {
        ExtendedComplex z;
        z.infinite = true;
        return z;
    }

    static ExtendedComplex from_projective(const Complex& p, const Complex& q) {
        if (q == Complex(0.0, 0.0)) {
            if (p == Complex(0.0, 0.0)) throw Error("projective point 0/0");
            return inf();
        }
        const Complex v = p / q;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return inf();
        return ExtendedComplex(v);
    }

    Eigen::Vector2cd lift() const {
        return infinite ? Eigen::Vector2cd(Complex(1, 0), Complex(0, 0))
                        : Eigen::Vector2cd(value, Complex(1, 0));
    }

    bool is_zero() const { return !infinite && value == Complex(0.0, 0.0); }
};

// Distance between the images of two points on the unit sphere (range [0, 2],
// antipodes at 2). Computed from unit-normalized homogeneous lifts, so points
// near infinity compare as stably as points near the origin.
inline double chordal(const ExtendedComplex& a, const ExtendedComplex& b) {
    const Eigen::Vector2cd pa = a.lift().normalized();
    const Eigen::Vector2cd pb = b.lift().normalized();
    return 2.0 * std::abs(pa(0) * pb(1) - pa(1) * pb(0));
}

inline bool approx(const ExtendedComplex& a, const ExtendedComplex& b, double tol) {
    return chordal(a, b) <= tol;
}

// Spherical coordinates of a root on the unit sphere; theta in [0, pi],
// phi in [0, 2*pi). theta = 0 is the north pole (z = infinity, |psi0|),
// theta = pi the south pole (z = 0, |psi1|).
struct BlochPoint {
    double theta = 0.0;
    double phi = 0.0;
};

inline BlochPoint to_bloch(const ExtendedComplex& z) {
    if (z.infinite) return {0.0, 0.0};
    if (z.is_zero()) return {M_PI, 0.0};
    const double theta = 2.0 * std::atan2(1.0, std::abs(z.value));
    double phi = std::fmod(-std::arg(z.value), 2.0 * M_PI);
    if (phi < 0.0) phi += 2.0 * M_PI;
    return {theta, phi};
}

// Inverse of to_bloch: z = cot(theta/2) * exp(-i*phi). Poles map exactly.
inline ExtendedComplex from_bloch(const BlochPoint& b) {
    if (b.theta < 0.0 || b.theta > M_PI) throw Error("from_bloch: theta out of [0, pi]");
    if (b.theta == 0.0) return ExtendedComplex::inf();
    if (b.theta == M_PI) return ExtendedComplex(Complex(0.0, 0.0));
    const double r = std::cos(b.theta / 2.0) / std::sin(b.theta / 2.0);
    return ExtendedComplex(r * std::exp(Complex(0.0, -b.phi)));
}

}  // namespace slocc
