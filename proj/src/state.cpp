#include "slocc/state.hpp"

#include <cmath>
#include <string>

namespace slocc {

namespace {

// Bit position (from the LSB) of qubit k in an n-qubit amplitude index.
inline int bit_of_qubit(int n, int k) { return n - k; }

void check_qubit_index(const PureState& state, int k) {
    if (k < 1 || k > state.n)
        throw IndexOutOfRange("qubit index " + std::to_string(k) + " outside 1.." +
                              std::to_string(state.n));
}

}  // namespace

bool invertible(const Eigen::Matrix2cd& m, double tol) {
    const double scale = m.cwiseAbs().maxCoeff();
    const double det = std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    return det > tol * scale * scale;
}

PureState make_state(int n, Eigen::VectorXcd amps) {
    if (n < 1 || n > kMaxQubits)
        throw DimensionMismatch("qubit count " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxQubits));
    if (amps.size() != (Eigen::Index{1} << n))
        throw DimensionMismatch("expected " + std::to_string(1 << n) + " amplitudes, got " +
                                std::to_string(amps.size()));
    if (amps.cwiseAbs().maxCoeff() == 0.0) throw ZeroVector("all amplitudes vanish");
    return PureState{n, std::move(amps)};
}

PureState named_state(std::string_view name) {
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s3 = 1.0 / std::sqrt(3.0);
    if (name == "ghz3") {
        Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
        a(0) = s2;
        a(7) = s2;
        return make_state(3, std::move(a));
    }
    if (name == "w3") {
        Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
        a(1) = s3;  // |001>
        a(2) = s3;  // |010>
        a(4) = s3;  // |100>
        return make_state(3, std::move(a));
    }
    if (name == "ghzw4") {
        // (|0>|GHZ> + |1>|W>)/sqrt(2) on qubits 2..4.
        Eigen::VectorXcd a = Eigen::VectorXcd::Zero(16);
        a(0b0000) = 0.5;
        a(0b0111) = 0.5;
        a(0b1001) = s2 * s3;
        a(0b1010) = s2 * s3;
        a(0b1100) = s2 * s3;
        return make_state(4, std::move(a));
    }
    if (name == "gabcd") throw MissingParams("gabcd requires the coefficient 4-tuple");
    throw UnknownName("unknown state name: " + std::string(name));
}

PureState named_state(std::string_view name, const std::array<Complex, 4>& params) {
    if (name != "gabcd") return named_state(name);
    const Complex a = params[0], b = params[1], c = params[2], d = params[3];
    const Complex alpha = (a + d) / 2.0, beta = (a - d) / 2.0;
    const Complex gamma = (b + c) / 2.0, delta = (b - c) / 2.0;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
    v(0b0000) = alpha;
    v(0b1111) = alpha;
    v(0b0011) = beta;
    v(0b1100) = beta;
    v(0b0101) = gamma;
    v(0b1010) = gamma;
    v(0b0110) = delta;
    v(0b1001) = delta;
    return make_state(4, std::move(v));
}

StatePair decompose(const PureState& state, int k) {
    check_qubit_index(state, k);
    const int b = bit_of_qubit(state.n, k);
    const Eigen::Index half = state.amps.size() / 2;
    StatePair pair{Eigen::VectorXcd(half), Eigen::VectorXcd(half)};
    const Eigen::Index low_mask = (Eigen::Index{1} << b) - 1;
    for (Eigen::Index sub = 0; sub < half; ++sub) {
        const Eigen::Index low = sub & low_mask;
        const Eigen::Index high = (sub >> b) << (b + 1);
        pair.psi0(sub) = state.amps(high | low);
        pair.psi1(sub) = state.amps(high | (Eigen::Index{1} << b) | low);
    }
    return pair;
}

PureState recombine(const StatePair& pair, int k) {
    if (pair.psi0.size() != pair.psi1.size())
        throw DimensionMismatch("psi0/psi1 sizes differ");
    const Eigen::Index half = pair.psi0.size();
    int sub_n = 0;
    while ((Eigen::Index{1} << sub_n) < half) ++sub_n;
    if ((Eigen::Index{1} << sub_n) != half) throw DimensionMismatch("length not a power of two");
    const int n = sub_n + 1;
    if (k < 1 || k > n) throw IndexOutOfRange("qubit index out of range");
    const int b = bit_of_qubit(n, k);
    Eigen::VectorXcd amps(2 * half);
    const Eigen::Index low_mask = (Eigen::Index{1} << b) - 1;
    for (Eigen::Index sub = 0; sub < half; ++sub) {
        const Eigen::Index low = sub & low_mask;
        const Eigen::Index high = (sub >> b) << (b + 1);
        amps(high | low) = pair.psi0(sub);
        amps(high | (Eigen::Index{1} << b) | low) = pair.psi1(sub);
    }
    return PureState{n, std::move(amps)};
}

Eigen::VectorXcd family_member(const StatePair& pair, const ExtendedComplex& z) {
    if (z.infinite) return pair.psi0;
    return z.value * pair.psi0 + pair.psi1;
}

PureState apply_single(const PureState& state, const Eigen::Matrix2cd& op, int k) {
    check_qubit_index(state, k);
    if (!invertible(op)) throw SingularOperator("operator on qubit " + std::to_string(k));
    const int b = bit_of_qubit(state.n, k);
    const Eigen::Index stride = Eigen::Index{1} << b;
    PureState out{state.n, state.amps};
    for (Eigen::Index base = 0; base < out.amps.size(); base += 2 * stride) {
        for (Eigen::Index low = 0; low < stride; ++low) {
            const Eigen::Index i0 = base + low;
            const Eigen::Index i1 = i0 + stride;
            const Complex v0 = state.amps(i0), v1 = state.amps(i1);
            out.amps(i0) = op(0, 0) * v0 + op(0, 1) * v1;
            out.amps(i1) = op(1, 0) * v0 + op(1, 1) * v1;
        }
    }
    return out;
}

PureState apply_local(const PureState& state, std::span<const Eigen::Matrix2cd> ops) {
    if (static_cast<int>(ops.size()) != state.n)
        throw DimensionMismatch("expected one operator per qubit");
    PureState out = state;
    for (int k = 1; k <= state.n; ++k) out = apply_single(out, ops[k - 1], k);
    return out;
}

std::optional<Complex> proportional(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b,
                                    double tol) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    const double na = a.squaredNorm();
    if (na == 0.0) return std::nullopt;
    const Complex c = a.dot(b) / na;
    const double scale = b.cwiseAbs().maxCoeff();
    if (scale == 0.0) return std::nullopt;
    const double resid = (b - c * a).cwiseAbs().maxCoeff();
    if (resid <= tol * scale) return c;
    return std::nullopt;
}

std::optional<Complex> proportional(const PureState& a, const PureState& b, double tol) {
    if (a.n != b.n) throw DimensionMismatch("qubit counts differ");
    return proportional(a.amps, b.amps, tol);
}

Eigen::Matrix2cd reduced_density_single(const PureState& state, int k) {
    const StatePair pair = decompose(state, k);
    Eigen::Matrix2cd rho;
    rho(0, 0) = pair.psi0.squaredNorm();
    rho(1, 1) = pair.psi1.squaredNorm();
    rho(0, 1) = pair.psi1.dot(pair.psi0);
    rho(1, 0) = std::conj(rho(0, 1));
    const double tr = rho(0, 0).real() + rho(1, 1).real();
    if (tr == 0.0) throw ZeroVector("zero state has no reduction");
    return rho / tr;
}

}  // namespace slocc
