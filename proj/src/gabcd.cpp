#include "slocc/gabcd.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "slocc/moebius.hpp"

namespace slocc {

namespace {

constexpr std::array<int, 8> kSupport = {0, 3, 5, 6, 9, 10, 12, 15};

bool tuple_close(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b, double tol) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

// Orbit accumulator: quantized-key fast path for repeats, linear scan as the
// authority so grid-boundary straddles cannot split one tuple into two.
class TupleSet {
  public:
    bool insert(const Eigen::Vector4cd& t) {
        if (items_.empty()) scale_ = std::max(t.cwiseAbs().maxCoeff(), 1e-300);
        const auto key = quantize(t);
        if (auto it = index_.find(key); it != index_.end())
            if (tuple_close(items_[it->second], t, 1e-8 * scale_)) return false;
        for (size_t i = 0; i < items_.size(); ++i) {
            if (tuple_close(items_[i], t, 1e-8 * scale_)) {
                index_[key] = i;
                return false;
            }
        }
        index_[key] = items_.size();
        items_.push_back(t);
        return true;
    }

    std::vector<Eigen::Vector4cd> sorted() const {
        std::vector<Eigen::Vector4cd> out = items_;
        std::sort(out.begin(), out.end(),
                  [](const Eigen::Vector4cd& a, const Eigen::Vector4cd& b) {
                      for (int i = 0; i < 4; ++i) {
                          if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
                          if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
                      }
                      return false;
                  });
        return out;
    }

  private:
    std::array<long long, 8> quantize(const Eigen::Vector4cd& t) const {
        std::array<long long, 8> key{};
        for (int i = 0; i < 4; ++i) {
            key[2 * i] = llround(t(i).real() / scale_ * 1e6);
            key[2 * i + 1] = llround(t(i).imag() / scale_ * 1e6);
        }
        return key;
    }

    std::vector<Eigen::Vector4cd> items_;
    std::map<std::array<long long, 8>, size_t> index_;
    double scale_ = 1.0;
};

}  // namespace

bool is_generic(const GabcdParams& p, double margin) {
    const std::array<Complex, 4> sq = {p.a * p.a, p.b * p.b, p.c * p.c, p.d * p.d};
    double maxmag = 0.0;
    for (const auto& s : sq) maxmag = std::max(maxmag, std::abs(s));
    if (maxmag == 0.0) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(sq[i] - sq[j]) < margin * maxmag) return false;
    return true;
}

PureState gabcd_state(const GabcdParams& p) {
    return named_state("gabcd", {p.a, p.b, p.c, p.d});
}

PencilPolynomial root_quartic(const GabcdParams& p) {
    if (!is_generic(p))
        throw NonGeneric("coefficient squares are not pairwise distinct");
    const Complex a2 = p.a * p.a, b2 = p.b * p.b, c2 = p.c * p.c, d2 = p.d * p.d;
    const Complex A = (b2 - c2) * (a2 - d2);
    const Complex B = (c2 - d2) * (a2 - b2);
    PencilPolynomial quartic{Eigen::VectorXcd(5)};
    quartic.coeffs << A, 0.0, -2.0 * (2.0 * B + A), 0.0, A;
    return quartic;
}

Eigen::Vector4cd canonical_tuple(const Eigen::Vector4cd& t) {
    const double maxmod = t.cwiseAbs().maxCoeff();
    if (maxmod == 0.0) throw ZeroTuple("cannot canonicalize the zero tuple");
    int lead = 0;
    while (std::abs(t(lead)) < maxmod * (1.0 - 1e-9)) ++lead;
    double theta = std::arg(t(lead));
    if (theta > M_PI / 2.0) theta -= M_PI;
    else if (theta <= -M_PI / 2.0) theta += M_PI;
    return t * std::exp(Complex(0.0, -theta));
}

std::vector<Eigen::Vector4cd> weyl_orbit(const GabcdParams& p) {
    if (!is_generic(p))
        throw NonGeneric("coefficient squares are not pairwise distinct");
    static constexpr std::array<unsigned, 8> kSignMasks = {0b0000, 0b0011, 0b0101, 0b0110,
                                                           0b1001, 0b1010, 0b1100, 0b1111};
    const Eigen::Vector4cd base = p.tuple();
    std::array<int, 4> perm = {0, 1, 2, 3};
    TupleSet set;
    do {
        for (unsigned mask : kSignMasks) {
            Eigen::Vector4cd t;
            for (int i = 0; i < 4; ++i)
                t(i) = (mask >> i) & 1u ? -base(perm[i]) : base(perm[i]);
            set.insert(canonical_tuple(t));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return set.sorted();
}

std::optional<Eigen::Vector4cd> read_gabcd_tuple(const PureState& state, double tol) {
    if (state.n != 4) return std::nullopt;
    const double scale = state.amps.cwiseAbs().maxCoeff();
    for (int i = 0; i < 16; ++i) {
        if (std::find(kSupport.begin(), kSupport.end(), i) != kSupport.end()) continue;
        if (std::abs(state.amps(i)) > tol * scale) return std::nullopt;
    }
    const Complex alpha = (state.amps(0) + state.amps(15)) / 2.0;
    const Complex beta = (state.amps(3) + state.amps(12)) / 2.0;
    const Complex gamma = (state.amps(5) + state.amps(10)) / 2.0;
    const Complex delta = (state.amps(6) + state.amps(9)) / 2.0;
    const Eigen::Vector4cd tuple(alpha + beta, gamma + delta, gamma - delta, alpha - beta);
    if (tuple.cwiseAbs().maxCoeff() <= tol * scale) return std::nullopt;

    const PureState rebuilt = gabcd_state({tuple(0), tuple(1), tuple(2), tuple(3)});
    if ((rebuilt.amps - state.amps).cwiseAbs().maxCoeff() > tol * scale) return std::nullopt;
    return tuple;
}

std::vector<Eigen::Vector4cd> operator_orbit_check(const GabcdParams& p) {
    if (!is_generic(p))
        throw NonGeneric("coefficient squares are not pairwise distinct");
    const auto& group = cube_rotation_group();
    const PureState base = gabcd_state(p);

    TupleSet set;
    // 24^4 products, applied one factor at a time so each level is reused
    // across the whole subtree below it.
    for (const auto& g1 : group) {
        const PureState s1 = apply_single(base, g1.u, 1);
        for (const auto& g2 : group) {
            const PureState s2 = apply_single(s1, g2.u, 2);
            for (const auto& g3 : group) {
                const PureState s3 = apply_single(s2, g3.u, 3);
                for (const auto& g4 : group) {
                    const PureState s4 = apply_single(s3, g4.u, 4);
                    if (const auto tuple = read_gabcd_tuple(s4)) {
                        // The readoff is only defined modulo a unit phase,
                        // so record both signed representatives of the ray.
                        const Eigen::Vector4cd c = canonical_tuple(*tuple);
                        set.insert(c);
                        set.insert(-c);
                    }
                }
            }
        }
    }
    return set.sorted();
}

}  // namespace slocc
