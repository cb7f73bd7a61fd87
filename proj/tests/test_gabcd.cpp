#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "slocc/equivalence.hpp"
#include "slocc/gabcd.hpp"
#include "slocc/roots.hpp"

using namespace slocc;

namespace {

bool orbit_contains(const std::vector<Eigen::Vector4cd>& orbit, const Eigen::Vector4cd& t) {
    const Eigen::Vector4cd c = canonical_tuple(t);
    return std::any_of(orbit.begin(), orbit.end(), [&](const Eigen::Vector4cd& m) {
        return (m - c).cwiseAbs().maxCoeff() <= 1e-8;
    });
}

// Same projective state: canonical forms agree up to the overall sign.
bool same_ray(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b) {
    const Eigen::Vector4cd ca = canonical_tuple(a);
    const Eigen::Vector4cd cb = canonical_tuple(b);
    return (ca - cb).cwiseAbs().maxCoeff() <= 1e-9 ||
           (ca + cb).cwiseAbs().maxCoeff() <= 1e-9;
}

}  // namespace

TEST_CASE("family state closed form") {
    const PureState plain = gabcd_state({1, 1, 1, 1});
    CHECK(plain.amps(0b0000) == Complex(1, 0));
    CHECK(plain.amps(0b1111) == Complex(1, 0));
    CHECK(plain.amps(0b0101) == Complex(1, 0));
    CHECK(plain.amps(0b1010) == Complex(1, 0));
    CHECK(plain.amps.cwiseAbs().sum() == doctest::Approx(4.0));

    const PureState g = gabcd_state({1, 2, 3, 4});
    CHECK(g.amps(0b0011) == Complex(-1.5, 0));
}

TEST_CASE("genericity guard") {
    CHECK(is_generic({1, 2, 3, 4}));
    CHECK(!is_generic({1, 1, 2, 3}));
    CHECK(!is_generic({1, -1, 2, 3}));  // equal squares
    CHECK(!is_generic({0, 0, 0, 0}));
    CHECK(is_generic({Complex(0, 1), Complex(0, 2), 3, 4}));
    CHECK_THROWS_AS(root_quartic({1, 1, 2, 3}), NonGeneric);
    CHECK_THROWS_AS(weyl_orbit({1, 1, 2, 3}), NonGeneric);
}

TEST_CASE("closed-form quartic") {
    const PencilPolynomial q = root_quartic({1, 2, 3, 4});
    CHECK(q.coeffs(0) == Complex(75, 0));
    CHECK(q.coeffs(2) == Complex(-234, 0));
    CHECK(q.coeffs(4) == Complex(75, 0));
    CHECK(q.coeffs(1) == Complex(0, 0));
    CHECK(q.coeffs(3) == Complex(0, 0));
}

TEST_CASE("quartic roots form a normal system for random generic parameters") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 20; ++trial) {
        const GabcdParams p = testing::random_generic_params(rng);
        const RootSystem rs = find_roots(root_quartic(p));
        REQUIRE(rs.roots.size() == 4);
        for (const auto& z : rs.roots) {
            REQUIRE(!z.infinite);
            const ExtendedComplex recip(1.0 / z.value), neg(-z.value);
            CHECK(std::any_of(rs.roots.begin(), rs.roots.end(), [&](const ExtendedComplex& w) {
                return chordal(w, recip) <= 1e-9;
            }));
            CHECK(std::any_of(rs.roots.begin(), rs.roots.end(), [&](const ExtendedComplex& w) {
                return chordal(w, neg) <= 1e-9;
            }));
        }
    }
}

TEST_CASE("canonical tuple representative") {
    const Eigen::Vector4cd base(Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0));

    const Complex phase = std::exp(Complex(0, M_PI / 3));
    const Eigen::Vector4cd rotated = phase * base;
    CHECK((canonical_tuple(rotated) - base).cwiseAbs().maxCoeff() <= 1e-12);

    // Negation is kept as a distinct representative (same projective state;
    // the orbit bookkeeping counts signed tuples).
    const Eigen::Vector4cd neg = canonical_tuple(-base);
    CHECK((neg + base).cwiseAbs().maxCoeff() <= 1e-12);
    const auto scalar = proportional(gabcd_state({neg(0), neg(1), neg(2), neg(3)}),
                                     gabcd_state({1, 2, 3, 4}), 1e-12);
    REQUIRE(scalar.has_value());
    CHECK(std::abs(*scalar + 1.0) < 1e-12);

    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::Vector4cd t;
        for (int i = 0; i < 4; ++i) t(i) = testing::random_complex(rng);
        const Eigen::Vector4cd once = canonical_tuple(t);
        const Eigen::Vector4cd twice = canonical_tuple(once);
        CHECK((once - twice).cwiseAbs().maxCoeff() <= 1e-12);
    }

    CHECK_THROWS_AS(canonical_tuple(Eigen::Vector4cd::Zero()), ZeroTuple);
}

TEST_CASE("weyl orbit membership and count") {
    const auto orbit = weyl_orbit({1, 2, 3, 4});
    CHECK(orbit.size() == 192);

    CHECK(orbit_contains(orbit, {Complex(2, 0), Complex(1, 0), Complex(4, 0), Complex(3, 0)}));
    CHECK(orbit_contains(orbit, {Complex(-1, 0), Complex(-2, 0), Complex(3, 0), Complex(4, 0)}));
    CHECK(orbit_contains(orbit, {Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0)}));
    CHECK(!orbit_contains(orbit, {Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(5, 0)}));

    std::mt19937_64 rng(131);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        GabcdParams p = testing::random_generic_params(rng);
        if (trial % 2 == 0) {
            // Real coefficient draws alongside the complex ones.
            do {
                p = GabcdParams{unit(rng), unit(rng), unit(rng), unit(rng)};
            } while (!is_generic(p, 1e-3));
        }
        CHECK(weyl_orbit(p).size() == 192);
    }
}

TEST_CASE("orbit members are SLOCC equivalent to the base state") {
    std::mt19937_64 rng(137);
    const GabcdParams base{1, 2, 3, 4};
    const auto orbit = weyl_orbit(base);
    std::uniform_int_distribution<size_t> pick(0, orbit.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::Vector4cd t = orbit[pick(rng)];
        const EquivalenceVerdict verdict =
            equivalence_check(gabcd_state(base), gabcd_state({t(0), t(1), t(2), t(3)}),
                              three_tangle_measure());
        CHECK(verdict.outcome == Outcome::Equivalent);
    }
}

TEST_CASE("coefficient tuple readoff") {
    const PureState g = gabcd_state({1, 2, 3, 4});
    const auto tuple = read_gabcd_tuple(g);
    REQUIRE(tuple.has_value());
    CHECK(((*tuple) - Eigen::Vector4cd(1, 2, 3, 4)).cwiseAbs().maxCoeff() <= 1e-12);

    PureState spoiled = g;
    spoiled.amps(1) = 0.5;
    CHECK(!read_gabcd_tuple(spoiled).has_value());
}

TEST_CASE("specific cube-rotation products move the coefficients as tuples") {
    const double s2 = 1.0 / std::sqrt(2.0);
    const Complex i(0, 1);
    Eigen::Matrix2cd rx, ry;
    rx << s2, -i * s2, -i * s2, s2;
    ry << s2, -s2, s2, s2;
    const Eigen::Matrix2cd ry_pi = ry * ry;
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

    const GabcdParams p{1, 2, 3, 4};
    const PureState base = gabcd_state(p);

    // Quarter X turns on all four qubits: (a,b,c,d) -> (-b,-a,c,d).
    const std::vector<Eigen::Matrix2cd> all_rx(4, rx);
    const auto q1 = read_gabcd_tuple(apply_local(base, all_rx), 1e-9);
    REQUIRE(q1.has_value());
    CHECK(same_ray(*q1, Eigen::Vector4cd(-2, -1, 3, 4)));

    // Half Y turns on qubits 1 and 3 swap the coefficient pairs:
    // (a,b,c,d) -> (c,d,a,b).
    const std::vector<Eigen::Matrix2cd> y_pair{ry_pi, id, ry_pi, id};
    const auto q2 = read_gabcd_tuple(apply_local(base, y_pair), 1e-9);
    REQUIRE(q2.has_value());
    CHECK(same_ray(*q2, Eigen::Vector4cd(3, 4, 1, 2)));

    // Half X turns on qubits 1 and 2 flip the signs of c and d (up to the
    // projective sign).
    const Eigen::Matrix2cd rx_pi = rx * rx;
    const std::vector<Eigen::Matrix2cd> x_pair{rx_pi, rx_pi, id, id};
    const auto q3 = read_gabcd_tuple(apply_local(base, x_pair), 1e-9);
    REQUIRE(q3.has_value());
    CHECK(same_ray(*q3, Eigen::Vector4cd(1, 2, -3, -4)));

    // Each generating product stays inside the family and lands in the orbit.
    Eigen::Matrix2cd rz;
    rz << s2 * (1.0 - i), 0, 0, s2 * (1.0 + i);
    const auto orbit = weyl_orbit(p);
    const std::vector<std::vector<Eigen::Matrix2cd>> products = {
        {rx, rx, rx, rx},           {ry, ry, ry, ry},       {rz, rz, rz, rz},
        {ry_pi, ry_pi, id, id},     {rx_pi, rx_pi, id, id}, {ry_pi, id, ry_pi, id},
        {rx_pi, id, rx_pi, id}};
    for (const auto& ops : products) {
        const auto q = read_gabcd_tuple(apply_local(base, ops), 1e-9);
        REQUIRE(q.has_value());
        CHECK(orbit_contains(orbit, *q));
    }
}

TEST_CASE("operator enumeration reproduces the weyl orbit") {
    std::mt19937_64 rng(151);
    std::vector<GabcdParams> params = {{1, 2, 3, 4}};
    for (int trial = 0; trial < 3; ++trial)
        params.push_back(testing::random_generic_params(rng));

    for (const GabcdParams& p : params) {
        const auto weyl = weyl_orbit(p);
        const auto brute = operator_orbit_check(p);
        REQUIRE(brute.size() == weyl.size());
        for (const auto& t : weyl) {
            CHECK(std::any_of(brute.begin(), brute.end(), [&](const Eigen::Vector4cd& b) {
                return (t - b).cwiseAbs().maxCoeff() <= 1e-8;
            }));
        }
    }
}
