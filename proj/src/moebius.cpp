#include "slocc/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "slocc/state.hpp"

namespace slocc {

namespace {

// Homogeneous difference z_i - z_j for lifted points.
Complex hdiff(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) {
    return a(0) * b(1) - b(0) * a(1);
}

// Matrix of the map sending (P1, P2, P3) to (0, 1, infinity).
Eigen::Matrix2cd to_standard_triple(const Eigen::Vector2cd& P1, const Eigen::Vector2cd& P2,
                                    const Eigen::Vector2cd& P3) {
    const Complex d23 = hdiff(P2, P3);
    const Complex d21 = hdiff(P2, P1);
    Eigen::Matrix2cd s;
    s << d23 * P1(1), -d23 * P1(0), d21 * P3(1), -d21 * P3(0);
    return s;
}

}  // namespace

MoebiusMap moebius(const Eigen::Matrix2cd& m) {
    if (!invertible(m)) throw SingularOperator("Moebius matrix is singular");
    return MoebiusMap{m};
}

MoebiusMap identity_map() { return MoebiusMap{Eigen::Matrix2cd::Identity()}; }

ExtendedComplex apply(const MoebiusMap& map, const ExtendedComplex& z) {
    const Eigen::Vector2cd h = map.m * z.lift().normalized();
    return ExtendedComplex::from_projective(h(0), h(1));
}

std::vector<ExtendedComplex> apply_all(const MoebiusMap& map,
                                       std::span<const ExtendedComplex> zs) {
    std::vector<ExtendedComplex> out;
    out.reserve(zs.size());
    for (const auto& z : zs) out.push_back(apply(map, z));
    return out;
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
    return MoebiusMap{m1.m * m2.m};
}

MoebiusMap inverse(const MoebiusMap& map) { return MoebiusMap{adjugate(map.m)}; }

bool same_map(const MoebiusMap& a, const MoebiusMap& b, double tol) {
    static const std::array<ExtendedComplex, 3> probes = {
        ExtendedComplex(Complex(0, 0)), ExtendedComplex(Complex(1, 0)),
        ExtendedComplex::inf()};
    for (const auto& z : probes)
        if (chordal(apply(a, z), apply(b, z)) > tol) return false;
    return true;
}

Eigen::Matrix2cd adjugate(const Eigen::Matrix2cd& m) {
    Eigen::Matrix2cd adj;
    adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return adj;
}

MoebiusMap operator_root_action(const Eigen::Matrix2cd& op) {
    if (!invertible(op)) throw SingularOperator("operator is singular");
    // For |psi> = |0>|psi0> + |1>|psi1> and the column action
    // O|0> = a|0> + c|1>, the family index moves by the transpose,
    // z' = (az + c)/(bz + d), so roots move by the adjugate of O^T.
    return MoebiusMap{adjugate(op.transpose())};
}

Eigen::Matrix2cd root_action_to_operator(const MoebiusMap& map) {
    Eigen::Matrix2cd op = adjugate(map.m).transpose();
    const Complex det = op(0, 0) * op(1, 1) - op(0, 1) * op(1, 0);
    return op / std::sqrt(det);
}

MoebiusMap from_three_points(const ExtendedComplex& p1, const ExtendedComplex& p2,
                             const ExtendedComplex& p3, const ExtendedComplex& q1,
                             const ExtendedComplex& q2, const ExtendedComplex& q3) {
    constexpr double kSep = 1e-10;
    if (chordal(p1, p2) <= kSep || chordal(p1, p3) <= kSep || chordal(p2, p3) <= kSep)
        throw DegenerateTriple("source points are not pairwise distinct");
    if (chordal(q1, q2) <= kSep || chordal(q1, q3) <= kSep || chordal(q2, q3) <= kSep)
        throw DegenerateTriple("target points are not pairwise distinct");

    const Eigen::Matrix2cd sp = to_standard_triple(p1.lift().normalized(),
                                                   p2.lift().normalized(),
                                                   p3.lift().normalized());
    const Eigen::Matrix2cd sq = to_standard_triple(q1.lift().normalized(),
                                                   q2.lift().normalized(),
                                                   q3.lift().normalized());
    Eigen::Matrix2cd m = adjugate(sq) * sp;
    m /= m.cwiseAbs().maxCoeff();
    const MoebiusMap map = moebius(m);

    constexpr double kResid = 1e-10;
    if (chordal(apply(map, p1), q1) > kResid || chordal(apply(map, p2), q2) > kResid ||
        chordal(apply(map, p3), q3) > kResid)
        throw DegenerateTriple("three-point interpolation residual too large");
    return map;
}

CrossRatio cross_ratio(const ExtendedComplex& z1, const ExtendedComplex& z2,
                       const ExtendedComplex& z3, const ExtendedComplex& z4) {
    const std::array<ExtendedComplex, 4> zs = {z1, z2, z3, z4};
    int distinct = 0;
    for (int i = 0; i < 4; ++i) {
        bool repeated = false;
        for (int j = 0; j < i; ++j)
            if (chordal(zs[i], zs[j]) <= 1e-12) { repeated = true; break; }
        if (!repeated) ++distinct;
    }
    if (distinct < 3)
        throw DegenerateConfiguration("cross-ratio needs at least three distinct points");

    const Eigen::Vector2cd P1 = z1.lift().normalized(), P2 = z2.lift().normalized();
    const Eigen::Vector2cd P3 = z3.lift().normalized(), P4 = z4.lift().normalized();
    const Complex num = hdiff(P3, P1) * hdiff(P4, P2);
    const Complex den = hdiff(P3, P2) * hdiff(P4, P1);
    return ExtendedComplex::from_projective(num, den);
}

std::vector<CrossRatio> cross_ratio_orbit(const CrossRatio& lambda) {
    const Eigen::Vector2cd L = lambda.lift();
    const Complex p = L(0), q = L(1);
    const std::array<std::pair<Complex, Complex>, 6> forms = {{
        {p, q},          // lambda
        {q, p},          // 1/lambda
        {q - p, q},      // 1 - lambda
        {q, q - p},      // 1/(1 - lambda)
        {p - q, p},      // (lambda - 1)/lambda
        {p, p - q},      // lambda/(lambda - 1)
    }};
    std::vector<CrossRatio> out;
    for (const auto& [a, b] : forms) {
        const CrossRatio v = ExtendedComplex::from_projective(a, b);
        bool seen = false;
        for (const auto& w : out)
            if (chordal(v, w) <= 1e-10) { seen = true; break; }
        if (!seen) out.push_back(v);
    }
    return out;
}

std::array<ExtendedComplex, 4> normal_system_solutions(const CrossRatio& lambda) {
    if (lambda.infinite || lambda.is_zero())
        throw DegenerateLambda("normal system undefined for lambda in {0, infinity}");
    const Complex L = lambda.value;

    // lambda z^4 + (2 lambda - 4) z^2 + lambda = 0 as a quadratic in w = z^2;
    // the two w-roots multiply to 1, so take the larger one for accuracy.
    const Complex s = std::sqrt(Complex(1.0, 0.0) - L);
    const Complex w1 = (2.0 - L + 2.0 * s) / L;
    const Complex w2 = (2.0 - L - 2.0 * s) / L;
    const Complex w = std::abs(w1) >= std::abs(w2) ? w1 : w2;
    const Complex z0 = std::sqrt(w);

    const std::array<ExtendedComplex, 4> sols = {
        ExtendedComplex(z0), ExtendedComplex(1.0 / z0), ExtendedComplex(-z0),
        ExtendedComplex(-1.0 / z0)};

    for (const auto& z : sols) {
        const Complex zz = z.value * z.value;
        const Complex resid = L * zz * zz + (2.0 * L - 4.0) * zz + L;
        const double scale = std::abs(L) * std::norm(1.0 + zz) + 4.0 * std::norm(z.value);
        if (std::abs(resid) > 1e-10 * std::max(scale, 1.0))
            throw Error("normal-system back-substitution residual too large");
    }
    return sols;
}

Eigen::Matrix2cd canonical_phase(const Eigen::Matrix2cd& u) {
    const double scale = u.cwiseAbs().maxCoeff();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (std::abs(u(r, c)) > 1e-8 * scale)
                return u * (std::abs(u(r, c)) / u(r, c));
    throw ZeroVector("zero matrix has no canonical phase");
}

const std::vector<CubeRotation>& cube_rotation_group() {
    static const std::vector<CubeRotation> group = [] {
        const double s2 = 1.0 / std::sqrt(2.0);
        const Complex i(0.0, 1.0);
        Eigen::Matrix2cd rx, ry, rz;
        rx << s2, -i * s2, -i * s2, s2;
        ry << s2, -s2, s2, s2;
        rz << s2 * (1.0 - i), 0.0, 0.0, s2 * (1.0 + i);
        const std::array<std::pair<char, Eigen::Matrix2cd>, 3> gens = {
            {{'x', rx}, {'y', ry}, {'z', rz}}};

        auto key_of = [](const Eigen::Matrix2cd& u) {
            std::array<long long, 8> key{};
            int idx = 0;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    key[idx++] = llround(u(r, c).real() * 1e6);
                    key[idx++] = llround(u(r, c).imag() * 1e6);
                }
            return key;
        };

        std::vector<CubeRotation> elems;
        std::map<std::array<long long, 8>, int> seen;
        std::deque<int> queue;

        auto insert = [&](const Eigen::Matrix2cd& raw, const std::string& word) {
            const Eigen::Matrix2cd u = canonical_phase(raw);
            const auto key = key_of(u);
            auto it = seen.find(key);
            if (it != seen.end()) {
                if ((elems[it->second].u - u).cwiseAbs().maxCoeff() > 1e-10)
                    throw Error("cube-rotation hash collision");
                return;
            }
            seen[key] = static_cast<int>(elems.size());
            elems.push_back({u, word});
            queue.push_back(static_cast<int>(elems.size()) - 1);
        };

        insert(Eigen::Matrix2cd::Identity(), "e");
        while (!queue.empty()) {
            const int at = queue.front();
            queue.pop_front();
            for (const auto& [letter, gen] : gens) {
                const std::string word =
                    elems[at].word == "e" ? std::string(1, letter) : elems[at].word + letter;
                insert(elems[at].u * gen, word);
            }
        }
        if (elems.size() != 24) throw Error("cube rotation closure has wrong size");
        return elems;
    }();
    return group;
}

NormalSystemMap normalize_to_normal_system(std::span<const ExtendedComplex> roots) {
    if (roots.size() != 4) throw DegenerateRoots("need exactly four roots");
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (chordal(roots[i], roots[j]) <= 1e-8)
                throw DegenerateRoots("roots are not pairwise distinct");

    const CrossRatio lambda = cross_ratio(roots[0], roots[1], roots[2], roots[3]);
    const auto sols = normal_system_solutions(lambda);

    struct Candidate {
        MoebiusMap map;
        Complex z0;
    };
    std::vector<Candidate> valid;
    for (const auto& zc : sols) {
        const Complex z0 = zc.value;
        const ExtendedComplex t1(z0), t2(1.0 / z0), t3(-z0), t4(-1.0 / z0);
        MoebiusMap map = identity_map();
        try {
            map = from_three_points(roots[0], roots[1], roots[2], t1, t2, t3);
        } catch (const DegenerateTriple&) {
            continue;
        }
        if (chordal(apply(map, roots[3]), t4) <= 1e-8) valid.push_back({map, z0});
    }
    if (valid.empty())
        throw FourthPointMismatch("no normal-system candidate places the fourth root");

    auto rank = [](const Complex& z) {
        double arg = std::arg(z);
        if (arg < 0.0) arg += 2.0 * M_PI;
        const bool big = std::abs(z) >= 1.0 - 1e-12;
        const bool sector = arg < M_PI / 2.0;
        return std::tuple(big ? 0 : 1, sector ? 0 : 1, z.real(), z.imag());
    };
    const auto* best = &valid.front();
    for (const auto& cand : valid)
        if (rank(cand.z0) < rank(best->z0)) best = &cand;

    return {best->map, ExtendedComplex(best->z0)};
}

}  // namespace slocc
