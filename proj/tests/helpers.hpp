#pragma once

#include <random>

#include <Eigen/Dense>

#include "slocc/extended_complex.hpp"
#include "slocc/gabcd.hpp"
#include "slocc/moebius.hpp"
#include "slocc/state.hpp"

namespace slocc::testing {

inline Complex random_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    return {gauss(rng), gauss(rng)};
}

inline Eigen::VectorXcd random_vector(std::mt19937_64& rng, Eigen::Index size) {
    Eigen::VectorXcd v(size);
    for (Eigen::Index i = 0; i < size; ++i) v(i) = random_complex(rng);
    return v;
}

inline PureState random_state(std::mt19937_64& rng, int n) {
    return make_state(n, random_vector(rng, Eigen::Index{1} << n));
}

// Random invertible 2x2 with determinant 1.
inline Eigen::Matrix2cd random_sl2(std::mt19937_64& rng) {
    while (true) {
        Eigen::Matrix2cd m;
        m << random_complex(rng), random_complex(rng), random_complex(rng),
            random_complex(rng);
        const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        if (std::abs(det) > 0.1) return m / std::sqrt(det);
    }
}

inline MoebiusMap random_moebius(std::mt19937_64& rng) {
    return moebius(random_sl2(rng));
}

// Uniform on the sphere, mapped down to the extended plane.
inline ExtendedComplex random_sphere_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double z = 2.0 * unit(rng) - 1.0;
    const double phi = 2.0 * M_PI * unit(rng);
    return from_bloch({std::acos(z), phi});
}

inline GabcdParams random_generic_params(std::mt19937_64& rng, double margin = 1e-3) {
    while (true) {
        const GabcdParams p{random_complex(rng), random_complex(rng), random_complex(rng),
                            random_complex(rng)};
        if (is_generic(p, margin)) return p;
    }
}

}  // namespace slocc::testing
