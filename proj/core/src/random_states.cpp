#include "polsphere/random_states.hpp"

#include <cmath>

#include "polsphere/errors.hpp"

namespace polsphere {

double StateSampler::uniform01() {
    // 53 uniform bits into [0, 1)
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double StateSampler::uniform(double a, double b) {
    return a + (b - a) * uniform01();
}

double StateSampler::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
}

Eigen::MatrixXcd StateSampler::random_density(HalfInteger s) {
    if (s.twice_value() < 0) throw DomainError("random_density: negative spin");
    const int d = sector_dim(s);
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            g(i, j) = std::complex<double>(gaussian(), gaussian());
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    // symmetrize away the last rounding asymmetry
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return rho;
}

PolarizationState StateSampler::random_sector_state(HalfInteger s) {
    SectorMap m;
    m.emplace(s, random_density(s));
    return PolarizationState(std::move(m));
}

PolarizationState StateSampler::random_multi_sector_state(HalfInteger s_max) {
    if (s_max.twice_value() < 0)
        throw DomainError("random_multi_sector_state: negative spin");
    SectorMap m;
    std::vector<double> weights;
    double sum = 0.0;
    for (int t = 0; t <= s_max.twice_value(); ++t) {
        weights.push_back(0.05 + uniform01());
        sum += weights.back();
    }
    for (int t = 0; t <= s_max.twice_value(); ++t) {
        const HalfInteger s = HalfInteger::from_twice(t);
        m.emplace(s, (weights[t] / sum) * random_density(s));
    }
    return PolarizationState(std::move(m));
}

} // namespace polsphere
