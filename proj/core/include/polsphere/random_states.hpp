#pragma once

#include <cstdint>
#include <random>

#include "polsphere/state.hpp"

namespace polsphere {

// Seeded source of random test states.  The engine is bit-exact by the
// standard and the variate transforms are fixed arithmetic rather than
// library distributions, so the same seed gives the same states everywhere.
class StateSampler {
public:
    explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform01();
    double uniform(double a, double b);
    double gaussian(); // Box-Muller

    // Full-rank random density block of dimension 2s+1 with unit trace,
    // built as G G^dag from a complex Gaussian matrix.
    Eigen::MatrixXcd random_density(HalfInteger s);

    // Random mixed state living in a single sector.
    PolarizationState random_sector_state(HalfInteger s);

    // Random mixed state spread over all sectors 0..s_max with random
    // positive weights.
    PolarizationState random_multi_sector_state(HalfInteger s_max);

private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace polsphere
