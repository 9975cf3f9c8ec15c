#include <doctest.h>

#include <cmath>

#include "polsphere/angular.hpp"
#include "polsphere/errors.hpp"
#include "polsphere/qfunction.hpp"
#include "polsphere/random_states.hpp"
#include "polsphere/sphere_grid.hpp"
#include "polsphere/state.hpp"

using namespace polsphere;

namespace {
HalfInteger h2(int twice) { return HalfInteger::from_twice(twice); }
}

TEST_SUITE("qfunction") {

TEST_CASE("one photon per mode has the equatorial belt profile") {
    // Q(theta, phi) = 3/(8 pi) sin^2(theta), independent of phi
    const PolarizationState state = fock_state(1, 1);
    const double amp = 3.0 / (8.0 * M_PI);
    for (double theta : {0.0, 0.3, 1.0, M_PI / 2, 2.4, M_PI}) {
        for (double phi : {0.0, 1.1, 4.5}) {
            const double got = q_total(state, theta, phi);
            const double want = amp * std::sin(theta) * std::sin(theta);
            CHECK(std::abs(got - want) < 1e-13);
        }
    }
    // peak value at the equator
    CHECK(q_total(state, M_PI / 2, 0.0)
          == doctest::Approx(0.11936620731892151).epsilon(1e-13));
}

TEST_CASE("vacuum is flat") {
    const PolarizationState vac = fock_state(0, 0);
    const double flat = 1.0 / (4.0 * M_PI);
    CHECK(q_total(vac, 0.7, 0.3) == doctest::Approx(flat).epsilon(1e-15));
    const MultipoleTable table = extract_multipoles(vac);
    CHECK(q_component(table, 0, 2.2, 5.1) == doctest::Approx(flat).epsilon(1e-15));
}

TEST_CASE("overlap route and component route agree") {
    StateSampler sampler(31);
    for (int trial = 0; trial < 6; ++trial) {
        const HalfInteger s = h2(3);
        const PolarizationState state = sampler.random_sector_state(s);
        const MultipoleTable table = extract_multipoles(state);
        for (int node = 0; node < 20; ++node) {
            const double theta = sampler.uniform(0.0, M_PI);
            const double phi = sampler.uniform(0.0, 2.0 * M_PI);
            const double direct = q_sector_direct(state.sector(s), s, theta, phi);
            const double synth = q_sector_via_multipoles(table, s, theta, phi);
            CHECK(std::abs(direct - synth) < 1e-12);
        }
    }
}

TEST_CASE("rank slices add up to the total") {
    StateSampler sampler(32);
    const PolarizationState state = sampler.random_multi_sector_state(h2(4));
    const MultipoleTable table = extract_multipoles(state);
    for (int node = 0; node < 12; ++node) {
        const double theta = sampler.uniform(0.0, M_PI);
        const double phi = sampler.uniform(0.0, 2.0 * M_PI);
        double sum = 0.0;
        for (int k = 0; k <= 4; ++k)
            sum += q_component(table, k, theta, phi);
        CHECK(std::abs(sum - q_total(state, theta, phi)) < 1e-12);
    }
}

TEST_CASE("negative overlap handling") {
    // an honestly indefinite block is refused
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
    bad(0, 0) = 1.2;
    bad(1, 1) = -0.2;
    CHECK_THROWS_AS(q_sector_direct(bad, h2(1), 0.0, 0.0), ConsistencyError);

    // rounding-level negativity is clamped to zero
    Eigen::MatrixXcd noisy = Eigen::MatrixXcd::Zero(2, 2);
    noisy(0, 0) = 1.0 + 1e-15;
    noisy(1, 1) = -1e-15;
    CHECK(q_sector_direct(noisy, h2(1), 0.0, 0.0) == 0.0);
}

TEST_CASE("synthesis prefactor bookkeeping") {
    // Dropping the sqrt((2s+1)/(4 pi)) prefactor from the harmonic synthesis
    // - i.e. summing C_K rho_Kq Y_Kq with no dimension factor - rescales the
    // sector Q by exactly sqrt(4 pi / (2s+1)).  Some references print the
    // unprefixed form; this pins the exact conversion so the two cannot be
    // confused: with it the distribution integrates to 1, without it it does
    // not (except by accident).
    const HalfInteger s = HalfInteger::from_int(1);
    const PolarizationState state = fock_state(1, 1);
    const MultipoleTable table = extract_multipoles(state);
    const double ratio = std::sqrt(4.0 * M_PI / 3.0);
    CHECK(ratio == doctest::Approx(2.046653415892977).epsilon(1e-15));

    const SphereGrid grid = build_grid(s);
    double integral_flat = 0.0;
    for (std::size_t i = 0; i < grid.n_theta(); ++i)
        for (std::size_t j = 0; j < grid.n_phi(); ++j) {
            const double theta = grid.thetas[i];
            const double phi = grid.phis[j];
            const double ours = q_sector_via_multipoles(table, s, theta, phi);
            // rebuild the flat synthesis directly from the components
            double flat = 0.0;
            for (int k = 0; k <= 2; ++k) {
                const double ck = cg_stretched(s, k);
                std::complex<double> acc = 0.0;
                for (int q = -k; q <= k; ++q) {
                    const double sign = ((k + q) % 2 == 0) ? 1.0 : -1.0;
                    acc += sign * ck * table.get(s, k, q) *
                           spherical_harmonic(k, q, theta, phi);
                }
                flat += acc.real();
            }
            CHECK(std::abs(flat - ratio * ours) < 1e-13);
            integral_flat += grid.weight(i) * flat;
        }
    // the flat form integrates to sqrt(4 pi / (2s+1)), not to 1
    CHECK(integral_flat == doctest::Approx(ratio).epsilon(1e-12));
}

TEST_CASE("component route refuses truncated tables") {
    const PolarizationState state = fock_state(1, 1);
    const MultipoleTable partial = extract_multipoles(state, 1);
    CHECK_THROWS_AS(
        q_sector_via_multipoles(partial, HalfInteger::from_int(1), 0.5, 0.5),
        IncompleteTableError);
    CHECK_THROWS_AS(field_coefficients(partial, 2), IncompleteTableError);
    CHECK_THROWS_AS(q_component(partial, 2, 0.5, 0.5), IncompleteTableError);
    // asking only for ranks it does hold is fine
    CHECK_NOTHROW(q_component(partial, 1, 0.5, 0.5));
}

TEST_CASE("coupling coefficient hook reaches the synthesis") {
    const PolarizationState state = fock_state(1, 1);
    const MultipoleTable table = extract_multipoles(state);
    const HalfInteger s = HalfInteger::from_int(1);
    const double clean = q_sector_via_multipoles(table, s, 1.0, 2.0);
    const StretchedCgFn scaled = [](HalfInteger spin, int k) {
        double v = cg_stretched(spin, k);
        return (k == 2) ? 1.01 * v : v;
    };
    const double bent = q_sector_via_multipoles(table, s, 1.0, 2.0, scaled);
    CHECK(std::abs(clean - bent) > 1e-5);
    CHECK(q_sector_via_multipoles(table, s, 1.0, 2.0)
          == doctest::Approx(clean)); // hook does not stick
}

TEST_CASE("field sampling on the grid") {
    const PolarizationState state = fock_state(1, 1);
    const SphereGrid grid = build_grid(HalfInteger::from_int(1));
    const QField field = evaluate_field(state, grid);
    CHECK(field.k_max == 2);
    CHECK_FALSE(field.grid_warning);
    CHECK(field.total.size() == grid.n_nodes());
    CHECK(field.components.size() == 3);

    const double amp = 3.0 / (8.0 * M_PI);
    double integral = 0.0;
    for (std::size_t i = 0; i < grid.n_theta(); ++i)
        for (std::size_t j = 0; j < grid.n_phi(); ++j) {
            const std::size_t node = i * grid.n_phi() + j;
            const double st = std::sin(grid.thetas[i]);
            CHECK(std::abs(field.total[node] - amp * st * st) < 1e-13);
            double sum = 0.0;
            for (const auto& comp : field.components)
                sum += comp[node];
            CHECK(std::abs(sum - field.total[node]) < 1e-13);
            integral += grid.weight(i) * field.total[node];
        }
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-13));

    // single-threaded and multi-threaded sampling agree bitwise
    const QField serial = evaluate_field(state, grid, -1, 1);
    const QField parallel = evaluate_field(state, grid, -1, 4);
    for (std::size_t node = 0; node < grid.n_nodes(); ++node) {
        CHECK(serial.total[node] == parallel.total[node]);
        for (int k = 0; k <= 2; ++k)
            CHECK(serial.components[k][node] == parallel.components[k][node]);
    }
}

TEST_CASE("rank cutoff trims slices but not the total") {
    StateSampler sampler(77);
    const PolarizationState state = sampler.random_multi_sector_state(h2(3));
    const SphereGrid grid = build_grid(h2(3));
    const QField full = evaluate_field(state, grid);
    const QField cut = evaluate_field(state, grid, 1);
    CHECK(cut.k_max == 1);
    CHECK(cut.components.size() == 2);
    for (std::size_t node = 0; node < grid.n_nodes(); ++node) {
        CHECK(cut.total[node] == doctest::Approx(full.total[node]).epsilon(1e-14));
        CHECK(cut.components[0][node]
              == doctest::Approx(full.components[0][node]).epsilon(1e-13));
        CHECK(cut.components[1][node]
              == doctest::Approx(full.components[1][node]).epsilon(1e-13));
    }
}

TEST_CASE("a coarse grid flags itself") {
    // four photons reach rank 4, so quadratic functionals need degree 8
    const PolarizationState state = fock_state(2, 2);
    const SphereGrid coarse = build_grid_custom(3, 5);
    const QField field = evaluate_field(state, coarse);
    CHECK(field.grid_warning);
    const SphereGrid fine = build_grid(HalfInteger::from_int(2));
    CHECK_FALSE(evaluate_field(state, fine).grid_warning);
}

} // TEST_SUITE
