#include <doctest.h>

#include <cmath>

#include "polsphere/errors.hpp"
#include "polsphere/random_states.hpp"
#include "polsphere/state.hpp"

using namespace polsphere;

namespace {
HalfInteger h2(int twice) { return HalfInteger::from_twice(twice); }
}

TEST_SUITE("state") {

TEST_CASE("half integer arithmetic") {
    CHECK(HalfInteger::from_int(2).twice_value() == 4);
    CHECK(h2(3).value() == doctest::Approx(1.5));
    CHECK(h2(3).str() == "3/2");
    CHECK(h2(4).str() == "2");
    CHECK(h2(4).as_int() == 2);
    CHECK_THROWS(h2(3).as_int());
    CHECK(h2(3) + h2(1) == h2(4));
    CHECK(-h2(3) == h2(-3));
    CHECK(abs(h2(-5)) == h2(5));
    CHECK(h2(1) < h2(2));
}

TEST_CASE("basis indexing") {
    // row 0 is m = +S, the last row is m = -S; for photons the row is n_v
    CHECK(sector_dim(h2(3)) == 4);
    CHECK(sector_index(h2(3), h2(3)) == 0);
    CHECK(sector_index(h2(3), h2(-3)) == 3);
    CHECK(sector_m(h2(3), 1) == h2(1));
}

TEST_CASE("photon-number states") {
    const PolarizationState both = fock_state(1, 1);
    CHECK(both.sectors().size() == 1);
    CHECK(both.has_sector(h2(2)));
    CHECK(both.sector(h2(2))(1, 1).real() == doctest::Approx(1.0));
    CHECK(both.mean_photon_number() == doctest::Approx(2.0));
    CHECK(both.purity() == doctest::Approx(1.0));

    const PolarizationState horizontal = fock_state(2, 0);
    CHECK(horizontal.sector(h2(2))(0, 0).real() == doctest::Approx(1.0));
    const PolarizationState vertical = fock_state(0, 2);
    CHECK(vertical.sector(h2(2))(2, 2).real() == doctest::Approx(1.0));

    const PolarizationState vacuum = fock_state(0, 0);
    CHECK(vacuum.max_spin() == h2(0));
    CHECK(vacuum.trace() == doctest::Approx(1.0));

    CHECK_THROWS_AS(fock_state(-1, 0), DomainError);
    CHECK_THROWS_AS(both.sector(h2(4)), DomainError);
}

TEST_CASE("validation rejects broken blocks") {
    SUBCASE("wrong dimension") {
        SectorMap m;
        m.emplace(h2(2), Eigen::MatrixXcd::Identity(2, 2));
        CHECK_THROWS_AS(PolarizationState(std::move(m)), ValidationError);
    }
    SUBCASE("not hermitian") {
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
        rho(0, 0) = 0.5;
        rho(1, 1) = 0.5;
        rho(0, 1) = 0.3;
        rho(1, 0) = -0.3;
        SectorMap m;
        m.emplace(h2(1), std::move(rho));
        CHECK_THROWS_AS(PolarizationState(std::move(m)), ValidationError);
    }
    SUBCASE("negative eigenvalue") {
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
        rho(0, 0) = 1.5;
        rho(1, 1) = -0.5;
        SectorMap m;
        m.emplace(h2(1), std::move(rho));
        CHECK_THROWS_AS(PolarizationState(std::move(m)), ValidationError);
    }
    SUBCASE("trace off") {
        SectorMap m;
        m.emplace(h2(1), 0.7 * Eigen::MatrixXcd::Identity(2, 2));
        CHECK_THROWS_AS(PolarizationState(std::move(m)), ValidationError);
    }
    SUBCASE("empty") {
        CHECK_THROWS_AS(PolarizationState(SectorMap{}), ValidationError);
    }
}

TEST_CASE("spin coherent states sit where they should") {
    // theta = 0 is the all-vertical pole m = -S
    const PolarizationState pole = su2_coherent_state(h2(3), 0.0, 0.9);
    CHECK(pole.sector(h2(3))(3, 3).real() == doctest::Approx(1.0));
    // theta = pi is the all-horizontal pole m = +S
    const PolarizationState top = su2_coherent_state(h2(3), M_PI, 0.0);
    CHECK(top.sector(h2(3))(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));

    // mean spin vector: S * (sin cos, sin sin, -cos)
    const double theta = 0.77, phi = 2.13;
    const PolarizationState state = su2_coherent_state(h2(3), theta, phi);
    const StokesVector v = stokes_mean(state);
    const double s = 1.5;
    CHECK(v.s1 == doctest::Approx(s * std::sin(theta) * std::cos(phi)).epsilon(1e-13));
    CHECK(v.s2 == doctest::Approx(s * std::sin(theta) * std::sin(phi)).epsilon(1e-13));
    CHECK(v.s3 == doctest::Approx(-s * std::cos(theta)).epsilon(1e-13));

    // its total spin variance saturates the bound
    const StokesUncertainty u = stokes_uncertainty(state);
    CHECK(u.total_variance == doctest::Approx(u.half_mean_photon).epsilon(1e-13));
    CHECK(u.half_mean_photon == doctest::Approx(1.5));
}

TEST_CASE("rotating the pole state reproduces the coherent state") {
    const double theta = 1.3, phi = -0.4;
    const PolarizationState dragged =
        rotate(su2_coherent_state(h2(4), 0.0, 0.0), theta, phi);
    const PolarizationState direct = su2_coherent_state(h2(4), theta, phi);
    const Eigen::MatrixXcd diff = dragged.sector(h2(4)) - direct.sector(h2(4));
    CHECK(diff.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("displacement matrices are unitary") {
    const Eigen::MatrixXcd d = displacement_matrix(h2(5), 0.9, 2.2);
    const Eigen::MatrixXcd should_be_id = d * d.adjoint();
    CHECK((should_be_id - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff()
          < 1e-13);
}

TEST_CASE("spin component algebra") {
    const HalfInteger s = h2(3);
    const Eigen::MatrixXcd s1 = spin_matrix(s, 1);
    const Eigen::MatrixXcd s2 = spin_matrix(s, 2);
    const Eigen::MatrixXcd s3 = spin_matrix(s, 3);
    const std::complex<double> i(0.0, 1.0);
    CHECK((s1 * s2 - s2 * s1 - i * s3).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((s2 * s3 - s3 * s2 - i * s1).cwiseAbs().maxCoeff() < 1e-14);
    const Eigen::MatrixXcd casimir = s1 * s1 + s2 * s2 + s3 * s3;
    const double want = 1.5 * 2.5;
    CHECK((casimir - want * Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff()
          < 1e-13);
    CHECK_THROWS_AS(spin_matrix(s, 4), DomainError);
}

TEST_CASE("path-entangled two-mode states") {
    const double phase = 0.618;
    const PolarizationState state = noon_state(2, phase);
    const Eigen::MatrixXcd& rho = state.sector(h2(2));
    CHECK(rho(0, 0).real() == doctest::Approx(0.5));
    CHECK(rho(2, 2).real() == doctest::Approx(0.5));
    CHECK(rho(1, 1).real() == doctest::Approx(0.0));
    CHECK(std::abs(rho(0, 2) - 0.5 * std::exp(std::complex<double>(0.0, -phase)))
          < 1e-15);
    CHECK(state.purity() == doctest::Approx(1.0));
    CHECK_THROWS_AS(noon_state(0, 0.0), DomainError);
}

TEST_CASE("two-mode coherent projection") {
    const auto r = two_mode_coherent({1.0, 0.0}, {1.0, 0.0});
    CHECK(r.renormalization > 1.0 - 1e-11);
    CHECK(r.renormalization <= 1.0);
    // Poisson weight of the single-photon manifold at mean 2
    CHECK(r.state.sector_weight(h2(1))
          == doctest::Approx(0.2706705664732254).epsilon(1e-10));
    CHECK(r.state.trace() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.state.mean_photon_number() == doctest::Approx(2.0).epsilon(1e-9));

    // balanced amplitudes point along +s1
    const StokesVector v = stokes_mean(r.state);
    CHECK(v.s1 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(v.s2) < 1e-12);
    CHECK(std::abs(v.s3) < 1e-12);

    // Poissonian light sits above the bound at exactly 3<N>/4: the Casimir
    // term contributes (<N>^2 + 3<N>)/4 while |<S>|^2 = <N>^2/4
    const StokesUncertainty u = stokes_uncertainty(r.state);
    CHECK(u.total_variance == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(u.total_variance >= u.half_mean_photon);

    // a looser cutoff keeps fewer manifolds
    const auto strict = two_mode_coherent({2.0, 0.0}, {0.0, 0.0}, 1e-13);
    const auto loose = two_mode_coherent({2.0, 0.0}, {0.0, 0.0}, 1e-3);
    CHECK(loose.max_photon_number < strict.max_photon_number);
    CHECK(loose.state.trace() == doctest::Approx(1.0).epsilon(1e-13));

    // vacuum input collapses to the empty manifold
    const auto dark = two_mode_coherent({0.0, 0.0}, {0.0, 0.0});
    CHECK(dark.state.sectors().size() == 1);
    CHECK(dark.state.sector_weight(h2(0)) == doctest::Approx(1.0));

    CHECK_THROWS_AS(two_mode_coherent({1.0, 0.0}, {0.0, 0.0}, 0.0), DomainError);
}

TEST_CASE("mixtures merge sectors") {
    const PolarizationState m = mix({{0.5, fock_state(1, 1)},
                                     {0.5, fock_state(2, 0)}});
    const Eigen::MatrixXcd& rho = m.sector(h2(2));
    CHECK(rho(0, 0).real() == doctest::Approx(0.5));
    CHECK(rho(1, 1).real() == doctest::Approx(0.5));
    CHECK(rho(2, 2).real() == doctest::Approx(0.0));
    CHECK(m.purity() == doctest::Approx(0.5));

    const PolarizationState two = mix({{0.25, fock_state(0, 0)},
                                       {0.75, fock_state(1, 0)}});
    CHECK(two.sector_weight(h2(0)) == doctest::Approx(0.25));
    CHECK(two.sector_weight(h2(1)) == doctest::Approx(0.75));

    CHECK_THROWS_AS(mix({{0.5, fock_state(0, 0)}, {0.6, fock_state(1, 0)}}),
                    ValidationError);
    CHECK_THROWS_AS(mix({{-0.1, fock_state(0, 0)}, {1.1, fock_state(1, 0)}}),
                    ValidationError);
    CHECK_THROWS_AS(mix({}), DomainError);
}

TEST_CASE("random states satisfy the uncertainty bound") {
    StateSampler sampler(99);
    for (int trial = 0; trial < 10; ++trial) {
        const PolarizationState state =
            sampler.random_multi_sector_state(h2(1 + trial % 5));
        CHECK(state.trace() == doctest::Approx(1.0).epsilon(1e-12));
        const StokesUncertainty u = stokes_uncertainty(state);
        CHECK(u.total_variance >= u.half_mean_photon - 1e-12);
    }
}

TEST_CASE("sampler reproducibility") {
    StateSampler a(1234), b(1234);
    const PolarizationState sa = a.random_sector_state(h2(3));
    const PolarizationState sb = b.random_sector_state(h2(3));
    CHECK((sa.sector(h2(3)) - sb.sector(h2(3))).cwiseAbs().maxCoeff() == 0.0);
    StateSampler c(4321);
    const PolarizationState sc = c.random_sector_state(h2(3));
    CHECK((sa.sector(h2(3)) - sc.sector(h2(3))).cwiseAbs().maxCoeff() > 1e-3);
}

} // TEST_SUITE
