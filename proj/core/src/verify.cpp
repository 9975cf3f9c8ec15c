#include "polsphere/verify.hpp"

#include <cmath>

#include "polsphere/angular.hpp"
#include "polsphere/errors.hpp"
#include "polsphere/measures.hpp"
#include "polsphere/multipole.hpp"
#include "polsphere/qfunction.hpp"
#include "polsphere/random_states.hpp"
#include "polsphere/sphere_grid.hpp"
#include "polsphere/state.hpp"

namespace polsphere {

namespace {

double integrate_q(const PolarizationState& state) {
    const SphereGrid grid = build_grid(state.max_spin());
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.n_theta(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < grid.n_phi(); ++j)
            row += q_total(state, grid.thetas[i], grid.phis[j]);
        acc += grid.weight(i) * row;
    }
    return acc;
}

} // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    StateSampler sampler(options.seed);

    StretchedCgFn cg; // empty = exact
    if (options.fault_cg_scale != 1.0) {
        const double scale = options.fault_cg_scale;
        cg = [scale](HalfInteger s, int K) {
            const double v = cg_stretched(s, K);
            return K == 1 ? scale * v : v;
        };
    }

    // 1. Overlap route against multipole route on random mixed states.
    {
        VerifyCheck check{"route equivalence", 0.0, 1e-10, false};
        const int n_states = std::max(1, options.n_random_states);
        for (int i = 0; i < n_states; ++i) {
            const HalfInteger s = HalfInteger::from_twice(1 + i % 10);
            const PolarizationState state = sampler.random_sector_state(s);
            const MultipoleTable table = extract_multipoles(state);
            for (int n = 0; n < 50; ++n) {
                const double theta = sampler.uniform(0.0, M_PI);
                const double phi = sampler.uniform(0.0, 2.0 * M_PI);
                const double direct = q_sector_direct(state.sector(s), s, theta, phi);
                const double via = q_sector_via_multipoles(table, s, theta, phi, cg);
                check.max_error = std::max(check.max_error, std::abs(direct - via));
            }
        }
        check.passed = check.max_error <= check.tolerance;
        report.checks.push_back(check);
    }

    // Built-in states exercising every constructor.
    std::vector<PolarizationState> builtins;
    builtins.push_back(fock_state(0, 0));
    builtins.push_back(fock_state(1, 1));
    builtins.push_back(fock_state(2, 3));
    builtins.push_back(su2_coherent_state(HalfInteger::from_twice(3), 0.7, 1.1));
    builtins.push_back(noon_state(3, 0.4));
    builtins.push_back(two_mode_coherent({1.2, 0.3}, {0.5, -0.7}).state);
    builtins.push_back(mix({{0.25, fock_state(1, 1)},
                            {0.75, su2_coherent_state(HalfInteger::from_int(1), 1.2, 0.3)}}));
    builtins.push_back(sampler.random_multi_sector_state(HalfInteger::from_twice(5)));

    // 2. The Q of every state integrates to 1.
    {
        VerifyCheck check{"normalization", 0.0, 1e-10, false};
        for (const auto& state : builtins)
            check.max_error = std::max(check.max_error,
                                       std::abs(integrate_q(state) - 1.0));
        check.passed = check.max_error <= check.tolerance;
        report.checks.push_back(check);
    }

    // Random corpus for the quadratic checks, single- and multi-sector.
    std::vector<PolarizationState> corpus;
    for (int t = 1; t <= 8; ++t)
        corpus.push_back(sampler.random_sector_state(HalfInteger::from_twice(t)));
    corpus.push_back(sampler.random_multi_sector_state(HalfInteger::from_twice(4)));
    corpus.push_back(sampler.random_multi_sector_state(HalfInteger::from_twice(6)));

    // 3. Area split: quadrature total equals the sum over ranks, and each
    // rank agrees with the algebraic closed form.
    {
        VerifyCheck check{"area split", 0.0, 1e-10, false};
        for (const auto& state : corpus) {
            const SphereGrid grid = build_grid(state.max_spin());
            const AreaReport areas = area_report(state, grid);
            check.max_error = std::max(check.max_error, areas.residual);
            const MultipoleTable table = extract_multipoles(state);
            for (int K = 0; K <= areas.k_max; ++K) {
                const double closed = effective_area_K_closed(table, K);
                check.max_error = std::max(check.max_error,
                                           std::abs(areas.areas[K] - closed));
            }
        }
        check.passed = check.max_error <= check.tolerance;
        report.checks.push_back(check);
    }

    // 4. Extract-then-reconstruct is the identity; multipole weights add up
    // to the purity.
    {
        VerifyCheck check{"multipole round trip", 0.0, 1e-12, false};
        for (const auto& state : corpus) {
            const MultipoleTable table = extract_multipoles(state);
            const PolarizationState back = reconstruct_state(table);
            double purity_from_table = 0.0;
            for (const auto& [s, rho] : state.sectors()) {
                const Eigen::MatrixXcd diff = rho - back.sector(s);
                check.max_error = std::max(check.max_error, diff.cwiseAbs().maxCoeff());
            }
            for (int K = 0; K <= table.max_rank(); ++K)
                purity_from_table += multipole_strength(table, K);
            check.max_error = std::max(check.max_error,
                                       std::abs(purity_from_table - state.purity()));
        }
        check.passed = check.max_error <= check.tolerance;
        report.checks.push_back(check);
    }

    // 5. Spin coherent states follow the closed-form area law at every rank,
    // wherever they point.
    {
        VerifyCheck check{"coherent area law", 0.0, 1e-10, false};
        for (int t = 1; t <= 12; ++t) {
            const HalfInteger s = HalfInteger::from_twice(t);
            const double theta = sampler.uniform(0.0, M_PI);
            const double phi = sampler.uniform(0.0, 2.0 * M_PI);
            const PolarizationState state = su2_coherent_state(s, theta, phi);
            const SphereGrid grid = build_grid(s);
            for (int K = 0; K <= t; ++K) {
                const double quad = effective_area_K(state, grid, K);
                const double law = coherent_area_K(s, K);
                check.max_error = std::max(check.max_error, std::abs(quad - law));
            }
        }
        check.passed = check.max_error <= check.tolerance;
        report.checks.push_back(check);
    }

    return report;
}

} // namespace polsphere
