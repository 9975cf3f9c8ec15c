#include "polsphere/qfunction.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "polsphere/angular.hpp"
#include "polsphere/errors.hpp"

namespace polsphere {

namespace {

double clamp_overlap(double value, HalfInteger s) {
    // <omega|rho|omega> of a valid block is nonnegative; allow rounding slack
    // proportional to the sector prefactor.
    const double tol = 1e-12 * (s.twice_value() + 1);
    if (value < -tol)
        throw ConsistencyError("q function came out negative in sector " + s.str()
                               + " (" + std::to_string(value) + ")");
    return value < 0.0 ? 0.0 : value;
}

double stretched(const StretchedCgFn& cg, HalfInteger s, int K) {
    return cg ? cg(s, K) : cg_stretched(s, K);
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("POLSPHERE_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

double q_sector_direct(const Eigen::MatrixXcd& rho, HalfInteger s,
                       double theta, double phi) {
    const Eigen::VectorXcd a = coherent_amplitudes(s, theta, phi);
    const double overlap = a.dot(rho * a).real();
    const double pref = (s.twice_value() + 1) / (4.0 * M_PI);
    return pref * clamp_overlap(overlap, s);
}

double q_total(const PolarizationState& state, double theta, double phi) {
    double q = 0.0;
    for (const auto& [s, rho] : state.sectors())
        q += q_sector_direct(rho, s, theta, phi);
    return q;
}

double q_sector_via_multipoles(const MultipoleTable& table, HalfInteger s,
                               double theta, double phi,
                               const StretchedCgFn& cg) {
    if (!table.has_sector(s))
        throw DomainError("q_sector_via_multipoles: sector " + s.str() + " not present");
    const int k_top = s.twice_value();
    if (table.sector_k_max(s) < k_top)
        throw IncompleteTableError("q_sector_via_multipoles: sector " + s.str()
                                   + " not complete to rank " + std::to_string(k_top));
    const SphericalHarmonicTable ylm(k_top, theta);
    const double pref = std::sqrt((s.twice_value() + 1) / (4.0 * M_PI));
    std::complex<double> acc = 0.0;
    for (int K = 0; K <= k_top; ++K) {
        const double c = stretched(cg, s, K);
        for (int q = -K; q <= K; ++q) {
            const double sign = ((K + q) % 2 == 0) ? 1.0 : -1.0;
            acc += c * sign * table.get(s, K, q) * ylm(K, q, phi);
        }
    }
    return pref * acc.real();
}

std::vector<std::vector<std::complex<double>>>
field_coefficients(const MultipoleTable& table, int k_max,
                   const StretchedCgFn& cg) {
    if (k_max < 0) throw DomainError("field_coefficients: negative rank cutoff");
    if (!table.complete_to(k_max))
        throw IncompleteTableError("field_coefficients: table not complete to rank "
                                   + std::to_string(k_max));
    std::vector<std::vector<std::complex<double>>> coeff(k_max + 1);
    for (int K = 0; K <= k_max; ++K) {
        coeff[K].assign(2 * K + 1, {0.0, 0.0});
        for (const auto& [s, sec] : table.sectors()) {
            if (K > s.twice_value()) continue;
            const double w = std::sqrt((s.twice_value() + 1) / (4.0 * M_PI))
                           * stretched(cg, s, K);
            for (int q = -K; q <= K; ++q) {
                const double sign = ((K + q) % 2 == 0) ? 1.0 : -1.0;
                coeff[K][q + K] += sign * w * table.get(s, K, q);
            }
        }
    }
    return coeff;
}

double q_component(const MultipoleTable& table, int K, double theta, double phi,
                   const StretchedCgFn& cg) {
    if (K < 0) throw DomainError("q_component: negative rank");
    if (!table.complete_to(K))
        throw IncompleteTableError("q_component: table not complete to rank "
                                   + std::to_string(K));
    const SphericalHarmonicTable ylm(K, theta);
    std::complex<double> acc = 0.0;
    for (const auto& [s, sec] : table.sectors()) {
        if (K > s.twice_value()) continue;
        const double w = std::sqrt((s.twice_value() + 1) / (4.0 * M_PI))
                       * stretched(cg, s, K);
        for (int q = -K; q <= K; ++q) {
            const double sign = ((K + q) % 2 == 0) ? 1.0 : -1.0;
            acc += sign * w * table.get(s, K, q) * ylm(K, q, phi);
        }
    }
    return acc.real();
}

double q_component(const PolarizationState& state, int K, double theta, double phi) {
    const MultipoleTable table = extract_multipoles(state);
    return q_component(table, K, theta, phi);
}

QField evaluate_field(const PolarizationState& state, const SphereGrid& grid,
                      int k_max, int threads) {
    const int rank_top = state.max_multipole_rank();
    const int k_top = k_max < 0 ? rank_top : std::min(k_max, rank_top);

    QField field;
    field.grid = grid;
    field.k_max = k_top;
    field.grid_warning = !grid.resolves(rank_top);
    const std::size_t n_nodes = grid.n_nodes();
    field.total.assign(n_nodes, 0.0);
    field.components.assign(k_top + 1, std::vector<double>(n_nodes, 0.0));

    const MultipoleTable table = extract_multipoles(state);
    const auto coeff = field_coefficients(table, k_top);

    // Per-sector overlap amplitudes factorize into a theta profile and a
    // pure phase in phi, so each theta row costs one rotation-element sweep.
    struct SectorData {
        HalfInteger s;
        const Eigen::MatrixXcd* rho;
    };
    std::vector<SectorData> sectors;
    for (const auto& [s, rho] : state.sectors())
        sectors.push_back({s, &rho});

    const std::size_t n_phi = grid.n_phi();
    auto run_rows = [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t i = row_begin; i < row_end; ++i) {
            const double theta = grid.thetas[i];
            const SphericalHarmonicTable ylm(k_top, theta);
            std::vector<Eigen::VectorXd> profiles(sectors.size());
            for (std::size_t si = 0; si < sectors.size(); ++si) {
                const HalfInteger s = sectors[si].s;
                const int d = sector_dim(s);
                Eigen::VectorXd prof(d);
                for (int r = 0; r < d; ++r)
                    prof(r) = wigner_small_d(s, sector_m(s, r), -s, theta);
                profiles[si] = std::move(prof);
            }
            for (std::size_t j = 0; j < n_phi; ++j) {
                const double phi = grid.phis[j];
                const std::size_t node = i * n_phi + j;

                double total = 0.0;
                for (std::size_t si = 0; si < sectors.size(); ++si) {
                    const HalfInteger s = sectors[si].s;
                    const int d = sector_dim(s);
                    Eigen::VectorXcd a(d);
                    for (int r = 0; r < d; ++r) {
                        const double n_up = 0.5 * (s.twice_value() + sector_m(s, r).twice_value());
                        a(r) = profiles[si](r) * std::exp(std::complex<double>(0.0, -phi * n_up));
                    }
                    const double overlap = a.dot((*sectors[si].rho) * a).real();
                    total += (s.twice_value() + 1) / (4.0 * M_PI) * clamp_overlap(overlap, s);
                }
                field.total[node] = total;

                for (int K = 0; K <= k_top; ++K) {
                    std::complex<double> acc = 0.0;
                    for (int q = -K; q <= K; ++q)
                        acc += coeff[K][q + K] * ylm(K, q, phi);
                    field.components[K][node] = acc.real();
                }
            }
        }
    };

    const int n_threads = std::min<int>(resolve_threads(threads),
                                        static_cast<int>(grid.n_theta()));
    if (n_threads <= 1) {
        run_rows(0, grid.n_theta());
    } else {
        std::vector<std::thread> pool;
        const std::size_t rows = grid.n_theta();
        const std::size_t chunk = (rows + n_threads - 1) / n_threads;
        std::exception_ptr first_error;
        std::mutex error_mutex;
        for (int t = 0; t < n_threads; ++t) {
            const std::size_t b = t * chunk;
            const std::size_t e = std::min(rows, b + chunk);
            if (b >= e) break;
            pool.emplace_back([&, b, e] {
                try {
                    run_rows(b, e);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }
    return field;
}

} // namespace polsphere
