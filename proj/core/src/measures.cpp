#include "polsphere/measures.hpp"

#include <cmath>

#include "polsphere/angular.hpp"
#include "polsphere/errors.hpp"

namespace polsphere {

double effective_area(const PolarizationState& state, const SphereGrid& grid) {
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.n_theta(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < grid.n_phi(); ++j) {
            const double q = q_total(state, grid.thetas[i], grid.phis[j]);
            row += q * q;
        }
        acc += grid.weight(i) * row;
    }
    return acc;
}

double effective_area_K(const PolarizationState& state, const SphereGrid& grid,
                        int K) {
    if (K < 0) throw DomainError("effective_area_K: negative rank");
    const MultipoleTable table = extract_multipoles(state);
    const auto coeff = field_coefficients(table, std::min(K, table.max_rank()));
    if (K >= static_cast<int>(coeff.size()))
        return 0.0; // rank above anything the state carries
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.n_theta(); ++i) {
        const SphericalHarmonicTable ylm(K, grid.thetas[i]);
        double row = 0.0;
        for (std::size_t j = 0; j < grid.n_phi(); ++j) {
            std::complex<double> v = 0.0;
            for (int q = -K; q <= K; ++q)
                v += coeff[K][q + K] * ylm(K, q, grid.phis[j]);
            row += v.real() * v.real();
        }
        acc += grid.weight(i) * row;
    }
    return acc;
}

double effective_area_K_closed(const MultipoleTable& table, int K) {
    if (K < 0) throw DomainError("effective_area_K_closed: negative rank");
    if (!table.complete_to(K))
        throw IncompleteTableError("effective_area_K_closed: table not complete to rank "
                                   + std::to_string(K));
    if (K > table.max_rank()) return 0.0;
    const auto coeff = field_coefficients(table, K);
    double acc = 0.0;
    for (int q = -K; q <= K; ++q)
        acc += std::norm(coeff[K][q + K]);
    return acc;
}

double coherent_area_K(HalfInteger s, int K) {
    if (s.twice_value() < 0) throw DomainError("coherent_area_K: negative spin");
    if (K < 0 || K > s.twice_value())
        throw DomainError("coherent_area_K: rank out of range for this spin");
    const double c = cg_stretched(s, K);
    return (2.0 * K + 1.0) / (4.0 * M_PI) * c * c * c * c;
}

AreaReport area_report(const PolarizationState& state, const SphereGrid& grid,
                       int k_max) {
    const QField field = evaluate_field(state, grid, k_max);
    AreaReport report;
    report.k_max = field.k_max;
    report.n_theta = static_cast<int>(grid.n_theta());
    report.n_phi = static_cast<int>(grid.n_phi());
    report.grid_warning = field.grid_warning;
    report.areas.assign(field.k_max + 1, 0.0);

    const std::size_t n_phi = grid.n_phi();
    double total = 0.0;
    for (std::size_t i = 0; i < grid.n_theta(); ++i) {
        const double w = grid.weight(i);
        double row_total = 0.0;
        for (std::size_t j = 0; j < n_phi; ++j) {
            const double q = field.total[i * n_phi + j];
            row_total += q * q;
        }
        total += w * row_total;
        for (int K = 0; K <= field.k_max; ++K) {
            double row = 0.0;
            for (std::size_t j = 0; j < n_phi; ++j) {
                const double v = field.components[K][i * n_phi + j];
                row += v * v;
            }
            report.areas[K] += w * row;
        }
    }
    report.total = total;
    double sum = 0.0;
    for (double a : report.areas) sum += a;
    report.residual = std::abs(total - sum);
    return report;
}

HiddenPolarizationReport hidden_polarization(const PolarizationState& state,
                                             const SphereGrid& grid,
                                             double eps_dipole,
                                             double eps_higher) {
    if (!(eps_dipole > 0.0) || !(eps_higher > 0.0))
        throw DomainError("hidden_polarization: thresholds must be positive");
    const AreaReport report = area_report(state, grid);
    HiddenPolarizationReport out;
    out.eps_dipole = eps_dipole;
    out.eps_higher = eps_higher;
    out.dipole_area = report.k_max >= 1 ? report.areas[1] : 0.0;
    for (int K = 2; K <= report.k_max; ++K) out.higher_area += report.areas[K];
    out.verdict = out.dipole_area < eps_dipole && out.higher_area > eps_higher;
    return out;
}

} // namespace polsphere
