#pragma once

#include <vector>

#include "polsphere/multipole.hpp"
#include "polsphere/qfunction.hpp"
#include "polsphere/sphere_grid.hpp"
#include "polsphere/state.hpp"

namespace polsphere {

// Integral of the squared Q distribution: the inverse of how widely the
// state spreads over the sphere.  Computed by quadrature of the overlap
// route; exact when grid.resolves(2 * s_max).
double effective_area(const PolarizationState& state, const SphereGrid& grid);

// The same integral for the rank-K slice of Q alone.
double effective_area_K(const PolarizationState& state, const SphereGrid& grid, int K);

// Algebraic evaluation of the rank-K integral straight from the table,
// cross-sector terms included: the harmonic power sum_q |c_Kq|^2 of the
// field coefficients.  Matches effective_area_K to rounding on a grid that
// resolves the field.
double effective_area_K_closed(const MultipoleTable& table, int K);

// Closed form of the rank-K area of a spin coherent state,
// (2K+1)/(4 pi) * C^4 with C the highest-weight coupling; independent of
// where on the sphere the state points.
double coherent_area_K(HalfInteger s, int K);

struct AreaReport {
    std::vector<double> areas;  // A_K for K = 0..k_max
    double total = 0.0;         // integral of the full Q squared
    int k_max = 0;
    int n_theta = 0;
    int n_phi = 0;
    double residual = 0.0;      // |total - sum of areas|; nonzero tail when k_max cuts ranks off
    bool grid_warning = false;
};

// Full per-rank area breakdown in one grid pass.  k_max < 0 means every
// rank the state supports.
AreaReport area_report(const PolarizationState& state, const SphereGrid& grid,
                       int k_max = -1);

struct HiddenPolarizationReport {
    double dipole_area = 0.0;
    double higher_area = 0.0;  // ranks 2 and up
    double eps_dipole = 0.0;
    double eps_higher = 0.0;
    bool verdict = false;
};

// A state hides its polarization structure when the dipole slice carries
// nothing while higher ranks still do.  The thresholds make the qualitative
// criterion operational.
HiddenPolarizationReport hidden_polarization(const PolarizationState& state,
                                             const SphereGrid& grid,
                                             double eps_dipole = 1e-10,
                                             double eps_higher = 1e-6);

} // namespace polsphere
