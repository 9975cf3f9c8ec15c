#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "polsphere/multipole.hpp"
#include "polsphere/sphere_grid.hpp"
#include "polsphere/state.hpp"

namespace polsphere {

// Replacement for the highest-weight coupling coefficient, used to inject
// a controlled perturbation into the multipole route (self-test hook).
// A default-constructed (empty) function means the exact coefficient.
using StretchedCgFn = std::function<double(HalfInteger, int)>;

// Q distribution of one sector at one direction, straight from the
// definition: (2s+1)/(4 pi) <theta, phi| rho |theta, phi>.  Tiny negative
// values from rounding are clamped to zero; a significantly negative value
// means the block was not positive semidefinite and throws ConsistencyError.
double q_sector_direct(const Eigen::MatrixXcd& rho, HalfInteger s,
                       double theta, double phi);

// Sum of q_sector_direct over all sectors; integrates to 1 over the sphere.
double q_total(const PolarizationState& state, double theta, double phi);

// The same sector Q assembled from its multipoles instead of the overlap.
// The table sector must be complete to rank 2s.  Agrees with
// q_sector_direct to rounding; kept separate so the two routes can check
// each other.
double q_sector_via_multipoles(const MultipoleTable& table, HalfInteger s,
                               double theta, double phi,
                               const StretchedCgFn& cg = nullptr);

// Spherical-harmonic coefficients of the total Q:
//   Q(theta, phi) = sum_{K <= k_max} sum_q coeff[K][q + K] Y_Kq(theta, phi).
// Sectors enter weighted by their highest-weight coupling, so this is where
// the multipole content of every sector merges into one field.
// Requires the table complete to k_max.
std::vector<std::vector<std::complex<double>>>
field_coefficients(const MultipoleTable& table, int k_max,
                   const StretchedCgFn& cg = nullptr);

// Rank-K slice of the total Q at one direction.  Summing over K = 0..2s_max
// reproduces q_total; individual slices may be negative.
double q_component(const MultipoleTable& table, int K, double theta, double phi,
                   const StretchedCgFn& cg = nullptr);
double q_component(const PolarizationState& state, int K, double theta, double phi);

// The total Q and its rank slices sampled over a whole grid.
// total[i * n_phi + j] is the value at (thetas[i], phis[j]);
// components[K] is laid out the same way.
struct QField {
    SphereGrid grid;
    std::vector<double> total;
    std::vector<std::vector<double>> components;
    int k_max = 0;
    bool grid_warning = false; // grid too coarse for quadratic functionals
};

// Samples the state's Q over the grid.  k_max < 0 means all ranks the state
// supports; the total is always computed from the full overlap, so a rank
// cutoff affects only the slices.  threads = 0 means POLSPHERE_THREADS or,
// failing that, the hardware count.
QField evaluate_field(const PolarizationState& state, const SphereGrid& grid,
                      int k_max = -1, int threads = 0);

} // namespace polsphere
