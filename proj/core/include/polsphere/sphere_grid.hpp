#pragma once

#include <cstddef>
#include <vector>

#include "polsphere/half_integer.hpp"

namespace polsphere {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Product quadrature on the unit sphere: Gauss-Legendre in cos(theta)
// crossed with a uniform trapezoid rule in phi.  The weight of node
// (i, j) is theta_weights[i] * phi_weight; all weights sum to 4*pi.
struct SphereGrid {
    std::vector<double> thetas;        // colatitudes, ascending in (0, pi)
    std::vector<double> theta_weights; // Legendre weights, sum = 2
    std::vector<double> phis;          // uniform azimuths starting at 0
    double phi_weight = 0.0;           // 2*pi / n_phi

    // Largest total degree for which products of two spherical harmonics
    // integrate exactly: both the polynomial degree in cos(theta) and the
    // azimuthal order the phi rule can tell apart.
    int exact_degree = 0;

    std::size_t n_theta() const { return thetas.size(); }
    std::size_t n_phi() const { return phis.size(); }
    std::size_t n_nodes() const { return thetas.size() * phis.size(); }

    double weight(std::size_t i_theta) const {
        return theta_weights[i_theta] * phi_weight;
    }

    // True when every product Y_K Y_K' with K, K' <= k_max is integrated
    // exactly, i.e. the grid fully resolves a field of that band limit.
    bool resolves(int k_max) const { return 2 * k_max <= exact_degree; }
};

// Grid sized for states whose largest sector has spin s_max: enough theta
// nodes and phi samples to resolve all multipole ranks up to 2*s_max with
// margin for quadratic functionals of the field.
SphereGrid build_grid(HalfInteger s_max);

// Explicitly sized grid; n_theta, n_phi >= 1.
SphereGrid build_grid_custom(int n_theta, int n_phi);

} // namespace polsphere
