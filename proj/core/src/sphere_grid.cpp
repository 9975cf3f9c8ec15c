#include "polsphere/sphere_grid.hpp"

#include <algorithm>
#include <cmath>

#include "polsphere/errors.hpp"

namespace polsphere {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw DomainError("gauss_legendre: need at least one node");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-style initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one polishing step after convergence
                p0 = 1.0; p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                x -= p1 / dp;
                break;
            }
        }
        nodes[i] = -x; // ascending order: the guesses start near +1
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

SphereGrid build_grid_custom(int n_theta, int n_phi) {
    if (n_theta < 1 || n_phi < 1)
        throw DomainError("build_grid_custom: grid dimensions must be positive");
    SphereGrid g;
    std::vector<double> x;
    gauss_legendre(n_theta, x, g.theta_weights);
    g.thetas.resize(n_theta);
    for (int i = 0; i < n_theta; ++i)
        g.thetas[i] = std::acos(x[n_theta - 1 - i]); // theta ascending
    std::reverse(g.theta_weights.begin(), g.theta_weights.end());
    g.phis.resize(n_phi);
    for (int j = 0; j < n_phi; ++j)
        g.phis[j] = 2.0 * M_PI * j / n_phi;
    g.phi_weight = 2.0 * M_PI / n_phi;
    g.exact_degree = std::min(2 * n_theta - 1, n_phi - 1);
    return g;
}

SphereGrid build_grid(HalfInteger s_max) {
    if (s_max.twice_value() < 0) throw DomainError("build_grid: negative spin");
    const int k_max = s_max.twice_value(); // largest multipole rank, 2*s_max
    return build_grid_custom(2 * k_max + 1, 4 * k_max + 1);
}

} // namespace polsphere
