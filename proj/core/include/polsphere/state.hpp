#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "polsphere/half_integer.hpp"

namespace polsphere {

// Basis convention used throughout: within a spin-S sector the basis states
// |S, m> are ordered by descending m, so row 0 is m = +S and row 2S is
// m = -S.  In two-mode photon-number language S = (n_h + n_v)/2,
// m = (n_h - n_v)/2, and the row index equals n_v.
inline int sector_dim(HalfInteger s) { return s.twice_value() + 1; }
inline int sector_index(HalfInteger s, HalfInteger m) {
    return (s.twice_value() - m.twice_value()) / 2;
}
inline HalfInteger sector_m(HalfInteger s, int index) {
    return HalfInteger(s.twice_value() - 2 * index);
}

using SectorMap = std::map<HalfInteger, Eigen::MatrixXcd>;

struct StokesVector {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    double norm() const;
};

struct StokesUncertainty {
    double total_variance = 0.0;   // summed variance of the three components
    double half_mean_photon = 0.0; // the lower bound it can never beat
};

// A polarization state: a direct sum of density-matrix blocks, one per
// excitation manifold, with no coherences between different manifolds.
// Immutable after construction; the constructor validates unit trace,
// hermiticity and positive semidefiniteness of every block.
class PolarizationState {
public:
    explicit PolarizationState(SectorMap sectors, double tol = 1e-10);

    const SectorMap& sectors() const { return sectors_; }
    bool has_sector(HalfInteger s) const { return sectors_.count(s) != 0; }
    const Eigen::MatrixXcd& sector(HalfInteger s) const;
    double sector_weight(HalfInteger s) const;

    HalfInteger max_spin() const;
    int max_multipole_rank() const { return max_spin().twice_value(); }
    double mean_photon_number() const;
    double trace() const;
    double purity() const;

private:
    SectorMap sectors_;
};

// |n_h, n_v> as a polarization state: a one-dimensional projector in the
// sector with 2S = n_h + n_v.
PolarizationState fock_state(int n_h, int n_v);

// Amplitudes <S, m | S; theta, phi> of the spin coherent state at
// colatitude theta, azimuth phi, in descending-m order.
Eigen::VectorXcd coherent_amplitudes(HalfInteger s, double theta, double phi);

// Spin coherent state |S; theta, phi>: the lowest-weight state |S, -S>
// dragged to colatitude theta, azimuth phi.
PolarizationState su2_coherent_state(HalfInteger s, double theta, double phi);

// (|n, 0> + e^{i relative_phase} |0, n>) / sqrt(2)
PolarizationState noon_state(int n, double relative_phase);

struct TwoModeCoherentResult {
    PolarizationState state;
    double renormalization;  // weight kept after truncating the photon tail
    int max_photon_number;   // largest excitation manifold retained
};

// Two-mode Glauber coherent state |alpha_h>|alpha_v> projected onto the
// polarization sector: a Poissonian mixture over excitation manifolds of
// spin coherent states, truncated once the remaining tail weight drops
// below trunc_eps and renormalized.
TwoModeCoherentResult two_mode_coherent(std::complex<double> alpha_h,
                                        std::complex<double> alpha_v,
                                        double trunc_eps = 1e-12);

// Convex combination.  Weights must be nonnegative and sum to 1.
PolarizationState mix(const std::vector<std::pair<double, PolarizationState>>& parts);

// Stokes component operator within one sector; component is 1, 2 or 3,
// with component 3 diagonal in the |S, m> basis.
Eigen::MatrixXcd spin_matrix(HalfInteger s, int component);

// Rotation matrix e^{-i phi S_3} e^{+i theta S_2} e^{+i phi S_3} on one sector.
Eigen::MatrixXcd displacement_matrix(HalfInteger s, double theta, double phi);

// The same rotation applied to a whole state, block by block.
PolarizationState rotate(const PolarizationState& state, double theta, double phi);

StokesVector stokes_mean(const PolarizationState& state);
StokesUncertainty stokes_uncertainty(const PolarizationState& state);

} // namespace polsphere
