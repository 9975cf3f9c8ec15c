#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "polsphere/half_integer.hpp"
#include "polsphere/state.hpp"

namespace polsphere {

// Irreducible tensor operator T_Kq on the spin-s sector, normalized so that
// tr(T_Kq^dag T_K'q') = delta_KK' delta_qq'.  Matrix element at (m', m) is
// sqrt((2K+1)/(2s+1)) <s m; K q | s m'>, nonzero only when m' = m + q.
// Built once per (s, K, q) and cached; the returned reference stays valid
// for the lifetime of the program.
const Eigen::MatrixXcd& tensor_operator(HalfInteger s, int K, int q);

// State multipoles rho_Kq per sector.  Every sector records the rank range
// it was actually filled to, so a table extracted with a rank cutoff cannot
// silently pose as complete: asking beyond the declared range throws
// IncompleteTableError.
class MultipoleTable {
public:
    struct Sector {
        int k_max = -1;
        std::vector<std::complex<double>> values; // (k_max+1)^2 entries, rank-major
    };

    // Declares a sector filled for ranks 0..k_max (k_max <= 2s); values
    // start at zero and are assigned with set().
    void add_sector(HalfInteger s, int k_max);
    void set(HalfInteger s, int K, int q, std::complex<double> value);

    std::complex<double> get(HalfInteger s, int K, int q) const;
    bool has_sector(HalfInteger s) const;
    int sector_k_max(HalfInteger s) const;
    std::vector<HalfInteger> spins() const;
    const std::map<HalfInteger, Sector>& sectors() const { return sectors_; }

    // Largest declared rank across sectors.
    int max_rank() const;

    // True when every sector is filled up to rank min(K, 2s), i.e. nothing
    // that could contribute at rank K is missing.
    bool complete_to(int K) const;

private:
    std::map<HalfInteger, Sector> sectors_;
};

// Reads the multipoles of a state.  k_max < 0 means all ranks each sector
// supports; otherwise each sector is filled to min(k_max, 2s) and the table
// remembers that cutoff.
MultipoleTable extract_multipoles(const PolarizationState& state, int k_max = -1);

// Rebuilds the block density matrices from a fully populated table.  Every
// sector must be complete to its own 2s, else IncompleteTableError.
PolarizationState reconstruct_state(const MultipoleTable& table, double tol = 1e-8);

// Total weight at rank K across sectors: sum_s sum_q |rho_Kq|^2.
// Throws IncompleteTableError when a sector that could contribute at rank K
// was not filled that far.
double multipole_strength(const MultipoleTable& table, int K);

} // namespace polsphere
