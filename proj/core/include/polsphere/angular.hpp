#pragma once

#include <complex>
#include <vector>

#include "polsphere/half_integer.hpp"

namespace polsphere {

// ln(n!) from a lazily built table accumulated in extended precision.
// Throws DomainError for n < 0 and OverflowError beyond the table budget.
double ln_factorial(int n);

struct CGArgs {
    HalfInteger j1, m1, j2, m2, J, M;
};

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> evaluated exactly: the
// Racah sum is carried out in big-integer rationals, so the only rounding
// is the final square root.  Selection-rule violations (triangle rule,
// M != m1 + m2) give 0; malformed quantum numbers throw DomainError.
double clebsch_gordan(const CGArgs& args);
double clebsch_gordan(HalfInteger j1, HalfInteger m1,
                      HalfInteger j2, HalfInteger m2,
                      HalfInteger J, HalfInteger M);

// Highest-weight coefficient <S S; S S | ... > coupling a spin-S sector to
// multipole rank K at q = 0, i.e. the scalar that fixes how strongly rank K
// can show up in a spin-S distribution.  Evaluated in log space.  K > 2S
// gives 0; K < 0 or a non-integer spin-rank combination throws DomainError.
double cg_stretched(HalfInteger S, int K);

// Wigner rotation matrix element d^j_{m_row, m_col}(theta) for the active
// rotation exp(+i theta S_y); with this sign d^1_{0,-1}(theta) = +sin(theta)/sqrt(2).
double wigner_small_d(HalfInteger j, HalfInteger m_row, HalfInteger m_col,
                      double theta);

// Y_l^m(theta, phi) with the Condon-Shortley phase, evaluated through the
// normalized associated Legendre recurrence (stable upward in degree).
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

// All normalized associated Legendre factors up to degree l_max at one
// colatitude, so a whole column of Y_l^m values at a grid node costs one
// recurrence sweep.  legendre(l, m) accepts either sign of m with the
// conjugation parity folded in: Y_l^m(theta, phi) = legendre(l, m) * e^{i m phi}.
class SphericalHarmonicTable {
public:
    SphericalHarmonicTable(int l_max, double theta);

    double legendre(int l, int m) const;
    std::complex<double> operator()(int l, int m, double phi) const;
    int l_max() const { return l_max_; }

private:
    int l_max_;
    std::vector<double> values_; // packed (l, m >= 0) triangle
};

} // namespace polsphere
