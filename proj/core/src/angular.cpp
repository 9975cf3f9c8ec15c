#include "polsphere/angular.hpp"

#include <cmath>
#include <mutex>

#include "polsphere/errors.hpp"

namespace polsphere {

namespace {

// Generous enough for any sector size this library will meet; the same
// budget bounds the exact Clebsch-Gordan evaluation.
constexpr int kLnFactorialBudget = 100000;

const std::vector<double>& ln_factorial_table() {
    static std::vector<double> table;
    static std::once_flag flag;
    std::call_once(flag, [] {
        table.resize(kLnFactorialBudget + 1);
        long double acc = 0.0L;
        table[0] = 0.0;
        for (int n = 1; n <= kLnFactorialBudget; ++n) {
            acc += std::log(static_cast<long double>(n));
            table[n] = static_cast<double>(acc);
        }
    });
    return table;
}

int half_sum(HalfInteger a, HalfInteger b) {
    // (a + b) as an exact integer; throws if the combination is half-odd.
    const int twice = a.twice_value() + b.twice_value();
    if (twice % 2 != 0)
        throw DomainError("spin projection must differ from the spin by an integer");
    return twice / 2;
}

} // namespace

double ln_factorial(int n) {
    if (n < 0) throw DomainError("ln_factorial: negative argument");
    if (n > kLnFactorialBudget)
        throw OverflowError("ln_factorial: argument exceeds table budget");
    return ln_factorial_table()[n];
}

double cg_stretched(HalfInteger S, int K) {
    if (S.twice_value() < 0) throw DomainError("cg_stretched: negative spin");
    if (K < 0) throw DomainError("cg_stretched: negative rank");
    const int twoS = S.twice_value();
    if (K > twoS) return 0.0;
    const double ln = ln_factorial(twoS + 1) + ln_factorial(twoS)
                    - ln_factorial(twoS - K) - ln_factorial(twoS + 1 + K);
    return std::exp(0.5 * ln);
}

double wigner_small_d(HalfInteger j, HalfInteger m_row, HalfInteger m_col,
                      double theta) {
    if (j.twice_value() < 0) throw DomainError("wigner_small_d: negative spin");
    if (abs(m_row) > j || abs(m_col) > j)
        throw DomainError("wigner_small_d: projection out of range");
    const int jpmr = half_sum(j, m_row);   // j + m'
    const int jmmr = half_sum(j, -m_row);  // j - m'
    const int jpmc = half_sum(j, m_col);   // j + m
    const int jmmc = half_sum(j, -m_col);  // j - m
    const int mr_minus_mc = (m_row.twice_value() - m_col.twice_value()) / 2;

    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const double ln_pref = 0.5 * (ln_factorial(jpmr) + ln_factorial(jmmr)
                                + ln_factorial(jpmc) + ln_factorial(jmmc));

    const int k_min = std::max(0, -mr_minus_mc);
    const int k_max = std::min(jpmc, jmmr);
    double sum = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        const int pc = jpmc + jmmr - 2 * k;      // power of cos(theta/2)
        const int ps = mr_minus_mc + 2 * k;      // power of sin(theta/2)
        const double ln_term = ln_pref - ln_factorial(jpmc - k) - ln_factorial(k)
                             - ln_factorial(jmmr - k) - ln_factorial(mr_minus_mc + k);
        double term = std::exp(ln_term);
        term *= (pc == 0) ? 1.0 : std::pow(c, pc);
        term *= (ps == 0) ? 1.0 : std::pow(s, ps);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

SphericalHarmonicTable::SphericalHarmonicTable(int l_max, double theta)
    : l_max_(l_max) {
    if (l_max < 0) throw DomainError("SphericalHarmonicTable: negative degree");
    values_.resize(static_cast<size_t>(l_max + 1) * (l_max + 2) / 2);
    const double x = std::cos(theta);
    const double s = std::sin(theta);

    auto at = [this](int l, int m) -> double& {
        return values_[static_cast<size_t>(l) * (l + 1) / 2 + m];
    };

    // Fully normalized recurrence with the Condon-Shortley phase carried in
    // the diagonal step; see Varshalovich et al., ch. 5.
    at(0, 0) = 1.0 / std::sqrt(4.0 * M_PI);
    for (int m = 1; m <= l_max; ++m)
        at(m, m) = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * at(m - 1, m - 1);
    for (int m = 0; m < l_max; ++m)
        at(m + 1, m) = std::sqrt(2.0 * m + 3.0) * x * at(m, m);
    for (int m = 0; m <= l_max; ++m) {
        for (int l = m + 2; l <= l_max; ++l) {
            const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
            const double b = std::sqrt(((static_cast<double>(l - 1) * (l - 1)) - static_cast<double>(m) * m)
                                       / (4.0 * static_cast<double>(l - 1) * (l - 1) - 1.0));
            at(l, m) = a * (x * at(l - 1, m) - b * at(l - 2, m));
        }
    }
}

double SphericalHarmonicTable::legendre(int l, int m) const {
    if (l < 0 || l > l_max_) throw DomainError("SphericalHarmonicTable: degree out of range");
    const int am = m < 0 ? -m : m;
    if (am > l) throw DomainError("SphericalHarmonicTable: order out of range");
    const double v = values_[static_cast<size_t>(l) * (l + 1) / 2 + am];
    return (m < 0 && am % 2 != 0) ? -v : v;
}

std::complex<double> SphericalHarmonicTable::operator()(int l, int m, double phi) const {
    const double p = legendre(l, m);
    return p * std::exp(std::complex<double>(0.0, m * phi));
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
    const int am = m < 0 ? -m : m;
    if (l < 0 || am > l) throw DomainError("spherical_harmonic: order out of range");
    SphericalHarmonicTable table(l, theta);
    return table(l, m, phi);
}

} // namespace polsphere
