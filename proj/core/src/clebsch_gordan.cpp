#include <gmpxx.h>

#include <algorithm>
#include <cmath>

#include "polsphere/angular.hpp"
#include "polsphere/errors.hpp"

namespace polsphere {

namespace {

constexpr int kFactorialBudget = 100000;

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

int exact_sum(HalfInteger a, HalfInteger b) {
    const int twice = a.twice_value() + b.twice_value();
    if (twice % 2 != 0)
        throw DomainError("clebsch_gordan: spin and projection have incompatible parity");
    return twice / 2;
}

} // namespace

double clebsch_gordan(const CGArgs& a) {
    const auto [j1, m1, j2, m2, J, M] = a;
    if (j1.twice_value() < 0 || j2.twice_value() < 0 || J.twice_value() < 0)
        throw DomainError("clebsch_gordan: negative spin");

    // Parity checks throw; they indicate malformed quantum numbers rather
    // than a vanishing coefficient.
    const int j1pm1 = exact_sum(j1, m1), j1mm1 = exact_sum(j1, -m1);
    const int j2pm2 = exact_sum(j2, m2), j2mm2 = exact_sum(j2, -m2);
    const int JpM = exact_sum(J, M), JmM = exact_sum(J, -M);
    int sum123;
    try {
        sum123 = exact_sum(j1 + j2, J);
    } catch (const DomainError&) {
        throw DomainError("clebsch_gordan: j1 + j2 + J must be an integer");
    }
    if (sum123 + 1 > kFactorialBudget)
        throw OverflowError("clebsch_gordan: spins exceed the factorial budget");

    if (j1pm1 < 0 || j1mm1 < 0 || j2pm2 < 0 || j2mm2 < 0 || JpM < 0 || JmM < 0)
        return 0.0;
    if (m1 + m2 != M) return 0.0;
    if (J > j1 + j2 || J < abs(j1 - j2)) return 0.0;

    const int t1 = exact_sum(j1 + j2, -J);   // j1 + j2 - J
    const int t2 = exact_sum(J + j1, -j2);   // J + j1 - j2
    const int t3 = exact_sum(J + j2, -j1);   // J - j1 + j2
    const int g1 = exact_sum(J - j1, -m2);   // J - j1 - m2   (may be negative)
    const int g2 = exact_sum(J - j2, m1);    // J - j2 + m1   (may be negative)

    mpq_class pref2(J.twice_value() + 1, 1); // 2J + 1
    pref2 *= mpq_class(factorial(t1) * factorial(t2) * factorial(t3),
                       factorial(sum123 + 1));
    pref2 *= mpq_class(factorial(JpM) * factorial(JmM)
                       * factorial(j1mm1) * factorial(j1pm1)
                       * factorial(j2mm2) * factorial(j2pm2), 1);
    pref2.canonicalize();

    const int k_min = std::max({0, -g1, -g2});
    const int k_max = std::min({t1, j1mm1, j2pm2});
    mpq_class sum(0, 1);
    for (int k = k_min; k <= k_max; ++k) {
        mpz_class denom = factorial(k) * factorial(t1 - k) * factorial(j1mm1 - k)
                        * factorial(j2pm2 - k) * factorial(g1 + k) * factorial(g2 + k);
        mpq_class term(1, 1);
        term /= mpq_class(denom, 1);
        sum += (k % 2 == 0) ? term : -term;
    }
    if (sum == 0) return 0.0;

    const int sign = sgn(sum);
    mpq_class value2 = pref2 * sum * sum;
    mpf_class value(value2, 256);
    value = sqrt(value);
    return sign * value.get_d();
}

double clebsch_gordan(HalfInteger j1, HalfInteger m1,
                      HalfInteger j2, HalfInteger m2,
                      HalfInteger J, HalfInteger M) {
    return clebsch_gordan(CGArgs{j1, m1, j2, m2, J, M});
}

} // namespace polsphere
