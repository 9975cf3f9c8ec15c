#include "polsphere/state.hpp"

#include <cmath>

#include "polsphere/angular.hpp"
#include "polsphere/errors.hpp"

namespace polsphere {

double StokesVector::norm() const {
    return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3);
}

PolarizationState::PolarizationState(SectorMap sectors, double tol)
    : sectors_(std::move(sectors)) {
    if (sectors_.empty())
        throw ValidationError("state: no sectors");
    double total = 0.0;
    for (const auto& [s, rho] : sectors_) {
        if (s.twice_value() < 0)
            throw ValidationError("state: negative spin sector");
        const int d = sector_dim(s);
        if (rho.rows() != d || rho.cols() != d)
            throw ValidationError("state: sector " + s.str() + " has dimension "
                                  + std::to_string(rho.rows()) + ", expected "
                                  + std::to_string(d));
        const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
        if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
            throw ValidationError("state: sector " + s.str() + " is not hermitian");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
        if (es.info() != Eigen::Success)
            throw ValidationError("state: eigensolver failed on sector " + s.str());
        if (es.eigenvalues().minCoeff() < -tol * scale)
            throw ValidationError("state: sector " + s.str() + " is not positive semidefinite");
        total += rho.trace().real();
    }
    if (std::abs(total - 1.0) > tol * sectors_.size())
        throw ValidationError("state: total trace is " + std::to_string(total)
                              + ", expected 1");
}

const Eigen::MatrixXcd& PolarizationState::sector(HalfInteger s) const {
    auto it = sectors_.find(s);
    if (it == sectors_.end())
        throw DomainError("state: sector " + s.str() + " is not present");
    return it->second;
}

double PolarizationState::sector_weight(HalfInteger s) const {
    auto it = sectors_.find(s);
    return it == sectors_.end() ? 0.0 : it->second.trace().real();
}

HalfInteger PolarizationState::max_spin() const {
    return sectors_.rbegin()->first;
}

double PolarizationState::mean_photon_number() const {
    double n = 0.0;
    for (const auto& [s, rho] : sectors_)
        n += rho.trace().real() * s.twice_value();
    return n;
}

double PolarizationState::trace() const {
    double t = 0.0;
    for (const auto& [s, rho] : sectors_) t += rho.trace().real();
    return t;
}

double PolarizationState::purity() const {
    double p = 0.0;
    for (const auto& [s, rho] : sectors_)
        p += (rho * rho).trace().real();
    return p;
}

PolarizationState fock_state(int n_h, int n_v) {
    if (n_h < 0 || n_v < 0)
        throw DomainError("fock_state: negative photon number");
    const HalfInteger s = HalfInteger::from_twice(n_h + n_v);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(sector_dim(s), sector_dim(s));
    rho(n_v, n_v) = 1.0;
    SectorMap m;
    m.emplace(s, std::move(rho));
    return PolarizationState(std::move(m));
}

Eigen::VectorXcd coherent_amplitudes(HalfInteger s, double theta, double phi) {
    if (s.twice_value() < 0) throw DomainError("coherent_amplitudes: negative spin");
    const int d = sector_dim(s);
    Eigen::VectorXcd a(d);
    for (int i = 0; i < d; ++i) {
        const HalfInteger m = sector_m(s, i);
        const double amp = wigner_small_d(s, m, -s, theta);
        // accumulated azimuthal phase: one unit per step above the pole
        const double n_up = 0.5 * (s.twice_value() + m.twice_value());
        a(i) = amp * std::exp(std::complex<double>(0.0, -phi * n_up));
    }
    return a;
}

PolarizationState su2_coherent_state(HalfInteger s, double theta, double phi) {
    const Eigen::VectorXcd a = coherent_amplitudes(s, theta, phi);
    SectorMap m;
    m.emplace(s, a * a.adjoint());
    return PolarizationState(std::move(m));
}

PolarizationState noon_state(int n, double relative_phase) {
    if (n < 1) throw DomainError("noon_state: need at least one photon");
    const HalfInteger s = HalfInteger::from_twice(n);
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(sector_dim(s));
    a(0) = 1.0 / std::sqrt(2.0);
    a(n) = std::exp(std::complex<double>(0.0, relative_phase)) / std::sqrt(2.0);
    SectorMap m;
    m.emplace(s, a * a.adjoint());
    return PolarizationState(std::move(m));
}

TwoModeCoherentResult two_mode_coherent(std::complex<double> alpha_h,
                                        std::complex<double> alpha_v,
                                        double trunc_eps) {
    if (!(trunc_eps > 0.0) || trunc_eps >= 1.0)
        throw DomainError("two_mode_coherent: trunc_eps must lie in (0, 1)");
    const double ah = std::abs(alpha_h);
    const double av = std::abs(alpha_v);
    const double mean = ah * ah + av * av;
    const double theta = 2.0 * std::atan2(ah, av);
    const double phi = std::arg(alpha_v) - std::arg(alpha_h);

    // Poissonian weights over excitation manifolds, cut once the remaining
    // tail is below trunc_eps.
    std::vector<double> weights;
    double w = std::exp(-mean);
    double kept = 0.0;
    int n = 0;
    while (true) {
        weights.push_back(w);
        kept += w;
        if (1.0 - kept < trunc_eps) break;
        ++n;
        w *= mean / n;
        if (n > 100000)
            throw OverflowError("two_mode_coherent: truncation did not converge");
    }

    SectorMap sectors;
    for (int N = 0; N < static_cast<int>(weights.size()); ++N) {
        const HalfInteger s = HalfInteger::from_twice(N);
        const Eigen::VectorXcd a = coherent_amplitudes(s, theta, phi);
        sectors.emplace(s, (weights[N] / kept) * (a * a.adjoint()));
    }
    return TwoModeCoherentResult{PolarizationState(std::move(sectors)), kept, n};
}

PolarizationState mix(const std::vector<std::pair<double, PolarizationState>>& parts) {
    if (parts.empty()) throw DomainError("mix: no components");
    double sum = 0.0;
    for (const auto& [w, st] : parts) {
        if (w < -1e-12) throw ValidationError("mix: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw ValidationError("mix: weights sum to " + std::to_string(sum)
                              + ", expected 1");
    SectorMap out;
    for (const auto& [w, st] : parts) {
        for (const auto& [s, rho] : st.sectors()) {
            auto it = out.find(s);
            if (it == out.end())
                out.emplace(s, w * rho);
            else
                it->second += w * rho;
        }
    }
    return PolarizationState(std::move(out));
}

Eigen::MatrixXcd spin_matrix(HalfInteger s, int component) {
    if (s.twice_value() < 0) throw DomainError("spin_matrix: negative spin");
    const int d = sector_dim(s);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    if (component == 3) {
        for (int i = 0; i < d; ++i)
            out(i, i) = sector_m(s, i).value();
        return out;
    }
    if (component != 1 && component != 2)
        throw DomainError("spin_matrix: component must be 1, 2 or 3");
    const double sv = s.value();
    Eigen::MatrixXcd raise = Eigen::MatrixXcd::Zero(d, d);
    for (int j = 1; j < d; ++j) {
        const double m = sector_m(s, j).value();
        raise(j - 1, j) = std::sqrt((sv - m) * (sv + m + 1.0));
    }
    if (component == 1)
        out = 0.5 * (raise + raise.adjoint());
    else
        out = std::complex<double>(0.0, -0.5) * (raise - raise.adjoint());
    return out;
}

Eigen::MatrixXcd displacement_matrix(HalfInteger s, double theta, double phi) {
    const int d = sector_dim(s);
    Eigen::MatrixXcd out(d, d);
    for (int i = 0; i < d; ++i) {
        const HalfInteger mr = sector_m(s, i);
        for (int j = 0; j < d; ++j) {
            const HalfInteger mc = sector_m(s, j);
            const double small_d = wigner_small_d(s, mr, mc, theta);
            const double phase = -phi * 0.5 * (mr.twice_value() - mc.twice_value());
            out(i, j) = small_d * std::exp(std::complex<double>(0.0, phase));
        }
    }
    return out;
}

PolarizationState rotate(const PolarizationState& state, double theta, double phi) {
    SectorMap out;
    for (const auto& [s, rho] : state.sectors()) {
        const Eigen::MatrixXcd dm = displacement_matrix(s, theta, phi);
        out.emplace(s, dm * rho * dm.adjoint());
    }
    return PolarizationState(std::move(out));
}

StokesVector stokes_mean(const PolarizationState& state) {
    StokesVector v;
    for (const auto& [s, rho] : state.sectors()) {
        v.s1 += (rho * spin_matrix(s, 1)).trace().real();
        v.s2 += (rho * spin_matrix(s, 2)).trace().real();
        v.s3 += (rho * spin_matrix(s, 3)).trace().real();
    }
    return v;
}

StokesUncertainty stokes_uncertainty(const PolarizationState& state) {
    StokesUncertainty u;
    double casimir = 0.0;
    for (const auto& [s, rho] : state.sectors()) {
        const double w = rho.trace().real();
        casimir += w * s.value() * (s.value() + 1.0);
        u.half_mean_photon += w * s.value();
    }
    const StokesVector m = stokes_mean(state);
    u.total_variance = casimir - (m.s1 * m.s1 + m.s2 * m.s2 + m.s3 * m.s3);
    return u;
}

} // namespace polsphere
