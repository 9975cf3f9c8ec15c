#include "polsphere/multipole.hpp"

#include <cmath>
#include <mutex>
#include <tuple>

#include "polsphere/angular.hpp"
#include "polsphere/errors.hpp"

namespace polsphere {

namespace {

std::mutex cache_mutex;
std::map<std::tuple<int, int, int>, Eigen::MatrixXcd>& tensor_cache() {
    static std::map<std::tuple<int, int, int>, Eigen::MatrixXcd> cache;
    return cache;
}

Eigen::MatrixXcd build_tensor(HalfInteger s, int K, int q) {
    const int d = sector_dim(s);
    const double scale = std::sqrt((2.0 * K + 1.0) / d);
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        const HalfInteger m = sector_m(s, j);
        const HalfInteger mp = m + HalfInteger::from_int(q);
        if (abs(mp) > s) continue;
        const int i = sector_index(s, mp);
        t(i, j) = scale * clebsch_gordan(s, m, HalfInteger::from_int(K),
                                         HalfInteger::from_int(q), s, mp);
    }
    return t;
}

} // namespace

const Eigen::MatrixXcd& tensor_operator(HalfInteger s, int K, int q) {
    if (s.twice_value() < 0) throw DomainError("tensor_operator: negative spin");
    if (K < 0 || K > s.twice_value())
        throw DomainError("tensor_operator: rank out of range for this sector");
    if (q < -K || q > K)
        throw DomainError("tensor_operator: component out of range");
    const auto key = std::make_tuple(s.twice_value(), K, q);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = tensor_cache().find(key);
    if (it == tensor_cache().end())
        it = tensor_cache().emplace(key, build_tensor(s, K, q)).first;
    // std::map nodes are stable, so the reference survives later insertions.
    return it->second;
}

void MultipoleTable::add_sector(HalfInteger s, int k_max) {
    if (s.twice_value() < 0) throw DomainError("MultipoleTable: negative spin");
    if (k_max < 0 || k_max > s.twice_value())
        throw DomainError("MultipoleTable: declared rank range out of bounds");
    Sector sec;
    sec.k_max = k_max;
    sec.values.assign(static_cast<size_t>(k_max + 1) * (k_max + 1), {0.0, 0.0});
    sectors_[s] = std::move(sec);
}

namespace {
size_t rank_offset(int K, int q) {
    // ranks 0..K-1 occupy K^2 slots; q runs -K..K within rank K
    return static_cast<size_t>(K) * K + static_cast<size_t>(q + K);
}
} // namespace

void MultipoleTable::set(HalfInteger s, int K, int q, std::complex<double> value) {
    auto it = sectors_.find(s);
    if (it == sectors_.end())
        throw DomainError("MultipoleTable: sector " + s.str() + " not declared");
    if (K < 0 || K > it->second.k_max || q < -K || q > K)
        throw DomainError("MultipoleTable: (K, q) outside declared range");
    it->second.values[rank_offset(K, q)] = value;
}

std::complex<double> MultipoleTable::get(HalfInteger s, int K, int q) const {
    auto it = sectors_.find(s);
    if (it == sectors_.end())
        throw DomainError("MultipoleTable: sector " + s.str() + " not present");
    if (K < 0) throw DomainError("MultipoleTable: negative rank");
    if (q < -K || q > K) throw DomainError("MultipoleTable: component out of range");
    if (K > it->second.k_max) {
        if (K <= s.twice_value())
            throw IncompleteTableError("MultipoleTable: rank " + std::to_string(K)
                                       + " beyond the declared range of sector " + s.str());
        return {0.0, 0.0}; // rank above 2s vanishes identically
    }
    return it->second.values[rank_offset(K, q)];
}

bool MultipoleTable::has_sector(HalfInteger s) const {
    return sectors_.count(s) != 0;
}

int MultipoleTable::sector_k_max(HalfInteger s) const {
    auto it = sectors_.find(s);
    if (it == sectors_.end())
        throw DomainError("MultipoleTable: sector " + s.str() + " not present");
    return it->second.k_max;
}

std::vector<HalfInteger> MultipoleTable::spins() const {
    std::vector<HalfInteger> out;
    out.reserve(sectors_.size());
    for (const auto& [s, sec] : sectors_) out.push_back(s);
    return out;
}

int MultipoleTable::max_rank() const {
    int k = 0;
    for (const auto& [s, sec] : sectors_) k = std::max(k, sec.k_max);
    return k;
}

bool MultipoleTable::complete_to(int K) const {
    for (const auto& [s, sec] : sectors_)
        if (sec.k_max < std::min(K, s.twice_value())) return false;
    return true;
}

MultipoleTable extract_multipoles(const PolarizationState& state, int k_max) {
    MultipoleTable table;
    for (const auto& [s, rho] : state.sectors()) {
        const int k_top = k_max < 0 ? s.twice_value()
                                    : std::min(k_max, s.twice_value());
        table.add_sector(s, k_top);
        for (int K = 0; K <= k_top; ++K) {
            for (int q = -K; q <= K; ++q) {
                const Eigen::MatrixXcd& t = tensor_operator(s, K, q);
                // tr(rho T^dag): T couples m -> m + q only, so walk columns
                std::complex<double> acc = 0.0;
                for (int j = 0; j < t.cols(); ++j) {
                    const HalfInteger m = sector_m(s, j);
                    const HalfInteger mp = m + HalfInteger::from_int(q);
                    if (abs(mp) > s) continue;
                    const int i = sector_index(s, mp);
                    acc += std::conj(t(i, j)) * rho(i, j);
                }
                table.set(s, K, q, acc);
            }
        }
    }
    return table;
}

PolarizationState reconstruct_state(const MultipoleTable& table, double tol) {
    SectorMap out;
    for (const auto& [s, sec] : table.sectors()) {
        if (sec.k_max < s.twice_value())
            throw IncompleteTableError("reconstruct_state: sector " + s.str()
                                       + " only filled to rank "
                                       + std::to_string(sec.k_max));
        const int d = sector_dim(s);
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
        for (int K = 0; K <= sec.k_max; ++K)
            for (int q = -K; q <= K; ++q)
                rho += table.get(s, K, q) * tensor_operator(s, K, q);
        out.emplace(s, std::move(rho));
    }
    return PolarizationState(std::move(out), tol);
}

double multipole_strength(const MultipoleTable& table, int K) {
    if (K < 0) throw DomainError("multipole_strength: negative rank");
    if (!table.complete_to(K))
        throw IncompleteTableError("multipole_strength: table not complete to rank "
                                   + std::to_string(K));
    double sum = 0.0;
    for (const auto& [s, sec] : table.sectors()) {
        if (K > s.twice_value()) continue;
        for (int q = -K; q <= K; ++q)
            sum += std::norm(table.get(s, K, q));
    }
    return sum;
}

} // namespace polsphere
