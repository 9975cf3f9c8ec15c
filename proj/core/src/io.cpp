#include "polsphere/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "polsphere/errors.hpp"

namespace polsphere {

using ordered_json = nlohmann::ordered_json;

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_multipoles_csv(std::ostream& os, const MultipoleTable& table) {
    os << "S2,K,q,re,im\n";
    for (const auto& [s, sec] : table.sectors()) {
        for (int K = 0; K <= sec.k_max; ++K) {
            for (int q = -K; q <= K; ++q) {
                const auto v = table.get(s, K, q);
                os << s.twice_value() << ',' << K << ',' << q << ','
                   << format_g17(v.real()) << ',' << format_g17(v.imag()) << '\n';
            }
        }
    }
}

void write_multipoles_json(std::ostream& os, const MultipoleTable& table) {
    ordered_json doc;
    doc["records"] = ordered_json::array();
    for (const auto& [s, sec] : table.sectors()) {
        for (int K = 0; K <= sec.k_max; ++K) {
            for (int q = -K; q <= K; ++q) {
                const auto v = table.get(s, K, q);
                ordered_json rec;
                rec["S2"] = s.twice_value();
                rec["K"] = K;
                rec["q"] = q;
                rec["re"] = v.real();
                rec["im"] = v.imag();
                doc["records"].push_back(std::move(rec));
            }
        }
    }
    os << doc.dump(2) << '\n';
}

void write_qfield_csv(std::ostream& os, const QField& field) {
    os << "theta,phi,weight,Q_total";
    for (int K = 0; K <= field.k_max; ++K) os << ",Q_" << K;
    os << '\n';
    const std::size_t n_phi = field.grid.n_phi();
    for (std::size_t i = 0; i < field.grid.n_theta(); ++i) {
        for (std::size_t j = 0; j < n_phi; ++j) {
            const std::size_t node = i * n_phi + j;
            os << format_g17(field.grid.thetas[i]) << ','
               << format_g17(field.grid.phis[j]) << ','
               << format_g17(field.grid.weight(i)) << ','
               << format_g17(field.total[node]);
            for (int K = 0; K <= field.k_max; ++K)
                os << ',' << format_g17(field.components[K][node]);
            os << '\n';
        }
    }
}

void write_qfield_json(std::ostream& os, const QField& field) {
    ordered_json doc;
    doc["grid"] = {{"n_theta", field.grid.n_theta()},
                   {"n_phi", field.grid.n_phi()},
                   {"exact_degree", field.grid.exact_degree}};
    doc["k_max"] = field.k_max;
    doc["grid_warning"] = field.grid_warning;
    ordered_json cols = ordered_json::array({"theta", "phi", "weight", "Q_total"});
    for (int K = 0; K <= field.k_max; ++K) cols.push_back("Q_" + std::to_string(K));
    doc["columns"] = std::move(cols);
    ordered_json rows = ordered_json::array();
    const std::size_t n_phi = field.grid.n_phi();
    for (std::size_t i = 0; i < field.grid.n_theta(); ++i) {
        for (std::size_t j = 0; j < n_phi; ++j) {
            const std::size_t node = i * n_phi + j;
            ordered_json row = ordered_json::array(
                {field.grid.thetas[i], field.grid.phis[j], field.grid.weight(i),
                 field.total[node]});
            for (int K = 0; K <= field.k_max; ++K)
                row.push_back(field.components[K][node]);
            rows.push_back(std::move(row));
        }
    }
    doc["nodes"] = std::move(rows);
    os << doc.dump(2) << '\n';
}

void write_area_csv(std::ostream& os, const AreaReport& report) {
    os << "K,area\n";
    for (int K = 0; K <= report.k_max; ++K)
        os << K << ',' << format_g17(report.areas[K]) << '\n';
    os << "total," << format_g17(report.total) << '\n';
}

void write_area_json(std::ostream& os, const AreaReport& report) {
    ordered_json doc;
    doc["grid"] = {{"n_theta", report.n_theta}, {"n_phi", report.n_phi}};
    doc["k_max"] = report.k_max;
    doc["grid_warning"] = report.grid_warning;
    doc["residual"] = report.residual;
    ordered_json rows = ordered_json::array();
    for (int K = 0; K <= report.k_max; ++K)
        rows.push_back({{"K", K}, {"area", report.areas[K]}});
    doc["areas"] = std::move(rows);
    doc["total"] = report.total;
    os << doc.dump(2) << '\n';
}

void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& fn) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw Error("cannot open output file: " + path);
    fn(os);
    os.flush();
    if (!os)
        throw Error("write failed: " + path);
}

} // namespace polsphere
