#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "polsphere/errors.hpp"
#include "polsphere/io.hpp"
#include "polsphere/measures.hpp"
#include "polsphere/multipole.hpp"
#include "polsphere/qfunction.hpp"
#include "polsphere/sphere_grid.hpp"
#include "polsphere/state_spec.hpp"
#include "polsphere/verify.hpp"

namespace polsphere::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw SchemaError("cannot read state file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

PolarizationState load_state(const RunConfig& config, std::string* note) {
    if (config.state_path.empty())
        throw SchemaError("this command needs --state");
    return parse_state_spec(read_file(config.state_path), note);
}

SphereGrid make_grid(const RunConfig& config, const PolarizationState& state,
                     std::ostream& out) {
    if (config.grid) {
        const SphereGrid g = build_grid_custom(config.grid->first, config.grid->second);
        if (!g.resolves(state.max_multipole_rank()))
            out << "warning: grid " << config.grid->first << "x" << config.grid->second
                << " does not resolve rank " << state.max_multipole_rank()
                << " products; integrals may be inexact\n";
        return g;
    }
    return build_grid(state.max_spin());
}

void check_format(const std::string& format) {
    if (format != "csv" && format != "json")
        throw SchemaError("format must be csv or json, got \"" + format + "\"");
}

void require_out(const RunConfig& config) {
    if (config.out_path.empty())
        throw SchemaError("this command needs --out");
}

int cmd_multipoles(const RunConfig& config, std::ostream& out) {
    check_format(config.format);
    require_out(config);
    std::string note;
    const PolarizationState state = load_state(config, &note);
    const MultipoleTable table = extract_multipoles(state, config.k_max);
    write_file(config.out_path, [&](std::ostream& os) {
        if (config.format == "csv") write_multipoles_csv(os, table);
        else write_multipoles_json(os, table);
    });
    if (!note.empty()) out << note << "\n";
    for (int K = 0; K <= table.max_rank(); ++K)
        out << "K=" << K << " strength " << format_g17(multipole_strength(table, K))
            << "\n";
    out << "wrote " << config.out_path << "\n";
    return 0;
}

int cmd_qgrid(const RunConfig& config, std::ostream& out) {
    check_format(config.format);
    require_out(config);
    std::string note;
    const PolarizationState state = load_state(config, &note);
    const SphereGrid grid = make_grid(config, state, out);
    const QField field = evaluate_field(state, grid, config.k_max);
    write_file(config.out_path, [&](std::ostream& os) {
        if (config.format == "csv") write_qfield_csv(os, field);
        else write_qfield_json(os, field);
    });
    if (!note.empty()) out << note << "\n";
    out << "grid " << grid.n_theta() << "x" << grid.n_phi()
        << ", ranks 0.." << field.k_max << "\n";
    out << "wrote " << config.out_path << "\n";
    return 0;
}

int cmd_areas(const RunConfig& config, std::ostream& out) {
    check_format(config.format);
    require_out(config);

    if (!config.coherent_sweep.empty()) {
        // Closed-form rank areas of spin coherent states, one block per spin.
        std::vector<HalfInteger> spins;
        for (double sv : config.coherent_sweep) {
            const long long t = std::llround(2.0 * sv);
            if (std::abs(2.0 * sv - static_cast<double>(t)) > 1e-9 || t < 0)
                throw SchemaError("coherent sweep spins must be nonnegative "
                                  "integers or half-integers");
            spins.push_back(HalfInteger::from_twice(static_cast<int>(t)));
        }
        write_file(config.out_path, [&](std::ostream& os) {
            if (config.format == "csv") {
                os << "S2,K,area\n";
                for (const HalfInteger s : spins)
                    for (int K = 0; K <= s.twice_value(); ++K)
                        os << s.twice_value() << ',' << K << ','
                           << format_g17(coherent_area_K(s, K)) << '\n';
            } else {
                os << "{\n  \"sweep\": [\n";
                bool first = true;
                for (const HalfInteger s : spins) {
                    for (int K = 0; K <= s.twice_value(); ++K) {
                        if (!first) os << ",\n";
                        first = false;
                        os << "    {\"S2\": " << s.twice_value() << ", \"K\": " << K
                           << ", \"area\": " << format_g17(coherent_area_K(s, K)) << "}";
                    }
                }
                os << "\n  ]\n}\n";
            }
        });
        out << "wrote " << config.out_path << "\n";
        return 0;
    }

    std::string note;
    const PolarizationState state = load_state(config, &note);
    const SphereGrid grid = make_grid(config, state, out);
    const AreaReport report = area_report(state, grid, config.k_max);
    write_file(config.out_path, [&](std::ostream& os) {
        if (config.format == "csv") write_area_csv(os, report);
        else write_area_json(os, report);
    });
    if (!note.empty()) out << note << "\n";
    const HiddenPolarizationReport hp = hidden_polarization(state, grid);
    out << "total area " << format_g17(report.total)
        << ", split residual " << format_g17(report.residual) << "\n";
    out << "hidden polarization: " << (hp.verdict ? "true" : "false")
        << " (dipole " << format_g17(hp.dipole_area)
        << ", higher " << format_g17(hp.higher_area) << ")\n";
    out << "wrote " << config.out_path << "\n";
    return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    VerifyOptions options;
    options.seed = config.seed;
    if (config.inject_fault)
        options.fault_cg_scale = 1.0 + 1e-6;
    const VerifyReport report = run_verification(options);
    int failed = 0;
    for (const auto& check : report.checks) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-22s max error %-12.3e tol %-8.0e %s",
                      check.name.c_str(), check.max_error, check.tolerance,
                      check.passed ? "PASS" : "FAIL");
        out << line << "\n";
        if (!check.passed) ++failed;
    }
    if (failed > 0) {
        err << "error: verify: " << failed << " check(s) failed\n";
        return 1;
    }
    out << "all checks passed\n";
    return 0;
}

int cmd_info(const RunConfig& config, std::ostream& out) {
    std::string note;
    const PolarizationState state = load_state(config, &note);
    std::ostringstream ss;
    if (!note.empty()) ss << note << "\n";
    ss << "sectors:\n";
    for (const auto& [s, rho] : state.sectors())
        ss << "  S=" << s.str() << "  weight " << format_g17(rho.trace().real()) << "\n";
    ss << "max spin: " << state.max_spin().str()
       << " (rank limit " << state.max_multipole_rank() << ")\n";
    ss << "mean photon number: " << format_g17(state.mean_photon_number()) << "\n";
    ss << "purity: " << format_g17(state.purity()) << "\n";
    const StokesVector v = stokes_mean(state);
    ss << "stokes mean: (" << format_g17(v.s1) << ", " << format_g17(v.s2)
       << ", " << format_g17(v.s3) << "), norm " << format_g17(v.norm()) << "\n";
    const StokesUncertainty u = stokes_uncertainty(state);
    ss << "stokes variance: " << format_g17(u.total_variance)
       << " (bound " << format_g17(u.half_mean_photon) << ")\n";
    const SphereGrid grid = build_grid(state.max_spin());
    const HiddenPolarizationReport hp = hidden_polarization(state, grid);
    ss << "hidden polarization: " << (hp.verdict ? "true" : "false")
       << " (dipole " << format_g17(hp.dipole_area)
       << ", higher " << format_g17(hp.higher_area) << ")\n";
    if (!config.out_path.empty())
        write_file(config.out_path, [&](std::ostream& os) { os << ss.str(); });
    out << ss.str();
    return 0;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "multipoles") return cmd_multipoles(config, out);
        if (config.command == "qgrid") return cmd_qgrid(config, out);
        if (config.command == "areas") return cmd_areas(config, out);
        if (config.command == "verify") return cmd_verify(config, out, err);
        if (config.command == "info") return cmd_info(config, out);
        throw SchemaError("unknown command \"" + config.command + "\"");
    } catch (const SchemaError& e) {
        err << "error: schema: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: computation: " << e.what() << "\n";
        return 3;
    }
}

} // namespace polsphere::cli
