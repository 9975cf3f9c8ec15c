#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polsphere::cli {

struct RunConfig {
    std::string command;     // multipoles | qgrid | areas | verify | info
    std::string state_path;  // JSON state description
    std::string out_path;
    int k_max = -1;          // -1 = every rank the state supports
    std::optional<std::pair<int, int>> grid; // (n_theta, n_phi) override
    std::string format = "csv";              // csv | json
    std::vector<double> coherent_sweep;      // spin values for the area sweep
    std::uint64_t seed = 20240915;
    bool inject_fault = false; // perturb one coupling inside verify
};

// Executes one command.  Progress and summaries go to out, errors to err
// as a single machine-parsable line "error: <category>: <reason>".
// Returns the process exit code: 0 success, 1 failed verification,
// 2 input/schema problem, 3 computation error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace polsphere::cli
