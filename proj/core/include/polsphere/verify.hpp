#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polsphere {

struct VerifyOptions {
    std::uint64_t seed = 20240915;
    int n_random_states = 20;
    // Scales the dipole highest-weight coupling inside the multipole route.
    // 1.0 means exact; anything else must make the route-equivalence check
    // fail, which demonstrates the check actually bites.
    double fault_cg_scale = 1.0;
};

struct VerifyCheck {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
};

// Runs the internal cross-checks on seeded random states and built-in
// examples: overlap route vs multipole route, normalization of Q, the
// per-rank area split against the algebraic closed form, the multipole
// round trip, and the coherent-state area law.
VerifyReport run_verification(const VerifyOptions& options = {});

} // namespace polsphere
