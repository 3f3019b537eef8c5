#pragma once

#include <string>
#include <vector>

namespace sepchain {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // populated on failure
};

// Cross-checks the fast implementations against the brute-force references on
// generated small graphs. Everything is seeded; a run is deterministic.
std::vector<CheckResult> run_small_checks();

} // namespace sepchain
