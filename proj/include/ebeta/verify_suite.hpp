#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ebeta/geometry.hpp"

namespace ebeta {

struct CheckResult {
    std::string name;
    bool ok = false;
    nlohmann::json details = nlohmann::json::object();
};

/// Batch verification run by the CLI `verify all` command: overlap identity
/// convergence, reflection asymmetry on a random grid, the not-totally-self-
/// similar witness, a power-of-two sample of random codings, and the
/// map-collision law. Deterministic (fixed seeds).
std::vector<CheckResult> run_verification_suite(const Beta& beta, int level);

}  // namespace ebeta
