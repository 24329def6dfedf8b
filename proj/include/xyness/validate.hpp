#pragma once

#include <functional>
#include <string>
#include <vector>

#include "xyness/scattering.hpp"

namespace xyness {

enum class ValidationMode { quick, full };

struct CheckResult {
    std::string module;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Replaceable implementations, so a suite run can be pointed at a modified formula.
struct ValidationHooks {
    std::function<SigmaSystem(const ModelConfig&, double)> sigma_inverse =
        [](const ModelConfig& c, double e) { return xyness::sigma_inverse(c, e); };
};

std::vector<CheckResult> run_validation(ValidationMode mode, const ValidationHooks& hooks = {});

// Individual checks, exposed for tests.
CheckResult check_sigma_inverse(const ValidationHooks& hooks);
CheckResult check_delta_vs_q(const ValidationHooks& hooks);

} // namespace xyness
