#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "checks.hpp"
#include "errors.hpp"
#include "report.hpp"

namespace fracext {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"kernels",   "eigen",      "routes", "extension",    "neumann",
                                                "conjugate", "principles", "limits", "harnack-probe"};
    return names;
}

/** @brief Runs one named verification suite; unknown names raise UsageError. */
inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg = {}) {
    using namespace checks;
    const auto start = std::chrono::steady_clock::now();
    SuiteReport r;
    r.suite_name = name;
    // a group that throws outside its per-case guards is recorded as one failed case
    auto add = [&](const char* group, auto&& make) {
        try {
            check::append(r.cases, make());
        } catch (const std::exception& e) {
            SuiteCase c{group};
            c.note = e.what();
            r.cases.push_back(c);
        }
    };
    if (name == "kernels") {
        add("constant_cases", [&] { return constant_cases(); });
        add("poisson_mass_cases", [&] { return poisson_mass_cases(); });
        add("kernel_property_cases", [&] { return kernel_property_cases(); });
        add("kernel_bound_cases", [&] { return kernel_bound_cases(); });
    } else if (name == "eigen") {
        add("eigen_identity_cases", [&] { return eigen_identity_cases(); });
        add("eigen_property_cases", [&] { return eigen_property_cases(); });
    } else if (name == "routes") {
        add("route_cases", [&] { return route_cases(); });
    } else if (name == "extension") {
        add("subordination_cases", [&] { return subordination_cases(); });
        add("extension_property_cases", [&] { return extension_property_cases(); });
        add("residual_order_cases", [&] { return residual_order_cases(); });
    } else if (name == "neumann") {
        add("neumann_route_cases", [&] { return neumann_route_cases(); });
        add("neumann_example_cases", [&] { return neumann_example_cases(); });
    } else if (name == "conjugate") {
        add("conjugate_example_cases", [&] { return conjugate_example_cases(); });
        add("conjugate_limit_cases", [&] { return conjugate_limit_cases(); });
        add("cr_order_cases", [&] { return cr_order_cases(); });
    } else if (name == "principles") {
        add("principle_cases", [&] { return principle_cases(cfg); });
        add("principle_example_cases", [&] { return principle_example_cases(); });
    } else if (name == "limits") {
        add("sigma_limit_cases", [&] { return sigma_limit_cases(); });
        add("mode_limit_cases", [&] { return mode_limit_cases(); });
    } else if (name == "harnack-probe") {
        r.gating = false;
        add("harnack_cases", [&] { return harnack_cases(cfg); });
    } else {
        throw UsageError("unknown suite '" + name + "'");
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace fracext
