#pragma once

#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "parallel.hpp"

namespace fracext {

enum class CaseStatus { Pass, Fail, Info };

inline const char* status_name(CaseStatus s) {
    switch (s) {
    case CaseStatus::Pass: return "PASS";
    case CaseStatus::Fail: return "FAIL";
    default: return "INFO";
    }
}

/** @brief One verification case: PASS iff |expected - observed| <= tolerance, or its own predicate holds. */
struct SuiteCase {
    SuiteCase() = default;
    explicit SuiteCase(std::string id_, double expected_ = std::numeric_limits<double>::quiet_NaN(),
                       double observed_ = std::numeric_limits<double>::quiet_NaN(), double tolerance_ = 0.0)
        : id(std::move(id_)), expected(expected_), observed(observed_), tolerance(tolerance_) {}

    std::string id;
    double expected = std::numeric_limits<double>::quiet_NaN();
    double observed = std::numeric_limits<double>::quiet_NaN();
    double tolerance = 0.0;
    CaseStatus status = CaseStatus::Fail;
    std::string note;
};

struct SuiteReport {
    std::string suite_name;
    std::vector<SuiteCase> cases;
    double wall_time = 0.0;
    bool gating = true;

    int failures() const {
        int k = 0;
        for (const auto& c : cases)
            if (c.status == CaseStatus::Fail) ++k;
        return k;
    }
    bool passed() const { return failures() == 0; }
};

namespace check {

inline SuiteCase near(std::string id, double expected, double observed, double tol) {
    SuiteCase c{std::move(id), expected, observed, tol};
    c.status = std::fabs(expected - observed) <= tol ? CaseStatus::Pass : CaseStatus::Fail;
    return c;
}

/// PASS iff observed <= bound; the bound is reported as the expected value.
inline SuiteCase at_most(std::string id, double observed, double bound) {
    SuiteCase c{std::move(id), bound, observed, 0.0};
    c.status = observed <= bound ? CaseStatus::Pass : CaseStatus::Fail;
    c.note = "observed <= expected";
    return c;
}

/// PASS iff observed >= bound.
inline SuiteCase at_least(std::string id, double observed, double bound) {
    SuiteCase c{std::move(id), bound, observed, 0.0};
    c.status = observed >= bound ? CaseStatus::Pass : CaseStatus::Fail;
    c.note = "observed >= expected";
    return c;
}

inline SuiteCase predicate(std::string id, double observed, bool ok, std::string note) {
    SuiteCase c{std::move(id)};
    c.observed = observed;
    c.status = ok ? CaseStatus::Pass : CaseStatus::Fail;
    c.note = std::move(note);
    return c;
}

inline SuiteCase info(std::string id, double observed, std::string note = {}) {
    SuiteCase c{std::move(id)};
    c.observed = observed;
    c.status = CaseStatus::Info;
    c.note = std::move(note);
    return c;
}

/**
 * @brief Evaluates make(i) for i in [0, count) concurrently; ids(i) names the case.
 *
 * An exception inside make(i) becomes a failed case carrying the error text.
 */
template <typename Ids, typename Make>
std::vector<SuiteCase> run_cases(size_t count, Ids&& ids, Make&& make) {
    std::vector<SuiteCase> out(count);
    parallel_for(count, [&](size_t i) {
        try {
            out[i] = make(i);
        } catch (const std::exception& e) {
            out[i] = SuiteCase{ids(i)};
            out[i].note = e.what();
        }
        if (out[i].id.empty()) out[i].id = ids(i);
    });
    return out;
}

inline void append(std::vector<SuiteCase>& dst, std::vector<SuiteCase> src) {
    for (auto& c : src) dst.push_back(std::move(c));
}

} // namespace check

} // namespace fracext
