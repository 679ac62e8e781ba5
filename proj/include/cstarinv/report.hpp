#pragma once

#include <string>
#include <vector>

#include "cstarinv/problem.hpp"

namespace cstarinv {

enum class ReportFormat { Human, Machine };

/// One residual-vs-threshold record; the verdict derives from the two numbers
/// and nothing else, so every report is re-checkable offline.
struct CheckRecord {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass() const { return residual <= threshold; }
    std::string verdict() const { return pass() ? "pass" : "fail"; }
};

struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    /// Constructed objects in problem-file schema.
    Json objects = Json::object();
    /// Free-form informational entries (deterministic order).
    Json info = Json::object();

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
};

std::string emit_report(const Report& report, ReportFormat format);

}  // namespace cstarinv
