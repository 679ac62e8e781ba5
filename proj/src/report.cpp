#include "cstarinv/report.hpp"

#include <iomanip>
#include <sstream>

namespace cstarinv {

namespace {

std::string format_double(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
    if (format == ReportFormat::Machine) {
        Json doc = Json::object();
        doc["command"] = report.command;
        doc["seed"] = report.seed;
        Json checks = Json::array();
        for (const auto& c : report.checks) {
            Json rec = Json::object();
            rec["name"] = c.name;
            rec["residual"] = c.residual;
            rec["threshold"] = c.threshold;
            rec["verdict"] = c.verdict();
            checks.push_back(std::move(rec));
        }
        doc["checks"] = std::move(checks);
        doc["objects"] = report.objects;
        doc["info"] = report.info;
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "command: " << report.command << "  (seed " << report.seed << ")\n";
    for (const auto& c : report.checks) {
        out << "  " << std::left << std::setw(44) << c.name << " residual "
            << std::setw(13) << format_double(c.residual) << " threshold "
            << std::setw(13) << format_double(c.threshold) << " " << c.verdict() << "\n";
    }
    for (const auto& [key, value] : report.info.items())
        out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
    if (!report.objects.empty()) {
        for (const auto& [key, value] : report.objects.items())
            out << "  constructed: " << key << "\n";
    }
    return out.str();
}

}  // namespace cstarinv
