#include "moebius/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace moebius {

namespace {

std::string join(const Params& p, const char* kv, const char* sep) {
    std::string out;
    for (auto& [k, v] : p) out += (out.empty() ? "" : sep) + k + kv + v;
    return out;
}

// numbers go through their decimal text so the dump never shows more digits than that text
nlohmann::ordered_json number(double value, double radius) {
    if (!std::isfinite(value)) return nullptr;
    return std::strtod(format_value(value, radius).c_str(), nullptr);
}

nlohmann::ordered_json radius_json(double radius) {
    if (!std::isfinite(radius)) return nullptr;
    return std::strtod(format_radius(radius).c_str(), nullptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

} // namespace

int justified_digits(double value, double radius) {
    if (value == 0 || !std::isfinite(value)) return 1;
    if (radius <= 0) return 17;
    // digits down to the first one the radius can change
    int d = static_cast<int>(std::floor(std::log10(std::fabs(value)))) - static_cast<int>(std::floor(std::log10(radius))) + 1;
    return std::clamp(d, 1, 17);
}

std::string format_value(double value, double radius) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", justified_digits(value, radius), value);
    return buf;
}

std::string format_radius(double radius) {
    if (radius <= 0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1e", radius);
    double r = std::strtod(buf, nullptr);
    if (r < radius) { // round the second digit up
        double e = std::pow(10.0, std::floor(std::log10(radius)) - 1);
        std::snprintf(buf, sizeof buf, "%.1e", r + e);
    }
    return buf;
}

std::string reports_to_json(const std::vector<BoundReport>& reports, const ReportOptions& opt) {
    auto arr = nlohmann::ordered_json::array();
    for (auto& r : reports) {
        nlohmann::ordered_json j;
        j["check"] = r.check;
        j["kind"] = to_string(r.kind);
        j["grid"] = r.grid;
        j["worst"] = number(r.worst, r.worst_radius);
        j["worst_radius"] = radius_json(r.worst_radius);
        j["location"] = r.location;
        j["pass"] = r.pass;
        j["rigor"] = to_string(r.rigor);
        j["elapsed_ms"] = opt.timing ? nlohmann::ordered_json(std::round(r.elapsed_ms * 10) / 10) : nlohmann::ordered_json(nullptr);
        auto notes = nlohmann::ordered_json::object();
        for (auto& [k, v] : r.notes) notes[k] = v;
        j["notes"] = notes;
        if (opt.cells) {
            auto cells = nlohmann::ordered_json::array();
            for (auto& c : r.cells) {
                nlohmann::ordered_json cj;
                auto params = nlohmann::ordered_json::object();
                for (auto& [k, v] : c.params) params[k] = v;
                cj["params"] = params;
                cj["value"] = number(c.value, c.radius);
                cj["radius"] = radius_json(c.radius);
                if (c.rel >= 0) cj["rel"] = radius_json(c.rel);
                cj["pass"] = c.pass;
                cj["rigor"] = to_string(c.rigor);
                if (!c.detail.empty()) {
                    auto d = nlohmann::ordered_json::object();
                    for (auto& [k, v] : c.detail) d[k] = v;
                    cj["detail"] = d;
                }
                cells.push_back(std::move(cj));
            }
            j["cells"] = cells;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<BoundReport>& reports) {
    std::string out = "check,params,value,radius,pass,rigor,note\n";
    for (auto& r : reports)
        for (auto& c : r.cells) {
            out += csv_field(r.check) + ',' + csv_field(join(c.params, "=", ";")) + ',' + format_value(c.value, c.radius) +
                   ',' + format_radius(c.radius) + ',' + (c.pass ? "true" : "false") + ',' + to_string(c.rigor) + ',' +
                   csv_field(join(c.detail, "=", "; ")) + '\n';
        }
    return out;
}

} // namespace moebius
