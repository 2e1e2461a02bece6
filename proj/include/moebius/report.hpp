#pragma once

#include "moebius/checks.hpp"

#include <string>
#include <vector>

namespace moebius {

struct ReportOptions {
    bool timing = false; // elapsed_ms is null otherwise, so reruns are byte-identical
    bool cells = true;
};

/// value printed with only the digits its radius justifies; radius itself to 2 digits, rounded up.
std::string format_value(double value, double radius);
std::string format_radius(double radius);
/// Digits of `value` justified by `radius`, between 1 and 17.
int justified_digits(double value, double radius);

/// JSON array, one object per report with fields in a fixed order:
/// check, kind, grid, worst, worst_radius, location, pass, rigor, elapsed_ms, notes, cells.
std::string reports_to_json(const std::vector<BoundReport>& reports, const ReportOptions& opt = {});

/// One row per cell: check,params,value,radius,pass,rigor,note
std::string reports_to_csv(const std::vector<BoundReport>& reports);

} // namespace moebius
