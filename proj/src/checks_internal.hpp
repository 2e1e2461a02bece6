#pragma once

#include "moebius/checks.hpp"

#include <functional>

namespace moebius::detail {

/// Parameter lookup for one cell.
class Args {
public:
    explicit Args(const Params& p) : p_(p) {}
    bool has(const std::string& key) const;
    const std::string& str(const std::string& key) const; // DomainError when missing
    Real real(const std::string& key) const;
    double num(const std::string& key) const;
    long long integer(const std::string& key) const;
    ComplexParam s(const std::string& key = "s") const;
    const Params& all() const { return p_; }

private:
    const Params& p_;
};

using CellFn = std::function<std::vector<Cell>(const Args&, const RunOptions&)>;

struct CheckImpl {
    CheckInfo info;
    CellFn run;
    std::function<void(BoundReport&)> finish = {}; // optional: report-level notes
};

void add_identity_checks(std::vector<CheckImpl>& out);
void add_inequality_checks(std::vector<CheckImpl>& out);
void add_report_checks(std::vector<CheckImpl>& out);

/// Residual cell: value |lhs - rhs|, radius the sum of radii, pass when the enclosures overlap.
Cell identity_cell(const Params& p, const CBall& lhs, const CBall& rhs);

/// Margin cell for quantity <= bound. Pass when the margin is not below minus its radius;
/// a margin that is not proven nonnegative is marked heuristic. A failure carries fail_rigor.
Cell margin_cell(const Params& p, const Ball& bound, const Ball& quantity, Rigor fail_rigor = Rigor::rigorous);

/// Same with margin and its radius given directly.
Cell margin_cell(const Params& p, double margin, double radius, Rigor fail_rigor = Rigor::rigorous);

/// zeta(s) and zeta'(s) at a radius suited to the working precision.
ZetaResult zeta_at(const ComplexParam& s);

Grid grid_of(std::initializer_list<std::pair<std::string, std::vector<std::string>>> axes);

/// Log-spaced text values from lo to hi, n points.
std::vector<std::string> log_spaced(double lo, double hi, int n);

std::string fmt(double v, int digits = 6);

Ball gamma_ball();
Ball half();
inline constexpr double kGamma = 0.57721566490153286;
inline constexpr double kGammaErr = 1e-17;

std::uint64_t floor_u64(const Real& x);
void need_x(const Real& x);
inline std::vector<Cell> one(Cell c) { return {std::move(c)}; }

} // namespace moebius::detail
