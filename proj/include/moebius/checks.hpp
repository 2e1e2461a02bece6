#pragma once

#include "moebius/approx.hpp"
#include "moebius/zeta.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace moebius {

enum class CheckKind { identity, inequality, report };
const char* to_string(CheckKind k);

using Params = std::vector<std::pair<std::string, std::string>>;

/// Named parameter axes, values kept as text so reports echo the input.
/// Text form: "s=2,0.5+3i;x=10,1000".
struct Grid {
    std::vector<std::pair<std::string, std::vector<std::string>>> axes;

    static Grid parse(std::string_view text);
    void set(const std::string& key, std::vector<std::string> values);
    const std::vector<std::string>* find(const std::string& key) const;
    /// Axes of `over` replace ours, new axes are appended.
    Grid merged(const Grid& over) const;
    std::string str() const;
    bool empty() const { return axes.empty(); }
};

/// One evaluated grid cell. For identities `value` is |lhs - rhs| and `rel`
/// that residual over |rhs| (-1 when the enclosure of rhs contains 0); for inequalities `value` is the margin
/// (bound minus quantity); for reports it is the reported number.
struct Cell {
    Params params;
    double value = 0;
    double radius = 0;
    double rel = -1; // identities only
    bool pass = true;
    Rigor rigor = Rigor::rigorous;
    Params detail;
};

struct BoundReport {
    std::string check;
    CheckKind kind = CheckKind::identity;
    std::string grid;
    double worst = 0;
    double worst_radius = 0;
    std::string location;
    bool pass = true;
    Rigor rigor = Rigor::rigorous;
    double elapsed_ms = 0;
    std::vector<Cell> cells;
    Params notes;
};

struct RunOptions {
    int threads = 1;
    double target_radius = 1e-20; // for quadrature-backed checks
};

struct CheckInfo {
    std::string name;
    CheckKind kind;
    std::string summary;
    Grid defaults;
};

const std::vector<CheckInfo>& check_registry();
/// DomainError for an unknown name.
const CheckInfo& find_check(const std::string& name);

/// Runs every cell of the default grid overridden by `grid`. Cells are
/// evaluated on `threads` OpenMP threads and merged in grid order.
BoundReport run_check(const std::string& name, const Grid& grid = {}, const RunOptions& opt = {});

// Landau corollary and the headline composition.

/// (1 + |rho - 1| |rho| / |Re rho|)^-1, for 0 < Re rho <= 1.
Ball landau_constant(const ComplexParam& rho);

/// Ordinate of the first zeta zero to 20 digits.
inline constexpr const char* kFirstZeroOrdinate = "14.134725141734693790";

/// Following the corollary's proof with sup|Q_rho| split at T_split:
///   x^{Re rho} <= (1 + sup|Q|) int_1^x |m| + 1/x  so the constant is (1 + max(near, far))^-1.
/// Throws InapplicableError when T_split < |Im rho| (the far bound needs t >= |tau|).
double improved_landau(const ComplexParam& rho, double supQ_near, double supQ_far, double T_split);

/// Imported bound |mcheck(t) - 1| <= c / log t from t0 = 2.5e11.
inline constexpr double kHeadlineT0 = 2.5e11;

/// C * c, the uniform bound on x^{sigma-1} log x |...| obtained from an inequality with
/// constant C and sup_{t>=x} |mcheck(t) - 1| <= c / log x. Throws InapplicableError if t0 > x0.
double compose_headline(double C, double c, double x0, double t0 = kHeadlineT0);

/// int_1^x |m| >= c (sqrt x - 1/x) at every integer x <= x_max, with a per-piece
/// certificate lhs(n) >= rhs(n+1) covering the real x in between.
BoundReport landau_lower_check(double x_max, double c);

} // namespace moebius
