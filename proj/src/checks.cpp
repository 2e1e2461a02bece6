#include "checks_internal.hpp"

#include "moebius/errors.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>

namespace moebius {

const char* to_string(CheckKind k) {
    switch (k) {
    case CheckKind::identity: return "identity";
    case CheckKind::inequality: return "inequality";
    case CheckKind::report: return "report";
    }
    return "?";
}

Grid Grid::parse(std::string_view text) {
    Grid g;
    std::string t(text);
    std::stringstream axes(t);
    std::string axis;
    while (std::getline(axes, axis, ';')) {
        if (axis.empty()) continue;
        auto eq = axis.find('=');
        if (eq == std::string::npos || eq == 0) throw DomainError("grid axis '" + axis + "' is not key=v1,v2,...");
        std::vector<std::string> vals;
        std::stringstream vs(axis.substr(eq + 1));
        std::string v;
        while (std::getline(vs, v, ','))
            if (!v.empty()) vals.push_back(v);
        if (vals.empty()) throw DomainError("grid axis '" + axis.substr(0, eq) + "' has no values");
        g.set(axis.substr(0, eq), std::move(vals));
    }
    return g;
}

void Grid::set(const std::string& key, std::vector<std::string> values) {
    for (auto& [k, v] : axes)
        if (k == key) {
            v = std::move(values);
            return;
        }
    axes.emplace_back(key, std::move(values));
}

const std::vector<std::string>* Grid::find(const std::string& key) const {
    for (auto& [k, v] : axes)
        if (k == key) return &v;
    return nullptr;
}

Grid Grid::merged(const Grid& over) const {
    Grid g = *this;
    for (auto& [k, v] : over.axes) g.set(k, v);
    return g;
}

std::string Grid::str() const {
    std::string out;
    for (auto& [k, v] : axes) {
        if (!out.empty()) out += ';';
        out += k + '=';
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
    }
    return out;
}

namespace detail {

bool Args::has(const std::string& key) const {
    for (auto& [k, v] : p_)
        if (k == key) return true;
    return false;
}

const std::string& Args::str(const std::string& key) const {
    for (auto& [k, v] : p_)
        if (k == key) return v;
    throw DomainError("missing parameter '" + key + "'");
}

Real Args::real(const std::string& key) const { return parse_real(str(key)); }

double Args::num(const std::string& key) const {
    const std::string& v = str(key);
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0') throw DomainError("parameter " + key + "='" + v + "' is not a number");
    return d;
}

long long Args::integer(const std::string& key) const {
    double d = num(key);
    if (d != std::floor(d) || std::fabs(d) > 9e15) throw DomainError("parameter " + key + " must be an integer");
    return static_cast<long long>(d);
}

ComplexParam Args::s(const std::string& key) const { return ComplexParam::parse(str(key)); }

Cell identity_cell(const Params& p, const CBall& lhs, const CBall& rhs) {
    Cell c;
    c.params = p;
    CBall d = lhs - rhs;
    c.value = mid_abs_upper(d);
    c.radius = d.rad;
    c.pass = overlaps(lhs, rhs);
    double scale = lower_abs(rhs);
    c.rel = scale > 0 ? up(c.value / scale) : -1; // undefined when rhs may vanish
    return c;
}

Cell margin_cell(const Params& p, double margin, double radius, Rigor fail_rigor) {
    Cell c;
    c.params = p;
    c.value = margin;
    c.radius = radius;
    c.pass = margin >= -radius;
    if (!c.pass) c.rigor = fail_rigor;
    else if (margin < radius) c.rigor = Rigor::heuristic;
    return c;
}

Cell margin_cell(const Params& p, const Ball& bound, const Ball& quantity, Rigor fail_rigor) {
    Ball m = bound - quantity;
    return margin_cell(p, to_double(m.mid), up(m.rad + mag(m.mid) * 0x1p-52), fail_rigor);
}

ZetaResult zeta_at(const ComplexParam& s) {
    double d = std::fabs(to_double(s.sigma) - 1) + std::fabs(to_double(s.tau));
    double target = std::ldexp(1.0, -(working_precision() - 30)) / std::min(1.0, std::max(d, 1e-6));
    return zeta_cached(s, std::max(target, 1e-33));
}

Grid grid_of(std::initializer_list<std::pair<std::string, std::vector<std::string>>> axes) {
    Grid g;
    for (auto& [k, v] : axes) g.set(k, v);
    return g;
}

std::vector<std::string> log_spaced(double lo, double hi, int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
        double t = n == 1 ? lo : lo * std::pow(hi / lo, double(i) / (n - 1));
        out.push_back(fmt(t, 10));
    }
    return out;
}

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

Ball gamma_ball() { return Ball(euler_gamma(), up(unit_roundoff())); }
Ball half() { return Ball(Real("0.5")); }

std::uint64_t floor_u64(const Real& x) { return boost::multiprecision::floor(x).convert_to<std::uint64_t>(); }

void need_x(const Real& x) {
    if (!(x >= 1)) throw DomainError("x must be >= 1");
}

namespace {

const std::vector<CheckImpl>& impls() {
    static const std::vector<CheckImpl> all = [] {
        std::vector<CheckImpl> v;
        add_identity_checks(v);
        add_inequality_checks(v);
        add_report_checks(v);
        return v;
    }();
    return all;
}

const CheckImpl& find_impl(const std::string& name) {
    for (auto& c : impls())
        if (c.info.name == name) return c;
    throw DomainError("unknown check '" + name + "'");
}

std::vector<Params> expand(const Grid& g) {
    std::vector<Params> cells{Params{}};
    for (auto& [k, vals] : g.axes) {
        std::vector<Params> next;
        for (auto& c : cells)
            for (auto& v : vals) {
                Params p = c;
                p.emplace_back(k, v);
                next.push_back(std::move(p));
            }
        cells = std::move(next);
    }
    return cells;
}

// same error type, message prefixed with the failing cell
[[noreturn]] void rethrow_at(std::exception_ptr e, const std::string& where) {
    try {
        std::rethrow_exception(e);
    } catch (const PoleError& x) {
        throw PoleError(where + x.what());
    } catch (const DomainError& x) {
        throw DomainError(where + x.what());
    } catch (const CapacityError& x) {
        throw CapacityError(where + x.what());
    } catch (const PrecisionError& x) {
        throw PrecisionError(where + x.what());
    } catch (const CoverageError& x) {
        throw CoverageError(where + x.what());
    } catch (const UnsupportedKernelError& x) {
        throw UnsupportedKernelError(where + x.what());
    } catch (const InapplicableError& x) {
        throw InapplicableError(where + x.what());
    } catch (const IoError& x) {
        throw IoError(where + x.what());
    } catch (const std::exception& x) {
        throw Error(where + x.what());
    }
}

std::string location_of(const Params& p) {
    std::string out;
    for (auto& [k, v] : p) out += (out.empty() ? "" : ";") + k + "=" + v;
    return out;
}

} // namespace
} // namespace detail

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> v;
        for (auto& c : detail::impls()) v.push_back(c.info);
        return v;
    }();
    return infos;
}

const CheckInfo& find_check(const std::string& name) { return detail::find_impl(name).info; }

BoundReport run_check(const std::string& name, const Grid& grid, const RunOptions& opt) {
    const auto& impl = detail::find_impl(name);
    const Grid g = impl.info.defaults.merged(grid);
    const auto groups = detail::expand(g);
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<std::vector<Cell>> results(groups.size());
    std::vector<std::exception_ptr> errors(groups.size());
    const int bits = working_precision();
    const int threads = std::max(1, opt.threads);
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
    for (long long i = 0; i < static_cast<long long>(groups.size()); ++i) {
        PrecisionScope scope(bits);
        try {
            detail::Args args(groups[i]);
            results[i] = impl.run(args, opt);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (errors[i]) detail::rethrow_at(errors[i], name + " [" + detail::location_of(groups[i]) + "]: ");

    BoundReport r;
    r.check = name;
    r.kind = impl.info.kind;
    r.grid = g.str();
    for (auto& v : results)
        for (auto& c : v) r.cells.push_back(std::move(c));

    bool any_rigorous_fail = false;
    Rigor pass_rigor = Rigor::rigorous;
    const Cell* worst = nullptr;
    for (auto& c : r.cells) {
        if (!c.pass) {
            r.pass = false;
            if (c.rigor == Rigor::rigorous) any_rigorous_fail = true;
        } else {
            pass_rigor = weaker(pass_rigor, c.rigor);
        }
        if (!worst) worst = &c;
        else if (r.kind == CheckKind::identity ? c.value > worst->value
                 : r.kind == CheckKind::inequality ? c.value < worst->value
                                                   : false)
            worst = &c;
    }
    r.rigor = r.pass ? pass_rigor : (any_rigorous_fail ? Rigor::rigorous : Rigor::heuristic);
    if (worst) {
        r.worst = worst->value;
        r.worst_radius = worst->radius;
        r.location = detail::location_of(worst->params);
    }
    if (impl.finish) impl.finish(r);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace moebius
