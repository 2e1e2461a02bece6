// moebius: command-line front end for the summatory functions, kernels and the check registry.
#include "moebius/checks.hpp"
#include "moebius/errors.hpp"
#include "moebius/quad.hpp"
#include "moebius/report.hpp"
#include "moebius/sieve.hpp"
#include "moebius/summatory.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace moebius;
using json = nlohmann::ordered_json;

namespace {

struct Global {
    int precision = kDefaultPrecisionBits;
    int threads = 0;
    std::string cache_dir;
    std::string format = "json";
    std::string output;
    bool timing = false;
};

void emit(const Global& g, const std::string& text) {
    if (g.output.empty() || g.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(g.output, std::ios::binary);
    if (!f) throw IoError("cannot write " + g.output);
    f << text;
}

double parse_double(const std::string& key, const std::string& v) {
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0') throw DomainError(key + " '" + v + "' is not a number");
    return d;
}

json value_json(const ApproxValue& a) {
    json j;
    double r = a.radius();
    if (a.is_real()) {
        j["value"] = std::strtod(format_value(a.re_double(), r).c_str(), nullptr);
    } else {
        j["re"] = std::strtod(format_value(a.re_double(), r).c_str(), nullptr);
        j["im"] = std::strtod(format_value(a.im_double(), r).c_str(), nullptr);
    }
    j["radius"] = std::strtod(format_radius(r).c_str(), nullptr);
    j["rigor"] = to_string(a.rigor);
    return j;
}

std::string as_csv(const json& j) {
    std::string out = "field,value,radius\n";
    for (auto& [k, v] : j.items()) {
        if (v.is_object() && v.contains("radius")) {
            std::string val = v.contains("value") ? v["value"].dump() : v["re"].dump() + (v["im"].get<double>() < 0 ? "" : "+") + v["im"].dump() + "i";
            out += k + "," + val + "," + v["radius"].dump() + "\n";
        } else {
            out += k + "," + (v.is_string() ? v.get<std::string>() : v.dump()) + ",\n";
        }
    }
    return out;
}

void emit_json(const Global& g, const json& j) { emit(g, g.format == "csv" ? as_csv(j) : j.dump(2) + "\n"); }

// compute

struct ComputeArgs {
    std::string x;
    std::string fields = "M,m,mcheck,mdcheck,m1,H,Hcheck";
    bool hp = false;
};

int cmd_compute(const Global& g, const ComputeArgs& a) {
    const double x = parse_double("x", a.x);
    if (!(x >= 1)) throw DomainError("x must be >= 1");
    std::vector<std::string> fields;
    {
        std::stringstream ss(a.fields);
        for (std::string f; std::getline(ss, f, ',');)
            if (!f.empty()) fields.push_back(f);
    }
    static const std::set<std::string> known{"M", "m", "mcheck", "mdcheck", "m1", "H", "Hcheck", "I0", "I1"};
    for (auto& f : fields)
        if (!known.count(f)) throw DomainError("unknown field '" + f + "'");
    SummatorySnapshot snap = a.hp ? summatory_hp(parse_real(a.x)) : summatory(x);
    json j;
    j["x"] = a.x;
    j["precision"] = a.hp ? "mpfr-" + std::to_string(working_precision()) : std::string("double");
    for (auto& f : fields) {
        if (f == "M") j["M"] = snap.M;
        else if (f == "m") j["m"] = value_json(snap.m);
        else if (f == "mcheck") j["mcheck"] = value_json(snap.m_check);
        else if (f == "mdcheck") j["mdcheck"] = value_json(snap.m_dcheck);
        else if (f == "m1") j["m1"] = value_json(snap.m1);
        else if (f == "H") j["H"] = value_json(snap.H);
        else if (f == "Hcheck") j["Hcheck"] = value_json(snap.H_check);
    }
    bool i0 = std::count(fields.begin(), fields.end(), "I0"), i1 = std::count(fields.begin(), fields.end(), "I1");
    if (i0 || i1) {
        auto I = abs_m_integrals(parse_real(a.x));
        if (i0) j["I0"] = value_json(I.I0);
        if (i1) j["I1"] = value_json(I.I1);
    }
    emit_json(g, j);
    return 0;
}

// verify

struct VerifyArgs {
    std::vector<std::string> suite;
    std::string grid;
    std::vector<std::pair<std::string, std::string>> flags; // axis overrides from --s, --x, ...
    bool list = false;
    bool no_cells = false;
};

std::vector<std::string> expand_suite(const std::vector<std::string>& suite) {
    std::vector<std::string> out;
    for (auto& item : suite) {
        std::stringstream ss(item);
        for (std::string name; std::getline(ss, name, ',');) {
            if (name.empty()) continue;
            bool group = false;
            for (auto& c : check_registry()) {
                bool hit = name == "all" || (name == "identities" && c.kind == CheckKind::identity) ||
                           (name == "inequalities" && c.kind == CheckKind::inequality) ||
                           (name == "reports" && c.kind == CheckKind::report);
                if (hit) out.push_back(c.name), group = true;
            }
            if (!group) out.push_back(find_check(name).name);
        }
    }
    if (out.empty()) throw DomainError("empty suite");
    return out;
}

int cmd_verify(const Global& g, const VerifyArgs& a) {
    if (a.list) {
        std::string out;
        for (auto& c : check_registry())
            out += c.name + std::string(22 - std::min<std::size_t>(21, c.name.size()), ' ') + to_string(c.kind) + "  " +
                   c.defaults.str() + "\n";
        emit(g, out);
        return 0;
    }
    const auto names = expand_suite(a.suite);
    Grid over = Grid::parse(a.grid);
    for (auto& [k, v] : a.flags) over.set(k, Grid::parse(k + "=" + v).axes.front().second);

    // every override must name an axis of at least one check in the suite
    for (auto& [k, v] : over.axes) {
        bool used = false;
        for (auto& n : names) used |= find_check(n).defaults.find(k) != nullptr;
        if (!used) throw DomainError("no check in the suite has a parameter '" + k + "'");
    }

    RunOptions opt;
    opt.threads = g.threads;
    std::vector<BoundReport> reports;
    for (auto& n : names) {
        Grid mine;
        for (auto& [k, v] : over.axes)
            if (find_check(n).defaults.find(k)) mine.set(k, v);
        reports.push_back(run_check(n, mine, opt));
        auto& r = reports.back();
        std::cerr << n << ": " << (r.pass ? "pass" : "FAIL") << " (" << to_string(r.rigor) << ") worst "
                  << format_value(r.worst, r.worst_radius) << " +- " << format_radius(r.worst_radius) << " at "
                  << r.location << "\n";
    }
    ReportOptions ro;
    ro.timing = g.timing;
    ro.cells = !a.no_cells;
    emit(g, g.format == "csv" ? reports_to_csv(reports) : reports_to_json(reports, ro));

    bool rigorous_fail = false, heuristic_fail = false;
    for (auto& r : reports)
        if (!r.pass) (r.rigor == Rigor::rigorous ? rigorous_fail : heuristic_fail) = true;
    return rigorous_fail ? 1 : heuristic_fail ? 3 : 0;
}

// quad

struct QuadArgs {
    std::string s, T = "20", variant = "Q";
    double target = 1e-6;
    bool signed_integral = false;
};

int cmd_quad(const Global& g, const QuadArgs& a) {
    auto s = ComplexParam::parse(a.s);
    KernelSpec spec{parse_variant(a.variant), s};
    Real T = parse_real(a.T);
    if (!(T > 1)) throw DomainError("T must be > 1");
    json j;
    j["s"] = a.s;
    j["T"] = a.T;
    j["variant"] = to_string(spec.variant);
    if (a.signed_integral) {
        j["signed_integral"] = value_json(integrate_signed_kernel(spec, T, a.target));
    } else {
        auto I = integrate_abs_kernel(spec, T, a.target);
        j["abs_integral"] = value_json(I);
        if (spec.variant == KernelVariant::Q) {
            double Td = to_double(T);
            // tail beyond T from the best sup over [T, inf), and two-sided when T is an integer
            double tail = tail_bound_abs_Q(spec, Td);
            j["tail_sup"] = best_sup_Q(s, Td);
            j["tail_bound"] = std::strtod(format_radius(tail).c_str(), nullptr);
            if (Td == std::floor(Td) && Td >= 2) {
                auto e = tail_enclosure_abs_Q(s, static_cast<long long>(Td));
                j["tail_enclosure"] = {e.lo, e.hi};
                j["total_enclosure"] = {down(lower(I.value.real()) + e.lo), up(upper(I.value.real()) + e.hi)};
            }
        }
    }
    emit_json(g, j);
    return 0;
}

// landau

struct LandauArgs {
    std::string rho = std::string("0.5+") + kFirstZeroOrdinate + "i";
    double xmax = 0;
    double c = 0.0024933;
};

int cmd_landau(const Global& g, const LandauArgs& a) {
    auto rho = ComplexParam::parse(a.rho);
    Ball k = landau_constant(rho);
    json j;
    j["rho"] = a.rho;
    j["constant"] = value_json(ApproxValue(k));
    j["exceeds_0.0025"] = lower(k) > 0.0025;
    int code = 0;
    if (a.xmax > 0) {
        auto r = landau_lower_check(a.xmax, a.c);
        auto& cell = r.cells.front();
        json lj;
        lj["c"] = a.c;
        lj["xmax"] = a.xmax;
        lj["pass"] = r.pass;
        lj["rigor"] = to_string(r.rigor);
        lj["min_margin"] = std::strtod(format_value(cell.value, cell.radius).c_str(), nullptr);
        for (auto& [key, v] : cell.detail) lj[key] = v;
        j["lower_bound_check"] = lj;
        if (!r.pass) code = r.rigor == Rigor::rigorous ? 1 : 3;
    }
    emit_json(g, j);
    return code;
}

// compose

struct ComposeArgs {
    double C = 4, c = 8.55e-6, x0 = kHeadlineT0, t0 = kHeadlineT0, claim = 3.5e-5;
};

int cmd_compose(const Global& g, const ComposeArgs& a) {
    double v = compose_headline(a.C, a.c, a.x0, a.t0);
    json j;
    j["C"] = a.C;
    j["c"] = a.c;
    j["x0"] = a.x0;
    j["composed"] = std::strtod(format_value(v, 4 * 0x1p-53 * v).c_str(), nullptr);
    j["claim"] = a.claim;
    j["holds"] = v <= a.claim;
    emit_json(g, j);
    return v <= a.claim ? 0 : 1;
}

// sieve-cache

struct SieveArgs {
    double lo = 1, hi = 0;
};

int cmd_sieve_cache(const Global& g, const SieveArgs& a) {
    auto dir = default_cache_dir();
    if (dir.empty()) throw DomainError("no cache directory: pass --cache-dir or set MOEBIUS_CACHE_DIR");
    if (!(a.lo >= 1) || !(a.hi >= a.lo) || a.hi > 1e11) throw DomainError("need 1 <= lo <= hi <= 1e11");
    auto lo = static_cast<std::uint64_t>(a.lo), hi = static_cast<std::uint64_t>(a.hi);
    std::filesystem::create_directories(dir);
    auto file = cache_file(dir, lo, hi);
    bool existed = std::filesystem::exists(file);
    auto t = load_or_sieve(lo, hi, dir);
    long long M = 0, sf = 0;
    for (auto v : t.values) M += v, sf += v != 0;
    json j;
    j["file"] = file.string();
    j["lo"] = lo;
    j["hi"] = hi;
    j["reused"] = existed;
    j["squarefree"] = sf;
    j["sum_mu"] = M;
    j["bytes"] = std::filesystem::file_size(file);
    emit_json(g, j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moebius summatory functions, zeta kernels and explicit-bound checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value configuration file; flags override it");
    Global g;
    app.add_option("--precision", g.precision, "working precision in bits (>= 53)")->capture_default_str();
    app.add_option("--threads", g.threads, "OpenMP threads (default: all available)");
    app.add_option("--cache-dir", g.cache_dir, "sieve cache directory (default: $MOEBIUS_CACHE_DIR)");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--output", g.output, "output file (default: stdout)");
    app.add_flag("--timing", g.timing, "include elapsed_ms in reports");

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "summatory quantities at x");
    compute->add_option("--x", ca.x, "x >= 1")->required();
    compute->add_option("--fields", ca.fields, "comma list of M,m,mcheck,mdcheck,m1,H,Hcheck,I0,I1")->capture_default_str();
    compute->add_flag("--hp", ca.hp, "ball arithmetic at the working precision instead of double");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run checks from the registry");
    verify->add_option("--suite", va.suite, "check names, or all / identities / inequalities / reports");
    verify->add_option("--grid", va.grid, "axis overrides, e.g. \"s=2,0.5+3i;x=10,1000\"");
    verify->add_flag("--list", va.list, "list the registry with default grids");
    verify->add_flag("--no-cells", va.no_cells, "omit per-cell rows from JSON");
    std::map<std::string, std::string> axis_flags;
    for (const char* key : {"s", "x", "xmax", "T", "trange", "rho", "C", "c"})
        verify->add_option(std::string("--") + key, axis_flags[key], std::string("override the ") + key + " axis");

    QuadArgs qa;
    auto* quad = app.add_subcommand("quad", "int_1^T |kernel| t^-2 dt with tail bounds");
    quad->add_option("--s", qa.s, "s")->required();
    quad->add_option("--T", qa.T, "upper limit")->capture_default_str();
    quad->add_option("--variant", qa.variant, "Q, R or q")->capture_default_str();
    quad->add_option("--target", qa.target, "target radius")->capture_default_str();
    quad->add_flag("--signed", qa.signed_integral, "signed integral instead of the absolute one");

    LandauArgs la;
    auto* landau = app.add_subcommand("landau", "Landau corollary constant, optionally with the lower-bound sweep");
    landau->add_option("--rho", la.rho, "zero of zeta")->capture_default_str();
    landau->add_option("--xmax", la.xmax, "also sweep int_1^x |m| >= c (sqrt x - 1/x) up to xmax");
    landau->add_option("--c", la.c, "constant for the sweep")->capture_default_str();

    ComposeArgs oa;
    auto* compose = app.add_subcommand("compose", "headline bound C * c");
    compose->add_option("--C", oa.C, "inequality constant")->capture_default_str();
    compose->add_option("--c", oa.c, "input bound c in c/log t")->capture_default_str();
    compose->add_option("--x0", oa.x0, "x from which the composed bound is claimed")->capture_default_str();
    compose->add_option("--t0", oa.t0, "t from which the input bound holds")->capture_default_str();
    compose->add_option("--claim", oa.claim, "constant to compare with")->capture_default_str();

    SieveArgs sa;
    auto* sieve = app.add_subcommand("sieve-cache", "sieve [lo, hi] into the cache directory");
    sieve->add_option("--lo", sa.lo, "first n")->capture_default_str();
    sieve->add_option("--hi,--xmax", sa.hi, "last n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        set_working_precision(g.precision);
        if (g.threads < 0) throw DomainError("threads must be >= 1");
        if (g.threads == 0) g.threads = omp_get_max_threads();
        omp_set_num_threads(g.threads);
        if (!g.cache_dir.empty()) setenv("MOEBIUS_CACHE_DIR", g.cache_dir.c_str(), 1);

        if (*compute) return cmd_compute(g, ca);
        if (*verify) {
            for (auto& [k, v] : axis_flags)
                if (verify->count("--" + k)) va.flags.emplace_back(k, v);
            if (va.suite.empty() && !va.list) throw DomainError("verify needs --suite");
            return cmd_verify(g, va);
        }
        if (*quad) return cmd_quad(g, qa);
        if (*landau) return cmd_landau(g, la);
        if (*compose) return cmd_compose(g, oa);
        if (*sieve) return cmd_sieve_cache(g, sa);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
