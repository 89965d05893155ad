#include "magspec/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "magspec/analytic.hpp"
#include "magspec/eigfn.hpp"
#include "magspec/errors.hpp"
#include "overloaded.hpp"

namespace magspec::harness {

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;
using detail::overloaded;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// JSON helpers. Non-finite doubles are written as strings so reports
// round-trip exactly.

json num(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

double to_double(const json& j, const std::string& where) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
    }
    throw InputError(where + ": expected a number");
}

int to_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
    return j.get<int>();
}

std::string to_str(const json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where + ": expected a string");
    return j.get<std::string>();
}

bool to_bool(const json& j, const std::string& where) {
    if (!j.is_boolean()) throw InputError(where + ": expected true or false");
    return j.get<bool>();
}

std::vector<double> to_doubles(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array");
    std::vector<double> out;
    for (const auto& e : j) out.push_back(to_double(e, where));
    return out;
}

json nums(const std::vector<double>& v) {
    json out = json::array();
    for (const double x : v) out.push_back(num(x));
    return out;
}

// Shortest round-trip text for a double, used for map keys such as p.
std::string key_of(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

double key_to_double(const std::string& key) {
    double v = 0.0;
    const auto res = std::from_chars(key.data(), key.data() + key.size(), v);
    if (res.ec != std::errc{} || res.ptr != key.data() + key.size()) {
        throw InputError("bad numeric key '" + key + "'");
    }
    return v;
}

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object");
}

void allow_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
    for (const auto& [k, _] : j.items()) {
        if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
            throw InputError(where + ": unknown key '" + k + "'");
        }
    }
}

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw InputError(where + ": missing '" + key + "'");
    return j.at(key);
}

double opt_double(const json& j, const char* key, double fallback, const std::string& where) {
    return j.contains(key) ? to_double(j.at(key), where + "." + key) : fallback;
}

std::string resolve(const std::string& path, const std::string& base_dir) {
    if (path.empty()) return path;
    fs::path p(path);
    if (p.is_relative()) p = fs::path(base_dir) / p;
    return p.lexically_normal().string();
}

// ---------------------------------------------------------------------------
// Config <-> JSON

DomainSpec parse_domain(const json& j, const std::string& base_dir) {
    const std::string where = "domain";
    require_object(j, where);
    const auto kind = to_str(need(j, "shape", where), where + ".shape");
    if (kind == "analytic_box") {
        allow_keys(j, {"shape", "lengths"}, where);
        return AnalyticBox{to_doubles(need(j, "lengths", where), where + ".lengths")};
    }
    if (kind == "analytic_disk") {
        allow_keys(j, {"shape", "radius"}, where);
        return AnalyticDisk{opt_double(j, "radius", 1.0, where)};
    }
    GridDomainSpec g;
    g.h = to_double(need(j, "h", where), where + ".h");
    if (kind == "rectangle") {
        allow_keys(j, {"shape", "h", "a", "b"}, where);
        g.shape = shape::Rectangle{opt_double(j, "a", 1.0, where), opt_double(j, "b", 1.0, where)};
    } else if (kind == "disk") {
        allow_keys(j, {"shape", "h", "radius"}, where);
        g.shape = shape::Disk{opt_double(j, "radius", 1.0, where)};
    } else if (kind == "lshape") {
        allow_keys(j, {"shape", "h", "a", "b", "cut"}, where);
        g.shape = shape::LShape{opt_double(j, "a", 1.0, where), opt_double(j, "b", 1.0, where),
                                opt_double(j, "cut", 0.5, where)};
    } else if (kind == "annulus") {
        allow_keys(j, {"shape", "h", "r_inner", "r_outer"}, where);
        g.shape = shape::Annulus{opt_double(j, "r_inner", 0.5, where),
                                 opt_double(j, "r_outer", 1.0, where)};
    } else if (kind == "mask") {
        allow_keys(j, {"shape", "h", "path"}, where);
        g.shape = shape::MaskFile{resolve(to_str(need(j, "path", where), where + ".path"), base_dir)};
    } else {
        throw InputError("domain.shape: unknown shape '" + kind + "'");
    }
    return g;
}

json domain_json(const DomainSpec& d) {
    return std::visit(
        overloaded{
            [](const AnalyticBox& b) -> json {
                return {{"shape", "analytic_box"}, {"lengths", nums(b.lengths)}};
            },
            [](const AnalyticDisk& b) -> json {
                return {{"shape", "analytic_disk"}, {"radius", num(b.radius)}};
            },
            [](const GridDomainSpec& g) -> json {
                json j = std::visit(
                    overloaded{
                        [](const shape::Rectangle& s) -> json {
                            return {{"shape", "rectangle"}, {"a", num(s.a)}, {"b", num(s.b)}};
                        },
                        [](const shape::Disk& s) -> json {
                            return {{"shape", "disk"}, {"radius", num(s.radius)}};
                        },
                        [](const shape::LShape& s) -> json {
                            return {{"shape", "lshape"}, {"a", num(s.a)}, {"b", num(s.b)},
                                    {"cut", num(s.cut)}};
                        },
                        [](const shape::Annulus& s) -> json {
                            return {{"shape", "annulus"}, {"r_inner", num(s.r_inner)},
                                    {"r_outer", num(s.r_outer)}};
                        },
                        [](const shape::MaskFile& s) -> json {
                            return {{"shape", "mask"}, {"path", s.path}};
                        },
                    },
                    g.shape);
                j["h"] = num(g.h);
                return j;
            },
        },
        d);
}

GaugeSpec parse_gauge(const json& j) {
    const std::string where = "gauge";
    require_object(j, where);
    const auto type = to_str(need(j, "type", where), where + ".type");
    if (type == "none") {
        allow_keys(j, {"type"}, where);
        return gauge::None{};
    }
    if (type == "uniform") {
        allow_keys(j, {"type", "B"}, where);
        return gauge::Uniform{to_double(need(j, "B", where), where + ".B")};
    }
    if (type == "linear_shift") {
        allow_keys(j, {"type", "B", "chi"}, where);
        gauge::LinearShift s;
        s.B = to_double(need(j, "B", where), where + ".B");
        const auto chi = to_doubles(need(j, "chi", where), where + ".chi");
        if (chi.size() != 6) throw InputError("gauge.chi: expected 6 coefficients");
        std::copy(chi.begin(), chi.end(), s.chi.begin());
        return s;
    }
    throw InputError("gauge.type: unknown gauge '" + type + "'");
}

json gauge_json(const GaugeSpec& g) {
    return std::visit(overloaded{
                          [](const gauge::None&) -> json { return {{"type", "none"}}; },
                          [](const gauge::Uniform& u) -> json {
                              return {{"type", "uniform"}, {"B", num(u.B)}};
                          },
                          [](const gauge::LinearShift& s) -> json {
                              return {{"type", "linear_shift"},
                                      {"B", num(s.B)},
                                      {"chi", nums({s.chi.begin(), s.chi.end()})}};
                          },
                      },
                      g);
}

PotentialSpec parse_potential(const json& j, const std::string& base_dir) {
    const std::string where = "potential";
    require_object(j, where);
    const auto type = to_str(need(j, "type", where), where + ".type");
    if (type == "zero") {
        allow_keys(j, {"type"}, where);
        return potential::Zero{};
    }
    if (type == "constant") {
        allow_keys(j, {"type", "c"}, where);
        return potential::Constant{to_double(need(j, "c", where), where + ".c")};
    }
    if (type == "radial_quadratic") {
        allow_keys(j, {"type", "a", "center"}, where);
        potential::RadialQuadratic q;
        q.a = to_double(need(j, "a", where), where + ".a");
        if (j.contains("center")) {
            const auto c = to_doubles(j.at("center"), where + ".center");
            if (c.size() != 2) throw InputError("potential.center: expected [x, y]");
            q.center = {c[0], c[1]};
        }
        return q;
    }
    if (type == "grid_file") {
        allow_keys(j, {"type", "path"}, where);
        return potential::GridFile{resolve(to_str(need(j, "path", where), where + ".path"), base_dir),
                                   nullptr};
    }
    throw InputError("potential.type: unknown potential '" + type + "'");
}

json potential_json(const PotentialSpec& p) {
    return std::visit(overloaded{
                          [](const potential::Zero&) -> json { return {{"type", "zero"}}; },
                          [](const potential::Constant& c) -> json {
                              return {{"type", "constant"}, {"c", num(c.c)}};
                          },
                          [](const potential::RadialQuadratic& q) -> json {
                              return {{"type", "radial_quadratic"},
                                      {"a", num(q.a)},
                                      {"center", nums({q.center.x, q.center.y})}};
                          },
                          [](const potential::GridFile& g) -> json {
                              return {{"type", "grid_file"}, {"path", g.path}};
                          },
                      },
                      p);
}

SolverMethod parse_method(const std::string& s) {
    if (s == "automatic") return SolverMethod::automatic;
    if (s == "lanczos") return SolverMethod::lanczos;
    if (s == "dense") return SolverMethod::dense;
    throw InputError("solver.method: unknown method '" + s + "'");
}

ScenarioConfig parse_config(const json& j, const std::string& base_dir) {
    require_object(j, "config");
    allow_keys(j, {"name", "domain", "gauge", "potential", "solver", "checks", "slack", "output"},
               "config");
    ScenarioConfig c;
    if (j.contains("name")) c.name = to_str(j.at("name"), "name");
    c.domain = parse_domain(need(j, "domain", "config"), base_dir);
    if (j.contains("gauge")) c.gauge = parse_gauge(j.at("gauge"));
    if (j.contains("potential")) c.potential = parse_potential(j.at("potential"), base_dir);

    if (j.contains("solver")) {
        const auto& s = j.at("solver");
        require_object(s, "solver");
        allow_keys(s, {"k", "tol", "method", "max_iter"}, "solver");
        if (s.contains("k")) c.solver.k = to_int(s.at("k"), "solver.k");
        c.solver.tol = opt_double(s, "tol", c.solver.tol, "solver");
        if (s.contains("method")) c.solver.method = parse_method(to_str(s.at("method"), "solver.method"));
        if (s.contains("max_iter")) c.solver.max_iter = to_int(s.at("max_iter"), "solver.max_iter");
    }
    if (j.contains("checks")) {
        const auto& s = j.at("checks");
        require_object(s, "checks");
        allow_keys(s, {"enabled", "lambda", "k", "p", "comparison_tol"}, "checks");
        if (s.contains("enabled")) {
            const auto& e = s.at("enabled");
            if (e.is_string() && e.get<std::string>() == "all") {
                c.checks.enabled.clear();
            } else {
                if (!e.is_array()) throw InputError("checks.enabled: expected \"all\" or an array");
                for (const auto& n : e) c.checks.enabled.push_back(to_str(n, "checks.enabled"));
            }
        }
        if (s.contains("lambda")) c.checks.lambdas = to_doubles(s.at("lambda"), "checks.lambda");
        if (s.contains("k")) {
            if (!s.at("k").is_array()) throw InputError("checks.k: expected an array");
            for (const auto& k : s.at("k")) c.checks.ks.push_back(to_int(k, "checks.k"));
        }
        if (s.contains("p")) c.checks.ps = to_doubles(s.at("p"), "checks.p");
        c.checks.comparison_tol = opt_double(s, "comparison_tol", c.checks.comparison_tol, "checks");
    }
    if (j.contains("slack")) {
        const auto& s = j.at("slack");
        require_object(s, "slack");
        allow_keys(s, {"floor", "coefficient", "c_tol"}, "slack");
        if (s.contains("floor")) c.slack.floor = to_double(s.at("floor"), "slack.floor");
        if (s.contains("coefficient")) c.slack.coefficient = to_double(s.at("coefficient"), "slack.coefficient");
        if (s.contains("c_tol")) c.slack.c_tol = to_double(s.at("c_tol"), "slack.c_tol");
    }
    if (j.contains("output")) {
        const auto& s = j.at("output");
        require_object(s, "output");
        allow_keys(s, {"report", "spectrum_csv"}, "output");
        if (s.contains("report")) c.output.report = resolve(to_str(s.at("report"), "output.report"), base_dir);
        if (s.contains("spectrum_csv")) {
            c.output.spectrum_csv = resolve(to_str(s.at("spectrum_csv"), "output.spectrum_csv"), base_dir);
        }
    }
    return c;
}

json config_json(const ScenarioConfig& c) {
    json j;
    j["name"] = c.name;
    j["domain"] = domain_json(c.domain);
    j["gauge"] = gauge_json(c.gauge);
    j["potential"] = potential_json(c.potential);
    j["solver"] = {{"k", c.solver.k},
                   {"tol", num(c.solver.tol)},
                   {"method", to_string(c.solver.method)},
                   {"max_iter", c.solver.max_iter}};
    json checks;
    checks["enabled"] = c.checks.enabled.empty() ? json("all") : json(c.checks.enabled);
    checks["lambda"] = nums(c.checks.lambdas);
    checks["k"] = c.checks.ks;
    checks["p"] = nums(c.checks.ps);
    checks["comparison_tol"] = num(c.checks.comparison_tol);
    j["checks"] = checks;
    json slack = json::object();
    if (c.slack.floor) slack["floor"] = num(*c.slack.floor);
    if (c.slack.coefficient) slack["coefficient"] = num(*c.slack.coefficient);
    if (c.slack.c_tol) slack["c_tol"] = num(*c.slack.c_tol);
    j["slack"] = slack;
    json output = json::object();
    if (!c.output.report.empty()) output["report"] = c.output.report;
    if (!c.output.spectrum_csv.empty()) output["spectrum_csv"] = c.output.spectrum_csv;
    j["output"] = output;
    return j;
}

// ---------------------------------------------------------------------------
// Report <-> JSON

json constants_json(const specfun::ConstantsTable& t) {
    json cp = json::object();
    for (const auto& [p, v] : t.C_d_p) cp[key_of(p)] = num(v);
    return {{"d", t.d},          {"v_d", num(t.v_d)},           {"H_d", num(t.H_d)},
            {"C_d_closed", num(t.C_d_closed)}, {"C_d_p", cp}, {"tilde_C_d", num(t.tilde_C_d)}};
}

specfun::ConstantsTable constants_from(const json& j) {
    specfun::ConstantsTable t;
    t.d = to_int(j.at("d"), "constants.d");
    t.v_d = to_double(j.at("v_d"), "constants.v_d");
    t.H_d = to_double(j.at("H_d"), "constants.H_d");
    t.C_d_closed = to_double(j.at("C_d_closed"), "constants.C_d_closed");
    for (const auto& [k, v] : j.at("C_d_p").items()) t.C_d_p[key_to_double(k)] = to_double(v, "C_d_p");
    t.tilde_C_d = to_double(j.at("tilde_C_d"), "constants.tilde_C_d");
    return t;
}

json check_json(const bounds::BoundCheck& c) {
    json ctx = json::object();
    for (const auto& [k, v] : c.context) ctx[k] = num(v);
    return {{"name", c.name},
            {"verdict", bounds::to_string(c.verdict)},
            {"pass", c.pass},
            {"hard", c.hard},
            {"lhs", num(c.lhs)},
            {"rhs", num(c.rhs)},
            {"margin", num(c.margin)},
            {"relative_margin", num(c.relative_margin)},
            {"slack", num(c.slack)},
            {"context", ctx},
            {"note", c.note}};
}

bounds::Verdict verdict_from(const std::string& s) {
    using bounds::Verdict;
    for (const auto v : {Verdict::pass, Verdict::pass_tolerance, Verdict::fail,
                         Verdict::not_applicable, Verdict::error}) {
        if (bounds::to_string(v) == s) return v;
    }
    throw InputError("unknown verdict '" + s + "'");
}

bounds::BoundCheck check_from(const json& j) {
    bounds::BoundCheck c;
    c.name = to_str(j.at("name"), "check.name");
    c.verdict = verdict_from(to_str(j.at("verdict"), "check.verdict"));
    c.pass = to_bool(j.at("pass"), "check.pass");
    c.hard = to_bool(j.at("hard"), "check.hard");
    c.lhs = to_double(j.at("lhs"), "check.lhs");
    c.rhs = to_double(j.at("rhs"), "check.rhs");
    c.margin = to_double(j.at("margin"), "check.margin");
    c.relative_margin = to_double(j.at("relative_margin"), "check.relative_margin");
    c.slack = to_double(j.at("slack"), "check.slack");
    for (const auto& [k, v] : j.at("context").items()) c.context[k] = to_double(v, "check.context");
    c.note = to_str(j.at("note"), "check.note");
    return c;
}

json spectrum_json(const SpectrumRecord& r) {
    const auto& s = r.spectrum;
    json flags = json::array();
    for (const bool f : s.degeneracy_flags) flags.push_back(f);
    return {{"d", s.d},
            {"source", to_string(s.source)},
            {"h", s.h ? num(*s.h) : json(nullptr)},
            {"measure", s.measure ? num(*s.measure) : json(nullptr)},
            {"method", r.method},
            {"unknowns", r.unknowns},
            {"matvecs", r.matvecs},
            {"phases", r.phases},
            {"values", nums(s.values)},
            {"residuals", nums(r.residuals)},
            {"degeneracy_flags", flags}};
}

SpectrumRecord spectrum_from(const json& j) {
    SpectrumRecord r;
    auto& s = r.spectrum;
    s.d = to_int(j.at("d"), "spectrum.d");
    const auto source = to_str(j.at("source"), "spectrum.source");
    s.source = source == "analytic" ? SpectrumSource::analytic : SpectrumSource::discrete;
    if (!j.at("h").is_null()) s.h = to_double(j.at("h"), "spectrum.h");
    if (!j.at("measure").is_null()) s.measure = to_double(j.at("measure"), "spectrum.measure");
    r.method = to_str(j.at("method"), "spectrum.method");
    r.unknowns = to_int(j.at("unknowns"), "spectrum.unknowns");
    r.matvecs = to_int(j.at("matvecs"), "spectrum.matvecs");
    r.phases = to_int(j.at("phases"), "spectrum.phases");
    s.values = to_doubles(j.at("values"), "spectrum.values");
    r.residuals = to_doubles(j.at("residuals"), "spectrum.residuals");
    for (const auto& f : j.at("degeneracy_flags")) s.degeneracy_flags.push_back(to_bool(f, "flag"));
    return r;
}

json eigenfunction_json(const EigenfunctionRecord& e) {
    json lp = json::object();
    for (const auto& [p, v] : e.lp) lp[key_of(p)] = num(v);
    return {{"sup_norm", num(e.sup_norm)},       {"lp", lp},
            {"l2_normalized", e.l2_normalized},  {"S_measure", num(e.s_measure)},
            {"z0", num(e.z0)},                   {"max_deviation", num(e.max_deviation)},
            {"compared_points", e.compared_points}};
}

EigenfunctionRecord eigenfunction_from(const json& j) {
    EigenfunctionRecord e;
    e.sup_norm = to_double(j.at("sup_norm"), "sup_norm");
    for (const auto& [k, v] : j.at("lp").items()) e.lp[key_to_double(k)] = to_double(v, "lp");
    e.l2_normalized = to_bool(j.at("l2_normalized"), "l2_normalized");
    e.s_measure = to_double(j.at("S_measure"), "S_measure");
    e.z0 = to_double(j.at("z0"), "z0");
    e.max_deviation = to_double(j.at("max_deviation"), "max_deviation");
    e.compared_points = to_int(j.at("compared_points"), "compared_points");
    return e;
}

json timing_json(const std::map<std::string, double>& t) {
    json j = json::object();
    for (const auto& [k, v] : t) j[k] = num(v);
    return j;
}

// ---------------------------------------------------------------------------
// Running scenarios

struct Computed {
    SpectrumRecord record;
    std::vector<cplx> ground;
    double measure = 0.0;
};

Computed compute(const ScenarioConfig& config) {
    Computed out;
    const int k = config.solver.k;
    if (const auto* box = std::get_if<AnalyticBox>(&config.domain)) {
        out.record.spectrum = analytic::box_spectrum(box->lengths, k);
    } else if (const auto* disk = std::get_if<AnalyticDisk>(&config.domain)) {
        out.record.spectrum = analytic::disk_spectrum(disk->radius, k);
    } else {
        const auto& grid = std::get<GridDomainSpec>(config.domain);
        const auto dom = build_domain(grid.shape, grid.h);
        const auto op = assemble(dom, config.gauge, config.potential);
        SolverOptions opts;
        opts.method = config.solver.method;
        opts.max_matvecs = config.solver.max_iter;
        auto res = lowest_eigenpairs(op, k, config.solver.tol, opts);
        out.record.spectrum = std::move(res.spectrum);
        out.record.spectrum.measure = dom.measure();
        for (const auto& p : res.pairs) out.record.residuals.push_back(p.residual);
        out.record.method = to_string(res.method);
        out.record.unknowns = op.size();
        out.record.matvecs = res.matvecs;
        out.record.phases = res.phases;
        out.ground = std::move(res.pairs.front().vector);
    }
    out.measure = *out.record.spectrum.measure;
    return out;
}

bool enabled(const ScenarioConfig& c, const std::string& name) {
    return c.checks.enabled.empty() ||
           std::find(c.checks.enabled.begin(), c.checks.enabled.end(), name) !=
               c.checks.enabled.end();
}

// Runs one check; a thrown error becomes an `error` record with the message.
template <class F>
void guarded(std::vector<bounds::BoundCheck>& out, const std::string& name,
             std::map<std::string, double> context, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        bounds::BoundCheck c;
        c.name = name;
        c.verdict = bounds::Verdict::error;
        c.pass = false;
        c.note = e.what();
        c.context = std::move(context);
        out.push_back(std::move(c));
    }
}

std::vector<double> default_lambdas(const Spectrum& s) {
    const double lo = s.values.front();
    const double hi = s.values.back();
    if (s.size() == 1) return {lo};
    std::vector<double> out;
    for (int i = 0; i <= 4; ++i) out.push_back(i == 4 ? hi : lo + (hi - lo) * i / 4.0);
    return out;
}

std::vector<int> default_ks(const Spectrum& s) {
    std::vector<int> out;
    for (int k = 1; k < static_cast<int>(s.size()); ++k) out.push_back(k);
    return out;
}

void tally(VerificationReport& r) {
    r.hard_failures = r.errors = r.diagnostic_failures = 0;
    for (const auto& c : r.checks) {
        if (c.verdict == bounds::Verdict::error) ++r.errors;
        if (c.verdict == bounds::Verdict::fail) ++(c.hard ? r.hard_failures : r.diagnostic_failures);
    }
    r.overall_pass = r.hard_failures == 0;
}

// Closed-form limits of a grid scenario, when it has them.
std::optional<std::vector<double>> reference_values(const ScenarioConfig& c) {
    double shift = 0.0;
    if (!std::holds_alternative<gauge::None>(c.gauge)) return std::nullopt;
    if (const auto* k = std::get_if<potential::Constant>(&c.potential)) {
        shift = k->c;
    } else if (!std::holds_alternative<potential::Zero>(c.potential)) {
        return std::nullopt;
    }
    const auto& grid = std::get<GridDomainSpec>(c.domain);
    std::optional<Spectrum> s;
    if (const auto* r = std::get_if<shape::Rectangle>(&grid.shape)) {
        const double lengths[] = {r->a, r->b};
        s = analytic::box_spectrum(lengths, c.solver.k);
    } else if (const auto* d = std::get_if<shape::Disk>(&grid.shape)) {
        s = analytic::disk_spectrum(d->radius, c.solver.k);
    }
    if (!s) return std::nullopt;
    for (auto& v : s->values) v += shift;
    return s->values;
}

}  // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "berezin_li_yau", "berezin_li_yau_sharp", "li_yau", "main",  "main_legendre",
        "ratio",          "yang",                 "yang_corollaries", "laptev", "chiti",
        "comparison",     "rearrangement_ode",
    };
    return names;
}

int ScenarioConfig::dimension() const {
    if (const auto* box = std::get_if<AnalyticBox>(&domain)) {
        return static_cast<int>(box->lengths.size());
    }
    return 2;
}

ScenarioConfig config_from_json(std::string_view text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("config: ") + e.what());
    }
    return parse_config(j, base_dir);
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read config '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const auto base = fs::absolute(fs::path(path)).parent_path().string();
    return config_from_json(buf.str(), base);
}

std::string config_to_json(const ScenarioConfig& config) { return config_json(config).dump(2); }

void validate(const ScenarioConfig& c) {
    const auto fail = [](const std::string& m) { throw InputError("config: " + m); };
    if (c.solver.k < 1) fail("solver.k must be >= 1");
    if (!(c.solver.tol >= 1e-12 && c.solver.tol <= 1e-4)) fail("solver.tol must lie in [1e-12, 1e-4]");
    if (c.solver.max_iter < 0) fail("solver.max_iter must be >= 0");
    for (const double l : c.checks.lambdas) {
        if (!(l >= 0.0) || !std::isfinite(l)) fail("every lambda must be a finite value >= 0");
    }
    for (const int k : c.checks.ks) {
        if (k < 1) fail("every k must be >= 1");
    }
    for (const double p : c.checks.ps) {
        if (!(p > 0.0) || !std::isfinite(p)) fail("every p must be > 0");
    }
    if (c.checks.ps.empty()) fail("checks.p must not be empty");
    if (!(c.checks.comparison_tol > 0.0 && c.checks.comparison_tol < 1.0)) {
        fail("checks.comparison_tol must lie in (0, 1)");
    }
    const auto& names = check_names();
    for (const auto& n : c.checks.enabled) {
        if (std::find(names.begin(), names.end(), n) == names.end()) fail("unknown check '" + n + "'");
    }
    if (c.slack.floor && !(*c.slack.floor >= 0.0)) fail("slack.floor must be >= 0");
    if (c.slack.coefficient && !(*c.slack.coefficient >= 0.0)) fail("slack.coefficient must be >= 0");
    if (c.slack.c_tol && !(*c.slack.c_tol >= 0.0)) fail("slack.c_tol must be >= 0");

    if (c.analytic()) {
        if (!std::holds_alternative<gauge::None>(c.gauge) ||
            !std::holds_alternative<potential::Zero>(c.potential)) {
            fail("analytic domains take no gauge and no potential");
        }
        if (const auto* box = std::get_if<AnalyticBox>(&c.domain)) {
            const auto d = box->lengths.size();
            if (d < 2 || d > static_cast<std::size_t>(analytic::kMaxBoxDim)) {
                fail("analytic_box needs 2 to 5 lengths");
            }
            for (const double L : box->lengths) {
                if (!(L > 0.0)) fail("analytic_box lengths must be > 0");
            }
            if (c.solver.k > analytic::kMaxBoxCount) fail("solver.k exceeds the box enumeration limit");
        } else {
            if (!(std::get<AnalyticDisk>(c.domain).radius > 0.0)) fail("analytic_disk radius must be > 0");
            if (c.solver.k > analytic::kMaxDiskCount) fail("solver.k exceeds the disk limit");
        }
        return;
    }
    const auto& grid = std::get<GridDomainSpec>(c.domain);
    if (!(grid.h > 0.0) || !std::isfinite(grid.h)) fail("domain.h must be > 0");
    if (const auto* m = std::get_if<shape::MaskFile>(&grid.shape)) {
        if (!fs::exists(m->path)) fail("mask file '" + m->path + "' does not exist");
    }
    if (const auto* g = std::get_if<potential::GridFile>(&c.potential)) {
        if (!fs::exists(g->path)) fail("potential file '" + g->path + "' does not exist");
    }
}

bounds::SlackPolicy slack_policy(const ScenarioConfig& c) {
    bounds::SlackPolicy p;
    if (c.analytic()) {
        p = bounds::SlackPolicy::analytic();
    } else {
        p = bounds::SlackPolicy::discrete(std::get<GridDomainSpec>(c.domain).h, c.slack.c_tol.value_or(10.0));
    }
    if (c.slack.floor) p.floor = *c.slack.floor;
    if (c.slack.coefficient) p.coefficient = *c.slack.coefficient;
    return p;
}

SpectrumRecord compute_spectrum(const ScenarioConfig& config) {
    validate(config);
    return compute(config).record;
}

VerificationReport run_scenario(const ScenarioConfig& config) {
    validate(config);
    const auto start = Clock::now();
    VerificationReport r;
    r.config = config;

    const auto solve_start = Clock::now();
    auto computed = compute(config);
    r.timing["spectrum_seconds"] = seconds_since(solve_start);
    r.spectrum = computed.record;
    const auto& spec = r.spectrum.spectrum;
    const int d = config.dimension();
    const double measure = computed.measure;
    const auto policy = slack_policy(config);
    r.constants = specfun::constants_table(d, config.checks.ps);

    const auto lambdas = config.checks.lambdas.empty() ? default_lambdas(spec) : config.checks.lambdas;
    const auto ks = config.checks.ks.empty() ? default_ks(spec) : config.checks.ks;
    const double lambda1 = spec.values.front();
    const bool grid = !config.analytic();
    auto& out = r.checks;

    const auto per_lambda = [&](const std::string& name, auto&& fn) {
        if (!enabled(config, name)) return;
        for (const double l : lambdas) {
            guarded(out, name, {{"lambda", l}}, [&] { out.push_back(fn(l)); });
        }
    };
    const auto per_k = [&](const std::string& name, auto&& fn) {
        if (!enabled(config, name)) return;
        for (const int k : ks) {
            guarded(out, name, {{"k", static_cast<double>(k)}}, [&] {
                for (auto& c : fn(k)) out.push_back(std::move(c));
            });
        }
    };
    const auto one = [](bounds::BoundCheck c) { return std::vector<bounds::BoundCheck>{std::move(c)}; };
    const auto no_eigenfunction = [&](const std::string& name) {
        out.push_back(bounds::not_applicable(name, "closed-form spectra carry no eigenfunction"));
    };

    per_lambda("berezin_li_yau",
               [&](double l) { return bounds::check_berezin_li_yau(spec, measure, l, policy); });
    per_lambda("berezin_li_yau_sharp",
               [&](double l) { return bounds::check_berezin_li_yau_sharp(spec, measure, l, policy); });
    per_k("li_yau", [&](int k) { return one(bounds::check_li_yau(spec, measure, k, policy)); });
    per_lambda("main", [&](double l) { return bounds::check_main(spec, l, policy); });
    per_k("main_legendre", [&](int k) { return one(bounds::check_main_legendre(spec, k, policy)); });
    per_k("ratio", [&](int k) { return bounds::check_ratio_bounds(spec, k, policy); });
    per_k("yang", [&](int k) { return one(bounds::check_yang(spec, k, policy)); });
    per_k("yang_corollaries", [&](int k) { return bounds::check_yang_corollaries(spec, k, policy); });

    if (!grid) {
        for (const char* name : {"laptev", "chiti", "comparison", "rearrangement_ode"}) {
            if (enabled(config, name)) no_eigenfunction(name);
        }
    } else {
        const auto& omega = computed.ground;
        const double h = *spec.h;
        EigenfunctionRecord ef;
        guarded(out, "eigenfunction_norms", {}, [&] {
            const auto n = eigfn::norms(omega, h, config.checks.ps);
            ef.sup_norm = n.sup_norm;
            ef.lp = n.lp;
            ef.l2_normalized = n.l2_normalized;
        });
        per_lambda("laptev", [&](double l) { return bounds::check_laptev(spec, ef.sup_norm, l, policy); });
        if (enabled(config, "chiti")) {
            for (const double p : config.checks.ps) {
                guarded(out, "chiti", {{"p", p}}, [&] {
                    auto checks = eigfn::chiti_check(omega, h, lambda1, d, p, policy);
                    out.push_back(std::move(checks[0]));
                    // the heat bound does not depend on p
                    if (p == config.checks.ps.front()) out.push_back(std::move(checks[1]));
                });
            }
        }
        if (enabled(config, "comparison")) {
            guarded(out, "comparison", {}, [&] {
                auto cmp = eigfn::comparison_check(omega, h, lambda1, d, measure,
                                                   config.checks.comparison_tol);
                ef.s_measure = cmp.s_measure;
                ef.z0 = cmp.z0;
                ef.max_deviation = cmp.max_deviation;
                ef.compared_points = cmp.compared_points;
                out.push_back(std::move(cmp.ball_inclusion));
                out.push_back(std::move(cmp.domination));
            });
        }
        if (enabled(config, "rearrangement_ode")) {
            guarded(out, "rearrangement_ode", {}, [&] {
                out.push_back(eigfn::rearrangement_ode_check(eigfn::decreasing_rearrangement(omega, h),
                                                             lambda1, d));
            });
        }
        r.eigenfunction = ef;
    }

    tally(r);
    r.timing["total_seconds"] = seconds_since(start);
    return r;
}

int exit_code(const VerificationReport& report) {
    if (report.hard_failures > 0) return 1;
    if (report.errors > 0) return 3;
    return 0;
}

std::string report_to_json(const VerificationReport& r, bool include_timing) {
    json j;
    j["schema_version"] = r.schema_version;
    j["config"] = config_json(r.config);
    j["constants"] = r.constants ? constants_json(*r.constants) : json(nullptr);
    j["spectrum"] = spectrum_json(r.spectrum);
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    j["checks"] = checks;
    j["eigenfunction"] = r.eigenfunction ? eigenfunction_json(*r.eigenfunction) : json(nullptr);
    j["overall"] = {{"pass", r.overall_pass},
                    {"verdict", r.overall_pass ? "pass" : "fail"},
                    {"hard_failures", r.hard_failures},
                    {"errors", r.errors},
                    {"diagnostic_failures", r.diagnostic_failures}};
    if (include_timing) j["timing"] = timing_json(r.timing);
    return j.dump(2) + "\n";
}

VerificationReport report_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("report: ") + e.what());
    }
    try {
        VerificationReport r;
        r.schema_version = to_int(j.at("schema_version"), "schema_version");
        if (r.schema_version != kSchemaVersion) throw InputError("report: unsupported schema version");
        r.config = parse_config(j.at("config"), ".");
        if (!j.at("constants").is_null()) r.constants = constants_from(j.at("constants"));
        r.spectrum = spectrum_from(j.at("spectrum"));
        for (const auto& c : j.at("checks")) r.checks.push_back(check_from(c));
        if (!j.at("eigenfunction").is_null()) r.eigenfunction = eigenfunction_from(j.at("eigenfunction"));
        const auto& o = j.at("overall");
        r.overall_pass = to_bool(o.at("pass"), "overall.pass");
        r.hard_failures = to_int(o.at("hard_failures"), "overall.hard_failures");
        r.errors = to_int(o.at("errors"), "overall.errors");
        r.diagnostic_failures = to_int(o.at("diagnostic_failures"), "overall.diagnostic_failures");
        if (j.contains("timing")) {
            for (const auto& [k, v] : j.at("timing").items()) r.timing[k] = to_double(v, "timing");
        }
        return r;
    } catch (const json::exception& e) {
        throw InputError(std::string("report: ") + e.what());
    }
}

ConvergenceReport convergence_study(const ScenarioConfig& config, int levels) {
    validate(config);
    if (config.analytic()) throw InputError("convergence: analytic scenarios have nothing to refine");
    if (levels < 2) throw InputError("convergence: needs at least 2 levels");

    ConvergenceReport r;
    r.config = config;
    r.reference = reference_values(config);
    const double h0 = std::get<GridDomainSpec>(config.domain).h;
    for (int i = 0; i < levels; ++i) {
        auto level_config = config;
        auto& grid = std::get<GridDomainSpec>(level_config.domain);
        grid.h = h0 / std::pow(2.0, i);
        const auto start = Clock::now();
        try {
            const auto rec = compute(level_config).record;
            r.levels.push_back({grid.h, rec.unknowns, rec.spectrum.values, seconds_since(start)});
        } catch (const Error& e) {
            std::ostringstream msg;
            msg << "level " << i << " (h = " << key_of(grid.h) << "): " << e.what();
            r.failure = msg.str();
            break;
        }
    }
    if (r.levels.size() < 2) return r;

    const auto L = r.levels.size();
    const auto& fine = r.levels[L - 1].values;
    const auto& mid = r.levels[L - 2].values;
    const auto k = fine.size();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t j = 0; j < k; ++j) {
        r.richardson.push_back((4 * fine[j] - mid[j]) / 3);
        if (r.reference) {
            const double ref = (*r.reference)[j];
            r.observed_order.push_back(std::log2(std::abs(mid[j] - ref) / std::abs(fine[j] - ref)));
        } else if (L >= 3) {
            const double coarse = r.levels[L - 3].values[j];
            r.observed_order.push_back(std::log2(std::abs(mid[j] - coarse) / std::abs(fine[j] - mid[j])));
        } else {
            r.observed_order.push_back(nan);
        }
        bool monotone = true;
        for (std::size_t i = 2; i < L; ++i) {
            const double prev = r.levels[i - 1].values[j] - r.levels[i - 2].values[j];
            const double next = r.levels[i].values[j] - r.levels[i - 1].values[j];
            monotone = monotone && prev * next > 0 && std::abs(next) < std::abs(prev);
        }
        r.monotone_cauchy.push_back(monotone);
    }
    r.pass = r.failure.empty() &&
             std::all_of(r.observed_order.begin(), r.observed_order.end(),
                         [&](double p) { return std::abs(p - r.expected_order) <= r.order_tolerance; }) &&
             std::all_of(r.monotone_cauchy.begin(), r.monotone_cauchy.end(), [](bool b) { return b; });
    return r;
}

std::string convergence_to_json(const ConvergenceReport& r, bool include_timing) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = config_json(r.config);
    json levels = json::array();
    std::vector<double> seconds;
    for (const auto& l : r.levels) {
        levels.push_back({{"h", num(l.h)}, {"n", l.n}, {"values", nums(l.values)}});
        seconds.push_back(l.seconds);
    }
    j["levels"] = levels;
    j["reference"] = r.reference ? nums(*r.reference) : json(nullptr);
    j["observed_order"] = nums(r.observed_order);
    j["richardson"] = nums(r.richardson);
    json mono = json::array();
    for (const bool b : r.monotone_cauchy) mono.push_back(b);
    j["monotone_cauchy"] = mono;
    j["expected_order"] = num(r.expected_order);
    j["order_tolerance"] = num(r.order_tolerance);
    j["pass"] = r.pass;
    j["failure"] = r.failure.empty() ? json(nullptr) : json(r.failure);
    if (include_timing) j["timing"] = {{"level_seconds", nums(seconds)}};
    return j.dump(2) + "\n";
}

void write_spectrum_csv(const Spectrum& spectrum, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    for (const double v : spectrum.values) out << key_of(v) << '\n';
    if (!out) throw InputError("failed writing '" + path + "'");
}

std::vector<double> read_spectrum_csv(const std::string& path) {
    std::vector<double> out;
    for (const auto& row : read_numeric_csv(path)) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::string constants_to_json(const specfun::ConstantsTable& table) {
    return constants_json(table).dump(2) + "\n";
}

}  // namespace magspec::harness
