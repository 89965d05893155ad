#pragma once

// Scenario configuration, verification runs, refinement studies and report
// persistence. Configs and reports travel as JSON text; the schema is
// described in docs/schema.md.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "magspec/bounds.hpp"
#include "magspec/domain.hpp"
#include "magspec/eigensolve.hpp"
#include "magspec/specfun.hpp"

namespace magspec::harness {

inline constexpr int kSchemaVersion = 1;

/// Every check name accepted in a config, in report order.
const std::vector<std::string>& check_names();

struct GridDomainSpec {
    Shape shape = shape::Rectangle{};
    double h = 1.0 / 32;
};

/// Closed-form box spectrum, 2 <= dimension <= 5.
struct AnalyticBox {
    std::vector<double> lengths{1.0, 1.0};
};

/// Closed-form disk spectrum.
struct AnalyticDisk {
    double radius = 1.0;
};

using DomainSpec = std::variant<GridDomainSpec, AnalyticBox, AnalyticDisk>;

struct SolverConfig {
    int k = 10;
    double tol = 1e-10;
    SolverMethod method = SolverMethod::automatic;
    /// matvec budget, 0 for the solver default
    int max_iter = 0;
};

struct CheckConfig {
    /// empty runs every check
    std::vector<std::string> enabled;
    /// Riesz-mean thresholds; empty picks five values spread over [lambda_1, lambda_k]
    std::vector<double> lambdas;
    /// empty picks 1..k-1
    std::vector<int> ks;
    std::vector<double> ps{1.0, 2.0};
    double comparison_tol = 0.02;
};

/// Replaces fields of the default slack policy (analytic for closed-form
/// spectra, discrete with c_tol = 10 for grids).
struct SlackOverride {
    std::optional<double> floor;
    std::optional<double> coefficient;
    std::optional<double> c_tol;
};

struct OutputConfig {
    std::string report;
    std::string spectrum_csv;
};

struct ScenarioConfig {
    std::string name = "scenario";
    DomainSpec domain = GridDomainSpec{};
    GaugeSpec gauge = gauge::None{};
    PotentialSpec potential = potential::Zero{};
    SolverConfig solver;
    CheckConfig checks;
    SlackOverride slack;
    OutputConfig output;

    bool analytic() const { return !std::holds_alternative<GridDomainSpec>(domain); }
    int dimension() const;
};

/// Relative file paths resolve against `base_dir`. Throws InputError on
/// malformed JSON, unknown keys or invalid values.
ScenarioConfig config_from_json(std::string_view text, const std::string& base_dir = ".");
ScenarioConfig load_config(const std::string& path);
std::string config_to_json(const ScenarioConfig& config);

/// k >= 1, lambdas >= 0, known check names, referenced files exist.
void validate(const ScenarioConfig& config);

bounds::SlackPolicy slack_policy(const ScenarioConfig& config);

struct SpectrumRecord {
    Spectrum spectrum;
    std::vector<double> residuals;
    std::string method = "analytic";
    /// grid unknowns, 0 for closed-form spectra
    int unknowns = 0;
    int matvecs = 0;
    int phases = 0;
};

struct EigenfunctionRecord {
    double sup_norm = 0.0;
    std::map<double, double> lp;
    bool l2_normalized = false;
    double s_measure = 0.0;
    double z0 = 0.0;
    double max_deviation = 0.0;
    int compared_points = 0;
};

struct VerificationReport {
    int schema_version = kSchemaVersion;
    ScenarioConfig config;
    std::optional<specfun::ConstantsTable> constants;
    SpectrumRecord spectrum;
    std::vector<bounds::BoundCheck> checks;
    std::optional<EigenfunctionRecord> eigenfunction;
    /// the only fields allowed to differ between identical runs
    std::map<std::string, double> timing;
    bool overall_pass = false;
    int hard_failures = 0;
    int errors = 0;
    int diagnostic_failures = 0;
};

std::string report_to_json(const VerificationReport& report, bool include_timing = true);
VerificationReport report_from_json(std::string_view text);

/// Computes the spectrum (closed form or eigensolver) without running checks.
SpectrumRecord compute_spectrum(const ScenarioConfig& config);

/// Runs every enabled check. A check that throws is recorded with verdict
/// `error` and the remaining checks still run; solver failures propagate.
VerificationReport run_scenario(const ScenarioConfig& config);

/// 0 all hard checks pass, 1 a hard check fails, 3 a check could not be evaluated.
int exit_code(const VerificationReport& report);

struct ConvergenceLevel {
    double h = 0.0;
    int n = 0;
    std::vector<double> values;
    double seconds = 0.0;
};

struct ConvergenceReport {
    ScenarioConfig config;
    std::vector<ConvergenceLevel> levels;
    /// closed-form limits when the scenario is a field-free, potential-free
    /// rectangle or disk
    std::optional<std::vector<double>> reference;
    /// per eigenvalue, from the two finest levels: against the reference when
    /// present, else log2 of successive difference ratios (needs 3 levels)
    std::vector<double> observed_order;
    /// (4 lambda_{h/2} - lambda_h) / 3 from the two finest levels
    std::vector<double> richardson;
    /// successive differences keep their sign and shrink
    std::vector<bool> monotone_cauchy;
    double expected_order = 2.0;
    double order_tolerance = 0.2;
    bool pass = false;
    std::string failure;
};

/// Runs the grid scenario at h, h/2, ..., h/2^{levels-1}. Throws InputError
/// for analytic scenarios or levels < 2. A failing level stops the study and
/// is reported in `failure`.
ConvergenceReport convergence_study(const ScenarioConfig& config, int levels);

std::string convergence_to_json(const ConvergenceReport& report, bool include_timing = true);

/// One eigenvalue per line at full precision.
void write_spectrum_csv(const Spectrum& spectrum, const std::string& path);
std::vector<double> read_spectrum_csv(const std::string& path);

/// Constants table as JSON text.
std::string constants_to_json(const specfun::ConstantsTable& table);

}  // namespace magspec::harness
