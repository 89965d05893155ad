// magspec: command-line front end for the verification harness.
//
//   magspec constants   --dim 3 --p 1,2
//   magspec spectrum    --config scenario.json --out spectrum.csv
//   magspec verify      --config scenario.json --out report.json
//   magspec convergence --config scenario.json --levels 3 --out study.json
//
// Exit codes: 0 all checks pass, 1 a hard check fails, 2 bad usage or
// config, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "magspec/errors.hpp"
#include "magspec/harness.hpp"
#include "magspec/specfun.hpp"

namespace {

enum Exit { kPass = 0, kViolation = 1, kUsage = 2, kNumerical = 3 };

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw magspec::InputError("cannot write '" + path + "'");
    out << text;
}

void summarize(const magspec::harness::VerificationReport& r) {
    std::fprintf(stderr, "%s: %zu checks, %d hard failures, %d errors, %d diagnostic failures -> %s\n",
                 r.config.name.c_str(), r.checks.size(), r.hard_failures, r.errors,
                 r.diagnostic_failures, r.overall_pass ? "pass" : "fail");
    for (const auto& c : r.checks) {
        if (c.verdict == magspec::bounds::Verdict::fail || c.verdict == magspec::bounds::Verdict::error) {
            const char* label = c.verdict == magspec::bounds::Verdict::error ? "ERROR"
                                : c.hard                                       ? "FAIL"
                                                                               : "diag";
            std::fprintf(stderr, "  %s %s: margin %.6g slack %.3g %s\n", label,
                         c.name.c_str(), c.margin, c.slack, c.note.c_str());
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    namespace h = magspec::harness;

    CLI::App app{"Eigenvalue-inequality verification for magnetic Schroedinger operators"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    int dim = 2;
    std::vector<double> ps{1.0, 2.0};
    int levels = 3;

    auto* constants = app.add_subcommand("constants", "print the constants table for one dimension");
    constants->add_option("--dim", dim, "dimension d")->check(CLI::Range(magspec::specfun::kMinDim,
                                                                         magspec::specfun::kMaxDim));
    constants->add_option("--p", ps, "exponents p for C_d(p)")->delimiter(',');
    constants->add_option("--out", out_path, "output JSON (default stdout)");

    auto* spectrum = app.add_subcommand("spectrum", "compute the spectrum and export it as CSV");
    spectrum->add_option("--config", config_path, "scenario JSON")->required();
    spectrum->add_option("--out", out_path, "output CSV (default: output.spectrum_csv or stdout)");

    auto* verify = app.add_subcommand("verify", "run the full check suite");
    verify->add_option("--config", config_path, "scenario JSON")->required();
    verify->add_option("--out", out_path, "report JSON (default: output.report or stdout)");

    auto* convergence = app.add_subcommand("convergence", "refinement study at h, h/2, h/4, ...");
    convergence->add_option("--config", config_path, "scenario JSON")->required();
    convergence->add_option("--levels", levels, "number of levels")->check(CLI::Range(2, 8));
    convergence->add_option("--out", out_path, "study JSON (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*constants) {
            emit(h::constants_to_json(magspec::specfun::constants_table(dim, ps)), out_path);
            return kPass;
        }

        const auto config = h::load_config(config_path);

        if (*spectrum) {
            const auto rec = h::compute_spectrum(config);
            std::string path = out_path.empty() ? config.output.spectrum_csv : out_path;
            if (path.empty() || path == "-") {
                for (const double v : rec.spectrum.values) std::printf("%.17g\n", v);
            } else {
                h::write_spectrum_csv(rec.spectrum, path);
            }
            return kPass;
        }

        if (*verify) {
            const auto report = h::run_scenario(config);
            emit(h::report_to_json(report), out_path.empty() ? config.output.report : out_path);
            if (!config.output.spectrum_csv.empty()) {
                h::write_spectrum_csv(report.spectrum.spectrum, config.output.spectrum_csv);
            }
            summarize(report);
            return h::exit_code(report);
        }

        const auto study = h::convergence_study(config, levels);
        emit(h::convergence_to_json(study), out_path);
        if (!study.failure.empty()) {
            std::fprintf(stderr, "convergence: %s\n", study.failure.c_str());
            return kNumerical;
        }
        std::fprintf(stderr, "convergence: %zu levels -> %s\n", study.levels.size(),
                     study.pass ? "pass" : "fail");
        return study.pass ? kPass : kViolation;
    } catch (const magspec::InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const magspec::DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const magspec::Error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kNumerical;
    }
}
