#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace magspec {

enum class SpectrumSource { analytic, discrete };

/// Lowest eigenvalues of an operator, sorted and repeated with multiplicity.
struct Spectrum {
    int d = 2;
    std::vector<double> values;
    SpectrumSource source = SpectrumSource::analytic;
    std::optional<double> h;        // grid spacing for discrete spectra
    std::optional<double> measure;  // |Omega| when known
    std::vector<bool> degeneracy_flags;

    std::size_t size() const { return values.size(); }
    /// 1-based access matching the usual lambda_j notation.
    double lambda(std::size_t j) const { return values.at(j - 1); }
};

/// Relative gap below which consecutive eigenvalues count as one cluster.
inline constexpr double kDegeneracyGap = 1e-6;

/// flags[j] is set when values[j+1] - values[j] <= rel * values[j]; the last
/// flag is always false.
std::vector<bool> degeneracy_flags(std::span<const double> values, double rel = kDegeneracyGap);

std::string to_string(SpectrumSource source);

}  // namespace magspec
