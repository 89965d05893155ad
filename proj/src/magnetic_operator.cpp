#include "magspec/magnetic_operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "magspec/errors.hpp"

namespace magspec {

MagneticOperator::MagneticOperator(double h, std::vector<double> diagonal,
                                   std::vector<int> row_start, std::vector<Coupling> couplings)
    : h_(h),
      diagonal_(std::move(diagonal)),
      row_start_(std::move(row_start)),
      couplings_(std::move(couplings)) {
    if (row_start_.size() != diagonal_.size() + 1 ||
        row_start_.back() != static_cast<int>(couplings_.size())) {
        throw DomainError("MagneticOperator: inconsistent sparse layout");
    }
}

std::span<const Coupling> MagneticOperator::neighbours(int row) const {
    const auto r = static_cast<std::size_t>(row);
    return std::span<const Coupling>(couplings_).subspan(
        static_cast<std::size_t>(row_start_[r]),
        static_cast<std::size_t>(row_start_[r + 1] - row_start_[r]));
}

cplx MagneticOperator::coupling(int row, int column) const {
    for (const auto& c : neighbours(row)) {
        if (c.column == column) return c.value;
    }
    return {0.0, 0.0};
}

void MagneticOperator::apply(std::span<const cplx> v, std::span<cplx> y) const {
    const auto n = diagonal_.size();
    if (v.size() != n || y.size() != n) {
        throw DomainError("MagneticOperator::apply: vector length " + std::to_string(v.size()) +
                          " does not match operator size " + std::to_string(n));
    }
    for (std::size_t row = 0; row < n; ++row) {
        cplx acc = diagonal_[row] * v[row];
        for (int e = row_start_[row]; e < row_start_[row + 1]; ++e) {
            const auto& c = couplings_[static_cast<std::size_t>(e)];
            acc += c.value * v[static_cast<std::size_t>(c.column)];
        }
        y[row] = acc;
    }
}

std::vector<cplx> MagneticOperator::apply(std::span<const cplx> v) const {
    std::vector<cplx> y(v.size());
    apply(v, y);
    return y;
}

double MagneticOperator::norm_bound() const {
    double bound = 0.0;
    for (int row = 0; row < size(); ++row) {
        double sum = std::abs(diagonal(row));
        for (const auto& c : neighbours(row)) sum += std::abs(c.value);
        bound = std::max(bound, sum);
    }
    return bound;
}

double MagneticOperator::hermiticity_defect() const {
    double defect = 0.0;
    for (int row = 0; row < size(); ++row) {
        for (const auto& c : neighbours(row)) {
            defect = std::max(defect, std::abs(c.value - std::conj(coupling(c.column, row))));
        }
    }
    return defect;
}

MagneticOperator assemble(const GridDomain& dom, const GaugeSpec& gauge, const PotentialSpec& pot) {
    const PotentialSpec bound = bind_potential(pot, dom);
    const double h = dom.h();
    const double inv_h2 = 1.0 / (h * h);
    const int n = dom.size();

    std::vector<double> diagonal(static_cast<std::size_t>(n));
    std::vector<int> row_start(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Coupling> couplings;
    couplings.reserve(static_cast<std::size_t>(n) * 4);

    constexpr int kOffsets[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    for (int k = 0; k < n; ++k) {
        const auto [i, j] = dom.grid_coords(k);
        const Point here = dom.grid_position(i, j);
        const double v = sample_potential(bound, here);
        if (!(v >= 0.0)) {
            throw InputError("assemble: potential is negative (" + std::to_string(v) +
                             ") at node (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
        diagonal[static_cast<std::size_t>(k)] = 4.0 * inv_h2 + v;
        for (const auto& off : kOffsets) {
            const int q = dom.index(i + off[0], j + off[1]);
            if (q < 0) continue;
            const Point there = dom.grid_position(i + off[0], j + off[1]);
            const double theta = link_phase(gauge, here, there, h);
            couplings.push_back({q, -std::polar(inv_h2, -theta)});
        }
        row_start[static_cast<std::size_t>(k) + 1] = static_cast<int>(couplings.size());
    }
    return MagneticOperator(h, std::move(diagonal), std::move(row_start), std::move(couplings));
}

MagneticOperator gauge_shift(const MagneticOperator& op, std::span<const double> chi) {
    const int n = op.size();
    if (static_cast<int>(chi.size()) != n) {
        throw DomainError("gauge_shift: chi has length " + std::to_string(chi.size()) +
                          ", operator size is " + std::to_string(n));
    }
    for (double c : chi) {
        if (!std::isfinite(c)) throw DomainError("gauge_shift: chi must be finite");
    }
    std::vector<double> diagonal(op.diagonal().begin(), op.diagonal().end());
    std::vector<int> row_start(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Coupling> couplings;
    for (int p = 0; p < n; ++p) {
        const double chi_p = chi[static_cast<std::size_t>(p)];
        for (const auto& c : op.neighbours(p)) {
            const double chi_q = chi[static_cast<std::size_t>(c.column)];
            couplings.push_back({c.column, c.value * std::polar(1.0, -(chi_q - chi_p))});
        }
        row_start[static_cast<std::size_t>(p) + 1] = static_cast<int>(couplings.size());
    }
    return MagneticOperator(op.h(), std::move(diagonal), std::move(row_start),
                            std::move(couplings));
}

}  // namespace magspec
