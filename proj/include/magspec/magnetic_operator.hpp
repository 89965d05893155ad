#pragma once

// Five-point discretization of (D - A)^2 + V with Dirichlet boundary values.
// Off-diagonal entries carry Peierls phases: H(p, q) = -exp(-i theta_pq) / h^2
// with theta_pq the midpoint-rule line integral of A from p to q.

#include <complex>
#include <span>
#include <vector>

#include "magspec/domain.hpp"

namespace magspec {

using cplx = std::complex<double>;

struct Coupling {
    int column = 0;
    cplx value;
};

class MagneticOperator {
public:
    MagneticOperator(double h, std::vector<double> diagonal, std::vector<int> row_start,
                     std::vector<Coupling> couplings);

    int size() const { return static_cast<int>(diagonal_.size()); }
    double h() const { return h_; }
    double diagonal(int row) const { return diagonal_[static_cast<std::size_t>(row)]; }
    std::span<const double> diagonal() const { return diagonal_; }
    std::span<const Coupling> neighbours(int row) const;

    /// Stored coupling H(row, column), or 0 when the nodes are not linked.
    cplx coupling(int row, int column) const;

    /// y = H v. Throws DomainError on length mismatch.
    void apply(std::span<const cplx> v, std::span<cplx> y) const;
    std::vector<cplx> apply(std::span<const cplx> v) const;

    /// Gershgorin bound on the spectral radius.
    double norm_bound() const;

    /// Largest |H(p,q) - conj(H(q,p))| over stored couplings.
    double hermiticity_defect() const;

private:
    double h_;
    std::vector<double> diagonal_;
    std::vector<int> row_start_;
    std::vector<Coupling> couplings_;
};

/// Throws InputError when the sampled potential is negative or a grid file
/// does not match the domain.
MagneticOperator assemble(const GridDomain& dom, const GaugeSpec& gauge,
                          const PotentialSpec& pot);

/// Conjugation by diag(exp(i chi)): H(p,q) -> H(p,q) exp(-i (chi_q - chi_p)).
MagneticOperator gauge_shift(const MagneticOperator& op, std::span<const double> chi);

}  // namespace magspec
