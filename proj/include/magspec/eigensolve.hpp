#pragma once

#include <vector>

#include <Eigen/Dense>

#include "magspec/magnetic_operator.hpp"
#include "magspec/spectrum.hpp"

namespace magspec {

struct EigenPair {
    double value = 0.0;
    /// Unit norm in the grid inner product sum |v_i|^2 h^2.
    std::vector<cplx> vector;
    /// ||H v - value v|| / value
    double residual = 0.0;
};

enum class SolverMethod { automatic, lanczos, dense };

struct SolverOptions {
    SolverMethod method = SolverMethod::automatic;
    /// automatic switches to the dense solver at or below this size
    int dense_limit = 2000;
    /// total operator applications before giving up; 0 picks max(50 k, 30000)
    int max_matvecs = 0;
    /// Lanczos basis size before a thick restart; 0 picks max(2 k + 20, 30)
    int basis_size = 0;
};

struct EigenResult {
    Spectrum spectrum;
    std::vector<EigenPair> pairs;
    SolverMethod method = SolverMethod::automatic;
    int matvecs = 0;
    int phases = 0;
};

/// The k smallest eigenpairs of a Hermitian positive-definite operator.
///
/// The Lanczos path runs thick-restart Lanczos with full reorthogonalization
/// from a fixed start vector. Converged pairs are locked and a fresh phase is
/// started in their orthogonal complement until a phase finds nothing below
/// the current k-th value; this recovers copies of degenerate eigenvalues that
/// a single Krylov space cannot see.
///
/// Throws DomainError for k outside [1, n] or tol outside [1e-12, 1e-4], and
/// NumericalError when the matvec budget runs out (the message reports how
/// many pairs had converged).
EigenResult lowest_eigenpairs(const MagneticOperator& op, int k, double tol,
                              const SolverOptions& options = {});

Eigen::MatrixXcd dense_matrix(const MagneticOperator& op);

std::string to_string(SolverMethod method);

}  // namespace magspec
