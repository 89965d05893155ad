#include "magspec/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "magspec/errors.hpp"

namespace magspec {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

void apply(const MagneticOperator& op, const Vec& x, Vec& y) {
    const auto n = static_cast<std::size_t>(op.size());
    op.apply(std::span<const cplx>(x.data(), n), std::span<cplx>(y.data(), n));
}

// Classical Gram-Schmidt applied twice against the first `count` columns.
Vec orthogonalize(const Mat& basis, Eigen::Index count, Vec& w) {
    if (count == 0) return Vec();
    const auto cols = basis.leftCols(count);
    Vec c = cols.adjoint() * w;
    w.noalias() -= cols * c;
    Vec c2 = cols.adjoint() * w;
    w.noalias() -= cols * c2;
    return c + c2;
}

// Deterministic pseudo-random entries in [0.5, 1.5). A smooth function of the
// row index is nearly invariant under grid reflections and leaves whole
// symmetry classes of eigenvectors with almost no weight in the Krylov space.
Vec start_vector(Eigen::Index n, int phase) {
    std::mt19937_64 gen(0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(phase));
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = 0.5 + static_cast<double>(gen() >> 11) * 0x1.0p-53;
    }
    return v;
}

struct Budget {
    int used = 0;
    int cap = 0;
    bool exhausted() const { return used >= cap; }
};

struct PhaseResult {
    std::vector<double> values;
    Mat vectors;
    int converged = 0;
    bool complete = false;
};

class Lanczos {
public:
    Lanczos(const MagneticOperator& op, double tol, Budget& budget)
        : op_(op), n_(op.size()), tol_(tol), budget_(budget), scale_(op.norm_bound()) {}

    // Lowest `nev` eigenpairs of the operator restricted to the orthogonal
    // complement of locked.leftCols(n_locked). Stops early once the lowest
    // Ritz value has converged at or above `threshold`; an unconverged
    // Ritz value says nothing about directions the basis has barely seen.
    PhaseResult run(const Mat& locked, Eigen::Index n_locked, Vec start, int nev, int basis,
                    double threshold) {
        const Eigen::Index room = n_ - n_locked;
        const int m = static_cast<int>(std::min<Eigen::Index>(basis, room));
        nev = std::min(nev, m);
        const int keep = std::clamp(nev + std::max(8, (m - nev) / 3), nev, std::max(nev, m - 2));

        Mat V(n_, m + 1);
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        Vec w(n_);

        orthogonalize(locked, n_locked, start);
        if (start.norm() <= 1e-8 * std::sqrt(static_cast<double>(n_))) {
            start = fresh_direction(locked, n_locked, V, 0, 17);
        }
        V.col(0) = start / start.norm();

        int j = 0;
        double beta = 0.0;
        PhaseResult result;
        while (true) {
            for (; j < m; ++j) {
                apply(op_, V.col(j), w);
                ++budget_.used;
                orthogonalize(locked, n_locked, w);
                const Vec c = orthogonalize(V, j + 1, w);
                // the basis pass reintroduces locked components, which the
                // recurrence would amplify geometrically
                orthogonalize(locked, n_locked, w);
                for (int i = 0; i <= j; ++i) T(i, j) = T(j, i) = c(i).real();
                beta = w.norm();
                if (beta <= 1e-13 * scale_) {
                    // invariant subspace: continue from an unrelated direction
                    beta = 0.0;
                    if (j + 1 < m) {
                        V.col(j + 1) = fresh_direction(locked, n_locked, V, j + 1, j + 31);
                    } else {
                        V.col(j + 1).setZero();
                    }
                } else {
                    V.col(j + 1) = w / beta;
                }
                if (j + 1 < m) T(j + 1, j) = T(j, j + 1) = beta;
            }

            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(T);
            const Eigen::VectorXd& theta = ritz.eigenvalues();
            const Eigen::MatrixXd& S = ritz.eigenvectors();
            int converged = 0;
            while (converged < nev &&
                   std::abs(beta * S(m - 1, converged)) <= tol_ * std::abs(theta(converged))) {
                ++converged;
            }
            const bool done = converged == nev;
            // Proving the complement empty below the threshold only needs the
            // lowest Ritz pair resolved well enough to bracket it, not to tol.
            const double bottom = std::abs(beta * S(m - 1, 0));
            const bool nothing_below = std::isfinite(threshold) &&
                                       bottom <= std::sqrt(tol_) * std::abs(theta(0)) &&
                                       theta(0) - bottom >= threshold;
            if (done || nothing_below || budget_.exhausted()) {
                result.converged = converged;
                result.complete = done || nothing_below;
                result.values.assign(theta.data(), theta.data() + converged);
                result.vectors = V.leftCols(m) * S.leftCols(converged);
                return result;
            }

            // thick restart: keep the lowest Ritz vectors plus the residual direction
            Mat kept = V.leftCols(m) * S.leftCols(keep);
            V.leftCols(keep) = kept;
            V.col(keep) = V.col(m);
            T.setZero();
            for (int i = 0; i < keep; ++i) {
                T(i, i) = theta(i);
                T(i, keep) = T(keep, i) = beta * S(m - 1, i);
            }
            j = keep;
        }
    }

private:
    Vec fresh_direction(const Mat& locked, Eigen::Index n_locked, const Mat& V, Eigen::Index used,
                        int seed) const {
        for (int attempt = 0; attempt < 8; ++attempt) {
            Vec v = start_vector(n_, seed + 101 * attempt);
            orthogonalize(locked, n_locked, v);
            orthogonalize(V, used, v);
            const double norm = v.norm();
            if (norm > 1e-6) return v / norm;
        }
        throw NumericalError("lanczos: could not extend the Krylov basis");
    }

    const MagneticOperator& op_;
    Eigen::Index n_;
    double tol_;
    Budget& budget_;
    double scale_;
};

EigenPair finish_pair(const MagneticOperator& op, double value, const Vec& unit) {
    Vec hv(unit.size());
    apply(op, unit, hv);
    const double residual = (hv - value * unit).norm() / std::abs(value);
    EigenPair pair;
    pair.value = value;
    pair.residual = residual;
    pair.vector.resize(static_cast<std::size_t>(unit.size()));
    const double inv_h = 1.0 / op.h();
    for (Eigen::Index i = 0; i < unit.size(); ++i) {
        pair.vector[static_cast<std::size_t>(i)] = unit(i) * inv_h;
    }
    return pair;
}

bool is_real(const MagneticOperator& op) {
    for (int row = 0; row < op.size(); ++row) {
        for (const auto& c : op.neighbours(row)) {
            if (c.value.imag() != 0.0) return false;
        }
    }
    return true;
}

// Pivoted LU of a shifted symmetric tridiagonal matrix (the dgttrf layout:
// unit lower factor in dl, upper factor in d, du, du2).
class TridiagonalLU {
public:
    TridiagonalLU(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub, double shift,
                  double tiny)
        : d_(diag.array() - shift), du_(sub), du2_(Eigen::VectorXd::Zero(sub.size())), dl_(sub),
          swapped_(static_cast<std::size_t>(sub.size()), false) {
        const Eigen::Index n = d_.size();
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            if (std::abs(d_(i)) >= std::abs(dl_(i))) {
                if (d_(i) == 0.0) d_(i) = tiny;
                const double fact = dl_(i) / d_(i);
                dl_(i) = fact;
                d_(i + 1) -= fact * du_(i);
            } else {
                const double fact = d_(i) / dl_(i);
                d_(i) = dl_(i);
                dl_(i) = fact;
                const double temp = du_(i);
                du_(i) = d_(i + 1);
                d_(i + 1) = temp - fact * d_(i + 1);
                if (i + 2 < n) {
                    du2_(i) = du_(i + 1);
                    du_(i + 1) = -fact * du_(i + 1);
                }
                swapped_[static_cast<std::size_t>(i)] = true;
            }
        }
        if (d_(n - 1) == 0.0) d_(n - 1) = tiny;
    }

    void solve(Eigen::VectorXd& b) const {
        const Eigen::Index n = d_.size();
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            if (!swapped_[static_cast<std::size_t>(i)]) {
                b(i + 1) -= dl_(i) * b(i);
            } else {
                const double temp = b(i);
                b(i) = b(i + 1);
                b(i + 1) = temp - dl_(i) * b(i);
            }
        }
        b(n - 1) /= d_(n - 1);
        if (n > 1) b(n - 2) = (b(n - 2) - du_(n - 2) * b(n - 1)) / d_(n - 2);
        for (Eigen::Index i = n - 3; i >= 0; --i) {
            b(i) = (b(i) - du_(i) * b(i + 1) - du2_(i) * b(i + 2)) / d_(i);
        }
    }

private:
    Eigen::VectorXd d_, du_, du2_, dl_;
    std::vector<bool> swapped_;
};

// Eigenvectors of a symmetric tridiagonal matrix for the given eigenvalues by
// inverse iteration. Vectors of nearby eigenvalues are orthogonalized against
// each other so degenerate clusters come out as an orthonormal basis.
Eigen::MatrixXd tridiagonal_vectors(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub,
                                    const std::vector<double>& values) {
    const Eigen::Index n = diag.size();
    const auto k = static_cast<Eigen::Index>(values.size());
    Eigen::MatrixXd Y(n, k);
    if (n == 1) {
        Y.setOnes();
        return Y;
    }
    const double norm = std::max(diag.cwiseAbs().maxCoeff(), 1e-300) + 2.0 * sub.cwiseAbs().maxCoeff();
    const double tiny = std::numeric_limits<double>::epsilon() * norm;
    const double cluster = 1e-3 * norm;
    for (Eigen::Index c = 0; c < k; ++c) {
        const TridiagonalLU lu(diag, sub, values[static_cast<std::size_t>(c)], tiny);
        Eigen::Index first = c;
        while (first > 0 && values[static_cast<std::size_t>(c)] -
                                    values[static_cast<std::size_t>(first - 1)] <=
                                cluster) {
            --first;
        }
        Eigen::VectorXd y(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            y(i) = 1.0 + 0.5 * std::sin(0.37 * static_cast<double>((i + 1) * (c + 1)));
        }
        for (int iteration = 0; iteration < 4; ++iteration) {
            y /= y.norm();
            lu.solve(y);
            for (Eigen::Index j = first; j < c; ++j) y -= Y.col(j).dot(y) * Y.col(j);
        }
        Y.col(c) = y / y.norm();
    }
    return Y;
}

template <class Matrix>
Mat lowest_dense(const Matrix& a, int k, std::vector<double>& values) {
    using Scalar = typename Matrix::Scalar;
    Eigen::Tridiagonalization<Matrix> tri(a);
    const Eigen::VectorXd diag = tri.diagonal().real();
    const Eigen::VectorXd sub = tri.subDiagonal().real();
    // the QL sweep misses convergence on unscaled Laplacians; compute() would
    // rescale, computeFromTridiagonal does not
    const double scale = std::max(diag.cwiseAbs().maxCoeff(), 1e-300);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag / scale, sub / scale, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("dense eigensolver: tridiagonal QL iteration did not converge");
    }
    // eigenvalues-only mode leaves them in QL order
    std::vector<double> all(static_cast<std::size_t>(diag.size()));
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        all[static_cast<std::size_t>(i)] = es.eigenvalues()(i) * scale;
    }
    std::partial_sort(all.begin(), all.begin() + k, all.end());
    values.assign(all.begin(), all.begin() + k);
    const Eigen::MatrixXd y = tridiagonal_vectors(diag, sub, values);
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> v =
        tri.matrixQ() * y.cast<Scalar>();
    return v.template cast<cplx>();
}

EigenResult solve_dense(const MagneticOperator& op, int k) {
    EigenResult out;
    out.method = SolverMethod::dense;
    std::vector<double> values;
    const Mat full = dense_matrix(op);
    const Mat vectors = is_real(op) ? lowest_dense(Eigen::MatrixXd(full.real()), k, values)
                                    : lowest_dense(full, k, values);
    for (int i = 0; i < k; ++i) out.pairs.push_back(finish_pair(op, values[i], vectors.col(i)));
    return out;
}

EigenResult solve_lanczos(const MagneticOperator& op, int k, double tol,
                          const SolverOptions& options) {
    const Eigen::Index n = op.size();
    Budget budget;
    budget.cap = options.max_matvecs > 0 ? options.max_matvecs : std::max(50 * k, 30000);
    const int basis = options.basis_size > 0 ? options.basis_size : std::max(2 * k + 20, 30);

    Lanczos lanczos(op, tol, budget);
    Mat locked(n, 0);
    std::vector<double> values;
    int phase = 0;
    while (true) {
        double threshold = std::numeric_limits<double>::infinity();
        if (static_cast<int>(values.size()) >= k) {
            std::vector<double> sorted = values;
            std::nth_element(sorted.begin(), sorted.begin() + (k - 1), sorted.end());
            threshold = sorted[static_cast<std::size_t>(k - 1)];
        }
        const Eigen::Index n_locked = locked.cols();
        if (n_locked == n) break;
        const int nev = static_cast<int>(std::min<Eigen::Index>(k, n - n_locked));
        auto result = lanczos.run(locked, n_locked, start_vector(n, phase), nev, basis, threshold);
        ++phase;
        if (!result.complete) {
            throw NumericalError("lanczos: matvec budget of " + std::to_string(budget.cap) +
                                 " exhausted after " + std::to_string(phase) + " phase(s); " +
                                 std::to_string(std::min<std::size_t>(values.size(), k)) +
                                 " of " + std::to_string(k) + " eigenpairs locked, " +
                                 std::to_string(result.converged) + " converging");
        }
        const int found = static_cast<int>(result.values.size());
        locked.conservativeResize(Eigen::NoChange, n_locked + found);
        locked.rightCols(found) = result.vectors;
        values.insert(values.end(), result.values.begin(), result.values.end());
        const bool saturated = std::isfinite(threshold) &&
                               (found == 0 || result.values.front() >=
                                                  threshold - std::max(tol, 1e-10) * threshold);
        if (saturated) break;
    }

    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] < values[b]; });
    EigenResult out;
    out.method = SolverMethod::lanczos;
    out.matvecs = budget.used;
    out.phases = phase;
    for (int i = 0; i < k; ++i) {
        const int idx = order[static_cast<std::size_t>(i)];
        Vec unit = locked.col(idx);
        unit /= unit.norm();
        out.pairs.push_back(finish_pair(op, values[static_cast<std::size_t>(idx)], unit));
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd dense_matrix(const MagneticOperator& op) {
    const int n = op.size();
    Mat a = Mat::Zero(n, n);
    for (int row = 0; row < n; ++row) {
        a(row, row) = op.diagonal(row);
        for (const auto& c : op.neighbours(row)) a(row, c.column) = c.value;
    }
    return a;
}

EigenResult lowest_eigenpairs(const MagneticOperator& op, int k, double tol,
                              const SolverOptions& options) {
    const int n = op.size();
    if (k < 1 || k > n) {
        throw DomainError("lowest_eigenpairs: k = " + std::to_string(k) + " outside [1, " +
                          std::to_string(n) + "]");
    }
    if (!(tol >= 1e-12 && tol <= 1e-4)) {
        throw DomainError("lowest_eigenpairs: tol must lie in [1e-12, 1e-4]");
    }
    const bool dense = options.method == SolverMethod::dense ||
                       (options.method == SolverMethod::automatic && n <= options.dense_limit);
    EigenResult out = dense ? solve_dense(op, k) : solve_lanczos(op, k, tol, options);

    out.spectrum.d = 2;
    out.spectrum.source = SpectrumSource::discrete;
    out.spectrum.h = op.h();
    for (const auto& p : out.pairs) out.spectrum.values.push_back(p.value);
    out.spectrum.degeneracy_flags = degeneracy_flags(out.spectrum.values);
    return out;
}

std::string to_string(SolverMethod method) {
    switch (method) {
        case SolverMethod::automatic: return "automatic";
        case SolverMethod::lanczos: return "lanczos";
        case SolverMethod::dense: return "dense";
    }
    return "unknown";
}

std::vector<bool> degeneracy_flags(std::span<const double> values, double rel) {
    std::vector<bool> flags(values.size(), false);
    for (std::size_t j = 0; j + 1 < values.size(); ++j) {
        flags[j] = values[j + 1] - values[j] <= rel * std::abs(values[j]);
    }
    return flags;
}

std::string to_string(SpectrumSource source) {
    return source == SpectrumSource::analytic ? "analytic" : "discrete";
}

}  // namespace magspec
