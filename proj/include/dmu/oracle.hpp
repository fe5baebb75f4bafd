#pragma once

// Brute-force reference: least squares over monomials through the Gram
// matrix of {1, z, ..., z^n} in D_mu. Shares only the inner product with
// the closed-form path.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dmu/measure.hpp"
#include "dmu/series.hpp"

namespace dmu {

/// Dense conjugate-symmetric matrix, row-major.
template <typename Real>
class BasicHermitianMatrix {
public:
    using Scalar = std::complex<Real>;

    explicit BasicHermitianMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    std::size_t dim() const noexcept { return dim_; }
    Scalar& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    Scalar operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    Real max_asymmetry() const noexcept {
        Real worst = 0;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = i; j < dim_; ++j) {
                worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
            }
        }
        return worst;
    }

    /// Solves A x = rhs by Cholesky A = L L^*. Throws IllConditioned when a
    /// pivot drops below `relative_pivot` times the largest diagonal entry.
    std::vector<Scalar> solve(std::span<const Scalar> rhs, Real relative_pivot = Real(1e-12)) const;

private:
    std::size_t dim_;
    std::vector<Scalar> data_;
};

using HermitianMatrix = BasicHermitianMatrix<double>;

extern template class BasicHermitianMatrix<double>;
extern template class BasicHermitianMatrix<long double>;

/// G[a][b] = <z^a, z^b>_{D_mu}, 0 <= a, b <= n. Accumulated in binary128
/// and rounded.
HermitianMatrix gram_matrix(const AtomicMeasure& mu, std::size_t n);

/// Coefficients of the minimizer of ||f - p|| over p of degree <= n, from
/// the normal equations solved in binary128. The monomial Gram matrix is
/// badly conditioned when atoms cluster, hence the wide type.
CoeffSeq oracle_project(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n);

double oracle_distance(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n);

struct ValidationFailure {
    std::size_t trial;
    std::uint64_t seed;  // reproduces the trial via make_trial()
    std::vector<Complex> points;
    AnalyticFn function;
    std::size_t n;
    double coeff_error;
    double distance_error;
    std::string reason;
};

struct ValidationReport {
    std::size_t trials = 0;
    double tolerance = 0.0;
    double max_coeff_error = 0.0;
    double max_distance_error = 0.0;
    /// |distance() - ||f - P_n f|||, closed form against direct norm.
    double max_residual_norm_error = 0.0;
    /// Fast monomial formula against the expansion, over every trial.
    double max_fast_path_error = 0.0;
    std::size_t fast_path_trials = 0;
    std::vector<ValidationFailure> failures;
};

struct ValidationTrial {
    AtomicMeasure mu;
    AnalyticFn f;
    std::size_t n;
};

/// Seed for trial `index` of a run started from `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

/// Random instance: s in [1, s_max] atoms at uniform angles, a polynomial of
/// degree <= n_max + s + 3 with coefficients in the unit square, a tail with
/// |rho| <= 0.8 on about half the draws, and n in [s-1, n_max].
ValidationTrial make_trial(std::uint64_t seed, std::size_t s_max, std::size_t n_max);

/// Compares project()/distance() with the Gram-matrix oracle on `trials`
/// random instances. Deterministic in `seed`.
ValidationReport cross_validate(std::uint64_t seed, std::size_t trials, std::size_t s_max,
                                std::size_t n_max, double tol);

}  // namespace dmu
