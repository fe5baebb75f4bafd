#pragma once

#include <stdexcept>
#include <string>
#include <vector>
#include <complex>

namespace dmu {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a documented precondition
/// (non-unimodular point, duplicate atoms, |rho| >= 1, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The closed-form projection is defined only for n >= s - 1.
class UnsupportedDegree : public Error {
public:
    UnsupportedDegree(long degree, std::size_t atoms);

    long degree() const noexcept { return degree_; }
    std::size_t atoms() const noexcept { return atoms_; }

private:
    long degree_;
    std::size_t atoms_;
};

/// A computed quantity failed a self-check that holds in exact arithmetic.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// The monomial fast path disagrees with the orthonormal-expansion path.
class FormulaDiscrepancy : public ConsistencyError {
public:
    FormulaDiscrepancy(std::vector<std::complex<double>> fast,
                       std::vector<std::complex<double>> expansion,
                       double max_error);

    const std::vector<std::complex<double>>& fast() const noexcept { return fast_; }
    const std::vector<std::complex<double>>& expansion() const noexcept { return expansion_; }
    double max_error() const noexcept { return max_error_; }

private:
    std::vector<std::complex<double>> fast_;
    std::vector<std::complex<double>> expansion_;
    double max_error_;
};

/// Cholesky pivot fell below the relative threshold.
class IllConditioned : public Error {
public:
    IllConditioned(std::size_t pivot_index, double condition_estimate);

    std::size_t pivot_index() const noexcept { return pivot_index_; }
    double condition_estimate() const noexcept { return condition_estimate_; }

private:
    std::size_t pivot_index_;
    double condition_estimate_;
};

}  // namespace dmu
