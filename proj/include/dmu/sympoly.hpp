#pragma once

// Complete homogeneous (S_k) and elementary (T_k) symmetric polynomials
// evaluated at the atoms of a measure.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "dmu/series.hpp"

namespace dmu {

/// S_0..S_K via the generating function prod_t 1/(1 - zeta_t x), one
/// variable at a time.
std::vector<Complex> complete_homogeneous(std::span<const Complex> points, std::size_t max_index);

/// T_0..T_s from prod_t (1 + zeta_t x).
std::vector<Complex> elementary(std::span<const Complex> points);

/// q(z) = prod_t (z - zeta_t); coefficient of z^j is (-1)^{s-j} T_{s-j}.
CoeffSeq expand_q(std::span<const Complex> points);

/// Precomputed S_0..S_K and T_0..T_s for one set of points.
class SymTables {
public:
    SymTables(std::vector<Complex> points, std::size_t max_index);

    std::size_t atom_count() const noexcept { return points_.size(); }
    std::size_t max_index() const noexcept { return S_.size() - 1; }
    const std::vector<Complex>& points() const noexcept { return points_; }

    /// S_k; k must be <= max_index().
    Complex S(std::size_t k) const { return S_.at(k); }
    /// T_m, zero for m > s.
    Complex T(std::size_t m) const noexcept { return m < T_.size() ? T_[m] : Complex{}; }

    std::span<const Complex> S_values() const noexcept { return S_; }
    std::span<const Complex> T_values() const noexcept { return T_; }

    /// prod_t 1/(1 - zeta_t x) = sum_m S_m x^m, for |x| < 1.
    Complex generating_function(Complex x) const noexcept;

private:
    std::vector<Complex> points_;
    std::vector<Complex> S_;
    std::vector<Complex> T_;
};

/// Largest residual of the two cancellation identities
///   sum_{m=0}^{k} (-1)^m T_m S_{k-m} = 0,  1 <= k <= s,
///   sum_{m=0}^{s} (-1)^m T_m S_{k-m} = 0,  s+1 <= k <= K.
/// Requires K >= s + 1.
double check_identities(const SymTables& tables);

}  // namespace dmu
