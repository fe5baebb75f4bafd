#pragma once

// Closed-form orthogonal projection onto polynomials of degree <= n in D_mu
// and the distance to that subspace.
//
// With b_k = f(zeta_k) and C_j = sum_{k>=j} f^(k) S_{k-j},
//   P_n f = sum_{k<s} b_k p_k + sum_{j=s}^{n} C_j p_j,
//   dist(f, P_n)^2 = sum_{j>n} |C_j|^2.

#include <cstddef>
#include <vector>

#include "dmu/dirichlet.hpp"
#include "dmu/measure.hpp"
#include "dmu/series.hpp"

namespace dmu {

/// Agreement required between the fast monomial formula and the expansion.
inline constexpr double kFastPathTolerance = 1e-10;

struct BasisCoefficients {
    std::vector<Complex> b;  // b_0..b_{s-1}
    std::vector<Complex> c;  // C_s..C_n
};

struct ProjectionResult {
    std::size_t n = 0;
    CoeffSeq monomial;
    std::vector<Complex> basis_b;
    std::vector<Complex> basis_c;  // C_s..C_n
    double distance = 0.0;
    std::vector<Complex> boundary_values;
};

/// Throws UnsupportedDegree when n < s - 1.
BasisCoefficients basis_coefficients(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n);

ProjectionResult project(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n);

/// Monomial coefficients of P_n f without forming the basis:
///   [z^j] = f^(j)                                      for j <= n - s,
///   [z^j] = sum_{m=0}^{min(n-j, s)} (-1)^m T_m C_{j+m}  for n-s < j <= n,
/// with C_j extended to every j >= 0 by the same sum. The result is checked
/// against project() and FormulaDiscrepancy is thrown on a mismatch beyond
/// kFastPathTolerance.
CoeffSeq fast_monomial_coefficients(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n);

/// Same formula, no cross-check.
CoeffSeq fast_monomial_coefficients_unchecked(const AnalyticFn& f, const AtomicMeasure& mu,
                                              std::size_t n);

double distance(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n);

}  // namespace dmu
