#pragma once

// The local Dirichlet space D_mu for an atomic measure mu on the circle,
// normed by
//   ||f||^2 = sum_k |f(zeta_k)|^2 + ||Q f||_{H^2}^2,
// where Q is the product of the difference quotients at the atoms.

#include <cstddef>
#include <utility>
#include <vector>

#include "dmu/measure.hpp"
#include "dmu/series.hpp"

namespace dmu {

/// (f - f(zeta)) / (z - zeta). A tail (a, rho) maps to (a rho / (1 - rho zeta), rho).
AnalyticFn diff_quotient(const AnalyticFn& f, Complex zeta);

/// Q f = Q_{zeta_0} ... Q_{zeta_{s-1}} f, applied in stored atom order.
AnalyticFn q_operator(const AnalyticFn& f, const AtomicMeasure& mu);

/// Member j of the orthonormal basis of D_mu.
///   j <  s: q(z) / ((z - zeta_j) q'(zeta_j)), degree s-1, p_j(zeta_k) = delta_jk
///   j >= s: q(z) z^{j-s}, monic of degree j
struct BasisPoly {
    std::size_t index;
    CoeffSeq coeffs;
};

BasisPoly basis_poly(const AtomicMeasure& mu, std::size_t j);

/// p_0..p_m, sharing the expansion of q.
std::vector<BasisPoly> basis_polys(const AtomicMeasure& mu, std::size_t m);

Complex dmu_inner(const AnalyticFn& f, const AnalyticFn& g, const AtomicMeasure& mu);
double dmu_norm(const AnalyticFn& f, const AtomicMeasure& mu);

/// f = (a_0 + ... + a_{s-1} z^{s-1}) + q(z) g(z) with g = Q f.
struct Decomposition {
    std::vector<Complex> low;  // a_0..a_{s-1}
    AnalyticFn g;
};

Decomposition decompose(const AnalyticFn& f, const AtomicMeasure& mu);

/// b_k = sum_j a_j zeta_k^j, i.e. the values at the atoms of the
/// polynomial with coefficients a.
std::vector<Complex> vandermonde_b(std::span<const Complex> a, const AtomicMeasure& mu);

}  // namespace dmu
