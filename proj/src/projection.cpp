#include "dmu/projection.hpp"

#include <algorithm>
#include <cmath>

#include "dmu/errors.hpp"
#include "dmu/sympoly.hpp"

namespace dmu {

namespace {

void require_supported(const AtomicMeasure& mu, std::size_t n) {
    if (n + 1 < mu.size()) {
        throw UnsupportedDegree(static_cast<long>(n), mu.size());
    }
}

// Tables sized so that tail_weighted_sum(f, ., j) is covered for j >= lowest.
SymTables tables_for(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t lowest) {
    const long top = f.poly().degree() - static_cast<long>(lowest);
    return SymTables(mu.points(), static_cast<std::size_t>(std::max(top, 0L)));
}

}  // namespace

BasisCoefficients basis_coefficients(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n) {
    require_supported(mu, n);
    const std::size_t s = mu.size();
    BasisCoefficients out;
    out.b.reserve(s);
    for (Complex zeta : mu.points()) {
        out.b.push_back(eval_boundary(f, zeta));
    }
    const SymTables tables = tables_for(f, mu, s);
    for (std::size_t j = s; j <= n; ++j) {
        out.c.push_back(tail_weighted_sum(f, tables, j));
    }
    return out;
}

ProjectionResult project(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n) {
    BasisCoefficients coeffs = basis_coefficients(f, mu, n);
    const std::size_t s = mu.size();
    const std::vector<BasisPoly> basis = basis_polys(mu, n);

    CoeffSeq monomial(decompose(f, mu).low);
    for (std::size_t j = s; j <= n; ++j) {
        monomial += coeffs.c[j - s] * basis[j].coeffs;
    }

    ProjectionResult result;
    result.n = n;
    result.monomial = std::move(monomial);
    result.boundary_values = coeffs.b;
    result.basis_b = std::move(coeffs.b);
    result.basis_c = std::move(coeffs.c);
    result.distance = distance(f, mu, n);
    return result;
}

CoeffSeq fast_monomial_coefficients_unchecked(const AnalyticFn& f, const AtomicMeasure& mu,
                                              std::size_t n) {
    require_supported(mu, n);
    const std::size_t s = mu.size();
    const std::size_t first_mixed = n + 1 - s;
    const SymTables tables = tables_for(f, mu, first_mixed);

    std::vector<Complex> coeffs(n + 1);
    for (std::size_t j = 0; j < first_mixed; ++j) {
        coeffs[j] = f.coefficient(j);
    }
    for (std::size_t j = first_mixed; j <= n; ++j) {
        Complex acc{};
        for (std::size_t m = 0; m <= std::min(n - j, s); ++m) {
            const Complex term = tables.T(m) * tail_weighted_sum(f, tables, j + m);
            acc += (m % 2 == 0) ? term : -term;
        }
        coeffs[j] = acc;
    }
    return CoeffSeq(std::move(coeffs));
}

CoeffSeq fast_monomial_coefficients(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n) {
    CoeffSeq fast = fast_monomial_coefficients_unchecked(f, mu, n);
    const CoeffSeq expansion = project(f, mu, n).monomial;
    double worst = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        worst = std::max(worst, std::abs(fast[j] - expansion[j]));
    }
    if (!(worst <= kFastPathTolerance)) {
        throw FormulaDiscrepancy(fast.padded(n + 1), expansion.padded(n + 1), worst);
    }
    return fast;
}

double distance(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n) {
    require_supported(mu, n);
    const SymTables tables = tables_for(f, mu, n + 1);
    const long degree = f.poly().degree();

    double sum = 0.0;
    for (long j = static_cast<long>(n) + 1; j <= degree; ++j) {
        sum += std::norm(tail_weighted_sum(f, tables, static_cast<std::size_t>(j)));
    }
    if (const auto& tail = f.tail()) {
        // For j past the polynomial, C_j = a rho^j G exactly.
        const long start = std::max(static_cast<long>(n) + 1, degree + 1);
        const double r2 = std::norm(tail->rho);
        sum += std::norm(tail->a * tables.generating_function(tail->rho)) *
               std::pow(r2, static_cast<double>(start)) / (1.0 - r2);
    }
    return std::sqrt(sum);
}

}  // namespace dmu
