#include "dmu/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dmu/errors.hpp"
#include "dmu/sympoly.hpp"

namespace dmu {

AnalyticFn diff_quotient(const AnalyticFn& f, Complex zeta) {
    CoeffSeq quotient = f.poly().divide_linear(zeta);
    std::optional<GeometricTail> tail;
    if (const auto& t = f.tail()) {
        const Complex a = t->a * t->rho / (1.0 - t->rho * zeta);
        if (a != Complex{}) {
            tail = GeometricTail{a, t->rho};
        }
    }
    return AnalyticFn(std::move(quotient), tail);
}

AnalyticFn q_operator(const AnalyticFn& f, const AtomicMeasure& mu) {
    AnalyticFn g = f;
    for (Complex zeta : mu.points()) {
        g = diff_quotient(g, zeta);
    }
    return g;
}

namespace {

BasisPoly lagrange_member(const CoeffSeq& q, const CoeffSeq& dq, Complex zeta, std::size_t j) {
    CoeffSeq p = q.divide_linear(zeta);
    p *= 1.0 / dq.evaluate(zeta);
    return {j, std::move(p)};
}

}  // namespace

BasisPoly basis_poly(const AtomicMeasure& mu, std::size_t j) {
    const CoeffSeq q = expand_q(mu.points());
    const std::size_t s = mu.size();
    if (j < s) {
        return lagrange_member(q, q.derivative(), mu.point(j), j);
    }
    return {j, q.shifted(j - s)};
}

std::vector<BasisPoly> basis_polys(const AtomicMeasure& mu, std::size_t m) {
    const CoeffSeq q = expand_q(mu.points());
    const CoeffSeq dq = q.derivative();
    const std::size_t s = mu.size();
    std::vector<BasisPoly> out;
    out.reserve(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        if (j < s) {
            out.push_back(lagrange_member(q, dq, mu.point(j), j));
        } else {
            out.push_back({j, q.shifted(j - s)});
        }
    }
    return out;
}

Complex dmu_inner(const AnalyticFn& f, const AnalyticFn& g, const AtomicMeasure& mu) {
    Complex acc{};
    for (Complex zeta : mu.points()) {
        acc += eval_boundary(f, zeta) * std::conj(eval_boundary(g, zeta));
    }
    return acc + h2_inner(q_operator(f, mu), q_operator(g, mu));
}

double dmu_norm(const AnalyticFn& f, const AtomicMeasure& mu) {
    const Complex sq = dmu_inner(f, f, mu);
    const double scale = std::max(1.0, std::abs(sq.real()));
    if (std::abs(sq.imag()) > 1e-12 * scale) {
        throw ConsistencyError("squared norm has imaginary part " + std::to_string(sq.imag()));
    }
    if (sq.real() < -1e-12 * scale) {
        throw ConsistencyError("squared norm is negative: " + std::to_string(sq.real()));
    }
    return std::sqrt(std::max(0.0, sq.real()));
}

Decomposition decompose(const AnalyticFn& f, const AtomicMeasure& mu) {
    const std::size_t s = mu.size();
    AnalyticFn g = q_operator(f, mu);
    const CoeffSeq q = expand_q(mu.points());

    // Taylor coefficient j of f - q g, together with the magnitude of the
    // terms that produced it.
    auto residual = [&](std::size_t j, double& magnitude) {
        Complex product{};
        magnitude = std::abs(f.coefficient(j));
        for (std::size_t i = 0; i <= std::min(j, s); ++i) {
            const Complex term = q[i] * g.coefficient(j - i);
            product += term;
            magnitude += std::abs(term);
        }
        return f.coefficient(j) - product;
    };

    std::vector<Complex> low(s);
    double magnitude = 0.0;
    for (std::size_t j = 0; j < s; ++j) {
        low[j] = residual(j, magnitude);
    }

    // Everything above z^{s-1} must cancel. Past the polynomial parts only
    // geometric terms remain, so a further s + 1 coefficients settle it.
    const long top = std::max(f.poly().degree(), g.poly().degree() + static_cast<long>(s));
    const std::size_t last = static_cast<std::size_t>(std::max(top, 0L)) + s + 1;
    for (std::size_t j = s; j <= last; ++j) {
        const Complex r = residual(j, magnitude);
        if (std::abs(r) > 1e-10 * std::max(1.0, magnitude)) {
            throw ConsistencyError("decomposition residual at z^" + std::to_string(j) + " is " +
                                   std::to_string(std::abs(r)));
        }
    }
    return {std::move(low), std::move(g)};
}

std::vector<Complex> vandermonde_b(std::span<const Complex> a, const AtomicMeasure& mu) {
    if (a.size() != mu.size()) {
        throw InvalidArgument("vandermonde_b expects " + std::to_string(mu.size()) +
                              " coefficients, got " + std::to_string(a.size()));
    }
    const CoeffSeq poly(std::vector<Complex>(a.begin(), a.end()));
    std::vector<Complex> b;
    b.reserve(mu.size());
    for (Complex zeta : mu.points()) {
        b.push_back(poly.evaluate(zeta));
    }
    return b;
}

}  // namespace dmu
