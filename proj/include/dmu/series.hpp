#pragma once

// Taylor-coefficient arithmetic and the function model used throughout:
// a finite polynomial plus an optional geometric tail sum_k a rho^k z^k.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "dmu/measure.hpp"

namespace dmu {

class SymTables;

/// Coefficients of a polynomial, index j holding the coefficient of z^j.
/// Trailing exact zeros are dropped, so the zero polynomial is empty and
/// has degree -1.
class CoeffSeq {
public:
    CoeffSeq() = default;
    explicit CoeffSeq(std::vector<Complex> coeffs);
    CoeffSeq(std::initializer_list<Complex> coeffs);

    /// z^k
    static CoeffSeq monomial(std::size_t k, Complex scale = 1.0);

    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of z^j; zero beyond the stored range.
    Complex operator[](std::size_t j) const noexcept {
        return j < coeffs_.size() ? coeffs_[j] : Complex{};
    }

    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Coefficients padded (or truncated) to exactly `length` entries.
    std::vector<Complex> padded(std::size_t length) const;

    /// Horner evaluation.
    Complex evaluate(Complex z) const noexcept;

    CoeffSeq& operator+=(const CoeffSeq& other);
    CoeffSeq& operator-=(const CoeffSeq& other);
    CoeffSeq& operator*=(Complex scale);

    friend CoeffSeq operator+(CoeffSeq lhs, const CoeffSeq& rhs) { return lhs += rhs; }
    friend CoeffSeq operator-(CoeffSeq lhs, const CoeffSeq& rhs) { return lhs -= rhs; }
    friend CoeffSeq operator*(CoeffSeq lhs, Complex scale) { return lhs *= scale; }
    friend CoeffSeq operator*(Complex scale, CoeffSeq rhs) { return rhs *= scale; }
    friend CoeffSeq operator*(const CoeffSeq& lhs, const CoeffSeq& rhs);

    /// Multiplication by z^k.
    CoeffSeq shifted(std::size_t k) const;

    /// Quotient of synthetic division by (z - root); the remainder is
    /// returned through `remainder` when non-null.
    CoeffSeq divide_linear(Complex root, Complex* remainder = nullptr) const;

    /// Formal derivative.
    CoeffSeq derivative() const;

    friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;

private:
    void trim() noexcept;

    std::vector<Complex> coeffs_;
};

/// Geometric series sum_{k>=0} a rho^k z^k = a / (1 - rho z), |rho| < 1.
struct GeometricTail {
    Complex a;
    Complex rho;
};

/// f = poly + optional geometric tail. Taylor coefficient
/// f^(k) = poly[k] + a rho^k.
class AnalyticFn {
public:
    AnalyticFn() = default;
    AnalyticFn(CoeffSeq poly);  // NOLINT(google-explicit-constructor)
    AnalyticFn(CoeffSeq poly, std::optional<GeometricTail> tail);

    static AnalyticFn geometric(Complex a, Complex rho);

    const CoeffSeq& poly() const noexcept { return poly_; }
    const std::optional<GeometricTail>& tail() const noexcept { return tail_; }
    bool is_polynomial() const noexcept { return !tail_.has_value(); }

    /// Taylor coefficient of z^k.
    Complex coefficient(std::size_t k) const;

    AnalyticFn& operator*=(Complex scale);
    friend AnalyticFn operator*(Complex scale, AnalyticFn f) { return f *= scale; }

    /// Sum of two functions; their tails must share rho (or be absent).
    friend AnalyticFn operator+(const AnalyticFn& f, const AnalyticFn& g);

    /// Subtracts a polynomial, keeping the tail.
    friend AnalyticFn operator-(AnalyticFn f, const CoeffSeq& p);

private:
    CoeffSeq poly_;
    std::optional<GeometricTail> tail_;
};

/// f(zeta) for zeta on the unit circle; tail part summed as a / (1 - rho zeta).
Complex eval_boundary(const AnalyticFn& f, const UnitPoint& zeta);
Complex eval_boundary(const AnalyticFn& f, Complex zeta);

/// sum_j u[j] conj(v[j])
Complex h2_inner(const CoeffSeq& u, const CoeffSeq& v) noexcept;

/// H^2 pairing of two functions in the model, tails included in closed form.
Complex h2_inner(const AnalyticFn& u, const AnalyticFn& v);

/// C_j = sum_{k>=j} f^(k) S_{k-j}. The polynomial part is summed directly
/// and the tail part is a rho^j prod_t 1/(1 - zeta_t rho).
Complex tail_weighted_sum(const AnalyticFn& f, const SymTables& tables, std::size_t j);

}  // namespace dmu
