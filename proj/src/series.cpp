#include "dmu/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dmu/errors.hpp"
#include "dmu/sympoly.hpp"

namespace dmu {

namespace {

bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_finite(Complex z, const char* what) {
    if (!is_finite(z)) {
        throw InvalidArgument(std::string(what) + " must be finite");
    }
}

}  // namespace

CoeffSeq::CoeffSeq(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    for (Complex c : coeffs_) {
        require_finite(c, "polynomial coefficient");
    }
    trim();
}

CoeffSeq::CoeffSeq(std::initializer_list<Complex> coeffs)
    : CoeffSeq(std::vector<Complex>(coeffs)) {}

CoeffSeq CoeffSeq::monomial(std::size_t k, Complex scale) {
    std::vector<Complex> coeffs(k + 1);
    coeffs[k] = scale;
    return CoeffSeq(std::move(coeffs));
}

void CoeffSeq::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) {
        coeffs_.pop_back();
    }
}

std::vector<Complex> CoeffSeq::padded(std::size_t length) const {
    std::vector<Complex> out(length);
    std::copy_n(coeffs_.begin(), std::min(length, coeffs_.size()), out.begin());
    return out;
}

Complex CoeffSeq::evaluate(Complex z) const noexcept {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

CoeffSeq& CoeffSeq::operator+=(const CoeffSeq& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
        coeffs_[j] += other.coeffs_[j];
    }
    trim();
    return *this;
}

CoeffSeq& CoeffSeq::operator-=(const CoeffSeq& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
        coeffs_[j] -= other.coeffs_[j];
    }
    trim();
    return *this;
}

CoeffSeq& CoeffSeq::operator*=(Complex scale) {
    require_finite(scale, "scale factor");
    for (Complex& c : coeffs_) {
        c *= scale;
    }
    trim();
    return *this;
}

CoeffSeq operator*(const CoeffSeq& lhs, const CoeffSeq& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Complex> out(lhs.size() + rhs.size() - 1);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        for (std::size_t j = 0; j < rhs.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return CoeffSeq(std::move(out));
}

CoeffSeq CoeffSeq::shifted(std::size_t k) const {
    if (is_zero()) {
        return {};
    }
    std::vector<Complex> out(k + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return CoeffSeq(std::move(out));
}

CoeffSeq CoeffSeq::divide_linear(Complex root, Complex* remainder) const {
    if (coeffs_.empty()) {
        if (remainder != nullptr) {
            *remainder = {};
        }
        return {};
    }
    // Horner from the top: quotient coefficients are the partial sums.
    const std::size_t d = coeffs_.size() - 1;
    std::vector<Complex> quotient(d);
    Complex acc = coeffs_[d];
    for (std::size_t j = d; j-- > 0;) {
        quotient[j] = acc;
        acc = acc * root + coeffs_[j];
    }
    if (remainder != nullptr) {
        *remainder = acc;
    }
    return CoeffSeq(std::move(quotient));
}

CoeffSeq CoeffSeq::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Complex> out(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        out[j - 1] = static_cast<double>(j) * coeffs_[j];
    }
    return CoeffSeq(std::move(out));
}

AnalyticFn::AnalyticFn(CoeffSeq poly) : poly_(std::move(poly)) {}

AnalyticFn::AnalyticFn(CoeffSeq poly, std::optional<GeometricTail> tail)
    : poly_(std::move(poly)), tail_(tail) {
    if (tail_) {
        require_finite(tail_->a, "tail amplitude");
        require_finite(tail_->rho, "tail ratio");
        if (!(std::abs(tail_->rho) < 1.0)) {
            throw InvalidArgument("tail ratio must satisfy |rho| < 1");
        }
    }
}

AnalyticFn AnalyticFn::geometric(Complex a, Complex rho) {
    return AnalyticFn(CoeffSeq{}, GeometricTail{a, rho});
}

Complex AnalyticFn::coefficient(std::size_t k) const {
    Complex c = poly_[k];
    if (tail_) {
        c += tail_->a * std::pow(tail_->rho, static_cast<double>(k));
    }
    return c;
}

AnalyticFn& AnalyticFn::operator*=(Complex scale) {
    poly_ *= scale;
    if (tail_) {
        tail_->a *= scale;
    }
    return *this;
}

AnalyticFn operator+(const AnalyticFn& f, const AnalyticFn& g) {
    std::optional<GeometricTail> tail = f.tail_;
    if (g.tail_) {
        if (!tail) {
            tail = g.tail_;
        } else if (tail->rho == g.tail_->rho) {
            tail->a += g.tail_->a;
        } else {
            throw InvalidArgument("cannot add functions whose tails have different ratios");
        }
    }
    return AnalyticFn(f.poly_ + g.poly_, tail);
}

AnalyticFn operator-(AnalyticFn f, const CoeffSeq& p) {
    f.poly_ -= p;
    return f;
}

Complex eval_boundary(const AnalyticFn& f, const UnitPoint& zeta) {
    return eval_boundary(f, zeta.value());
}

Complex eval_boundary(const AnalyticFn& f, Complex zeta) {
    Complex value = f.poly().evaluate(zeta);
    if (const auto& tail = f.tail()) {
        value += tail->a / (1.0 - tail->rho * zeta);
    }
    return value;
}

Complex h2_inner(const CoeffSeq& u, const CoeffSeq& v) noexcept {
    Complex acc{};
    const std::size_t len = std::min(u.size(), v.size());
    for (std::size_t j = 0; j < len; ++j) {
        acc += u[j] * std::conj(v[j]);
    }
    return acc;
}

Complex h2_inner(const AnalyticFn& u, const AnalyticFn& v) {
    // Pair merged Taylor coefficients over the polynomial support, then sum
    // the remaining tail-tail products in closed form. Pairing the polynomial
    // and tail pieces separately would cancel catastrophically whenever u or
    // v is small but its pieces are not.
    const std::size_t support = std::max(u.poly().size(), v.poly().size());
    const GeometricTail zero{};
    const GeometricTail& tu = u.tail() ? *u.tail() : zero;
    const GeometricTail& tv = v.tail() ? *v.tail() : zero;

    Complex acc{};
    Complex pu = tu.a;
    Complex pv = tv.a;
    for (std::size_t k = 0; k < support; ++k) {
        acc += (u.poly()[k] + pu) * std::conj(v.poly()[k] + pv);
        pu *= tu.rho;
        pv *= tv.rho;
    }
    if (u.tail() && v.tail()) {
        acc += pu * std::conj(pv) / (1.0 - tu.rho * std::conj(tv.rho));
    }
    return acc;
}

Complex tail_weighted_sum(const AnalyticFn& f, const SymTables& tables, std::size_t j) {
    const CoeffSeq& poly = f.poly();
    Complex acc{};
    if (static_cast<long>(j) <= poly.degree()) {
        const std::size_t top = poly.size() - 1;
        if (top - j > tables.max_index()) {
            throw InvalidArgument("symmetric tables do not cover index " + std::to_string(top - j));
        }
        for (std::size_t k = j; k <= top; ++k) {
            acc += poly[k] * tables.S(k - j);
        }
    }
    if (const auto& tail = f.tail()) {
        acc += tail->a * std::pow(tail->rho, static_cast<double>(j)) *
               tables.generating_function(tail->rho);
    }
    return acc;
}

}  // namespace dmu
