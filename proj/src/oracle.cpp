#include "dmu/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "dmu/dirichlet.hpp"
#include "dmu/errors.hpp"
#include "dmu/projection.hpp"

namespace dmu {

template <typename Real>
std::vector<typename BasicHermitianMatrix<Real>::Scalar> BasicHermitianMatrix<Real>::solve(
    std::span<const Scalar> rhs, Real relative_pivot) const {
    if (rhs.size() != dim_) {
        throw InvalidArgument("right-hand side has wrong length");
    }
    Real max_diag = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        max_diag = std::max(max_diag, (*this)(i, i).real());
    }

    // Lower factor, row-major; only j <= i is touched.
    std::vector<Scalar> L(dim_ * dim_);
    auto l = [&](std::size_t i, std::size_t j) -> Scalar& { return L[i * dim_ + j]; };
    for (std::size_t j = 0; j < dim_; ++j) {
        Real pivot = (*this)(j, j).real();
        for (std::size_t k = 0; k < j; ++k) {
            pivot -= std::norm(l(j, k));
        }
        if (!(pivot > relative_pivot * max_diag)) {
            throw IllConditioned(j, pivot > 0 ? static_cast<double>(max_diag / pivot) : HUGE_VAL);
        }
        const Real d = std::sqrt(pivot);
        l(j, j) = d;
        for (std::size_t i = j + 1; i < dim_; ++i) {
            Scalar acc = (*this)(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                acc -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = acc / d;
        }
    }

    std::vector<Scalar> x(rhs.begin(), rhs.end());
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            x[i] -= l(i, k) * x[k];
        }
        x[i] /= l(i, i);
    }
    for (std::size_t i = dim_; i-- > 0;) {
        for (std::size_t k = i + 1; k < dim_; ++k) {
            x[i] -= std::conj(l(k, i)) * x[k];
        }
        x[i] /= l(i, i);
    }
    return x;
}

template class BasicHermitianMatrix<double>;
template class BasicHermitianMatrix<long double>;

namespace {

// Everything below runs in binary128 and deliberately avoids the
// double-precision helpers used by the closed form. The monomial Gram matrix
// loses roughly twice the digits the closed form does when atoms cluster.
__extension__ typedef __float128 Quad;

struct Wide {
    Quad re = 0;
    Quad im = 0;

    Wide() = default;
    Wide(Quad r, Quad i = 0) : re(r), im(i) {}  // NOLINT(google-explicit-constructor)
    explicit Wide(Complex z) : re(z.real()), im(z.imag()) {}

    Complex narrow() const { return {static_cast<double>(re), static_cast<double>(im)}; }
    Quad norm() const { return re * re + im * im; }
    Wide conj() const { return {re, -im}; }

    Wide& operator+=(Wide o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Wide& operator-=(Wide o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Wide operator+(Wide a, Wide b) { return a += b; }
    friend Wide operator-(Wide a, Wide b) { return a -= b; }
    friend Wide operator*(Wide a, Wide b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
    friend Wide operator/(Wide a, Quad d) { return {a.re / d, a.im / d}; }
    friend Wide operator/(Wide a, Wide b) { return (a * b.conj()) / b.norm(); }
};

struct WideFn {
    std::vector<Wide> poly;
    Wide tail_a{};
    Wide tail_rho{};
    bool has_tail = false;
};

WideFn widen(const AnalyticFn& f) {
    WideFn w;
    for (Complex c : f.poly().coeffs()) {
        w.poly.emplace_back(c);
    }
    if (const auto& t = f.tail()) {
        w.has_tail = true;
        w.tail_a = Wide(t->a);
        w.tail_rho = Wide(t->rho);
    }
    return w;
}

std::vector<Wide> wide_points(const AtomicMeasure& mu) {
    std::vector<Wide> out;
    for (Complex z : mu.points()) {
        out.emplace_back(z);
    }
    return out;
}

Wide boundary_value(const WideFn& f, Wide zeta) {
    Wide acc{};
    for (auto it = f.poly.rbegin(); it != f.poly.rend(); ++it) {
        acc = acc * zeta + *it;
    }
    if (f.has_tail) {
        acc += f.tail_a / (Wide(1) - f.tail_rho * zeta);
    }
    return acc;
}

// Product of the difference quotients at every atom.
WideFn wide_q(WideFn f, const std::vector<Wide>& points) {
    for (Wide zeta : points) {
        if (!f.poly.empty()) {
            std::vector<Wide> quotient(f.poly.size() - 1);
            Wide acc = f.poly.back();
            for (std::size_t j = quotient.size(); j-- > 0;) {
                quotient[j] = acc;
                acc = acc * zeta + f.poly[j];
            }
            f.poly = std::move(quotient);
        }
        if (f.has_tail) {
            f.tail_a = f.tail_a * f.tail_rho / (Wide(1) - f.tail_rho * zeta);
        }
    }
    return f;
}

// Row-major dim x dim.
struct WideMatrix {
    std::size_t dim;
    std::vector<Wide> data;

    explicit WideMatrix(std::size_t d) : dim(d), data(d * d) {}
    Wide& operator()(std::size_t i, std::size_t j) { return data[i * dim + j]; }
    Wide operator()(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
};

// A = L D L^*, L unit lower triangular; no square roots needed.
std::vector<Wide> ldl_solve(const WideMatrix& A, std::vector<Wide> x, Quad relative_pivot) {
    const std::size_t m = A.dim;
    Quad max_diag = 0;
    for (std::size_t i = 0; i < m; ++i) {
        max_diag = std::max(max_diag, A(i, i).re);
    }
    WideMatrix L(m);
    std::vector<Quad> D(m);
    for (std::size_t j = 0; j < m; ++j) {
        Quad pivot = A(j, j).re;
        for (std::size_t k = 0; k < j; ++k) {
            pivot -= L(j, k).norm() * D[k];
        }
        if (!(pivot > relative_pivot * max_diag)) {
            throw IllConditioned(j, pivot > 0 ? static_cast<double>(max_diag / pivot) : HUGE_VAL);
        }
        D[j] = pivot;
        L(j, j) = Wide(1);
        for (std::size_t i = j + 1; i < m; ++i) {
            Wide acc = A(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                acc -= L(i, k) * L(j, k).conj() * Wide(D[k]);
            }
            L(i, j) = acc / pivot;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            x[i] -= L(i, k) * x[k];
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = x[i] / D[i];
    }
    for (std::size_t i = m; i-- > 0;) {
        for (std::size_t k = i + 1; k < m; ++k) {
            x[i] -= L(k, i).conj() * x[k];
        }
    }
    return x;
}

WideMatrix wide_gram(const std::vector<Wide>& points, std::size_t n, std::vector<WideFn>& q_images) {
    const std::size_t dim = n + 1;
    // powers[k][a] = zeta_k^a
    std::vector<std::vector<Wide>> powers(points.size(), std::vector<Wide>(dim));
    for (std::size_t k = 0; k < points.size(); ++k) {
        powers[k][0] = Wide(1);
        for (std::size_t a = 1; a < dim; ++a) {
            powers[k][a] = powers[k][a - 1] * points[k];
        }
    }
    q_images.clear();
    for (std::size_t a = 0; a < dim; ++a) {
        WideFn mono;
        mono.poly.assign(a + 1, Wide{});
        mono.poly[a] = Wide(1);
        q_images.push_back(wide_q(std::move(mono), points));
    }
    WideMatrix G(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            Wide acc{};
            for (std::size_t k = 0; k < points.size(); ++k) {
                acc += powers[k][a] * powers[k][b].conj();
            }
            const auto& u = q_images[a].poly;
            const auto& v = q_images[b].poly;
            for (std::size_t j = 0; j < std::min(u.size(), v.size()); ++j) {
                acc += u[j] * v[j].conj();
            }
            G(a, b) = acc;
        }
    }
    return G;
}

}  // namespace

HermitianMatrix gram_matrix(const AtomicMeasure& mu, std::size_t n) {
    std::vector<WideFn> q_images;
    const WideMatrix wide = wide_gram(wide_points(mu), n, q_images);
    HermitianMatrix G(n + 1);
    for (std::size_t a = 0; a <= n; ++a) {
        for (std::size_t b = 0; b <= n; ++b) {
            G(a, b) = wide(a, b).narrow();
        }
    }
    return G;
}

CoeffSeq oracle_project(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n) {
    const std::vector<Wide> points = wide_points(mu);
    std::vector<WideFn> q_images;
    const WideMatrix G = wide_gram(points, n, q_images);

    const WideFn wf = widen(f);
    const WideFn qf = wide_q(wf, points);
    std::vector<Wide> boundary;
    for (Wide zeta : points) {
        boundary.push_back(boundary_value(wf, zeta));
    }
    // Taylor coefficients of Q f, up to the longest monomial image.
    std::vector<Wide> qf_coeffs(n + 1);
    Wide rho_power(1);
    for (std::size_t j = 0; j < qf_coeffs.size(); ++j) {
        qf_coeffs[j] = j < qf.poly.size() ? qf.poly[j] : Wide{};
        if (qf.has_tail) {
            qf_coeffs[j] += qf.tail_a * rho_power;
            rho_power = rho_power * qf.tail_rho;
        }
    }

    // Normal equations: sum_b c_b <z^b, z^a> = <f, z^a>.
    WideMatrix A(n + 1);
    std::vector<Wide> rhs(n + 1);
    std::vector<Wide> powers(points.size(), Wide(1));
    for (std::size_t a = 0; a <= n; ++a) {
        for (std::size_t b = 0; b <= n; ++b) {
            A(a, b) = G(b, a);
        }
        Wide acc{};
        for (std::size_t k = 0; k < points.size(); ++k) {
            acc += boundary[k] * powers[k].conj();
            powers[k] = powers[k] * points[k];
        }
        const auto& image = q_images[a].poly;
        for (std::size_t j = 0; j < image.size(); ++j) {
            acc += qf_coeffs[j] * image[j].conj();
        }
        rhs[a] = acc;
    }
    const std::vector<Wide> c = ldl_solve(A, std::move(rhs), Quad(1e-28));
    std::vector<Complex> out;
    out.reserve(c.size());
    for (Wide z : c) {
        out.push_back(z.narrow());
    }
    return CoeffSeq(std::move(out));
}

double oracle_distance(const AnalyticFn& f, const AtomicMeasure& mu, std::size_t n) {
    return dmu_norm(f - oracle_project(f, mu, n), mu);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index) {
    // splitmix64 of (seed, index)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ValidationTrial make_trial(std::uint64_t seed, std::size_t s_max, std::size_t n_max) {
    if (s_max < 1) {
        throw InvalidArgument("s_max must be at least 1");
    }
    if (n_max + 1 < s_max) {
        throw InvalidArgument("n_max must be at least s_max - 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    const std::size_t s = std::uniform_int_distribution<std::size_t>(1, s_max)(rng);
    std::vector<Complex> points;
    while (points.size() < s) {
        const Complex z = std::polar(1.0, angle(rng));
        const bool clash = std::any_of(points.begin(), points.end(), [&](Complex w) {
            return std::abs(w - z) <= AtomicMeasure::kDistinctness;
        });
        if (!clash) {
            points.push_back(z);
        }
    }

    const std::size_t degree = std::uniform_int_distribution<std::size_t>(0, n_max + s + 3)(rng);
    std::vector<Complex> coeffs(degree + 1);
    for (Complex& c : coeffs) {
        c = Complex(unit(rng), unit(rng));
    }
    std::optional<GeometricTail> tail;
    if (unit(rng) < 0.5) {
        const Complex a(unit(rng), unit(rng));
        const Complex rho = std::polar(0.8 * unit(rng), angle(rng));
        tail = GeometricTail{a, rho};
    }
    const std::size_t n = std::uniform_int_distribution<std::size_t>(s - 1, n_max)(rng);
    return {AtomicMeasure::from_points(points), AnalyticFn(CoeffSeq(std::move(coeffs)), tail), n};
}

namespace {

struct TrialOutcome {
    double coeff_error = 0.0;
    double distance_error = 0.0;
    double residual_norm_error = 0.0;
    double fast_path_error = 0.0;
    bool fast_path_checked = false;
    std::string error;
};

TrialOutcome run_trial(const ValidationTrial& trial) {
    TrialOutcome out;
    try {
        const ProjectionResult closed = project(trial.f, trial.mu, trial.n);
        const CoeffSeq reference = oracle_project(trial.f, trial.mu, trial.n);
        for (std::size_t j = 0; j <= trial.n; ++j) {
            out.coeff_error = std::max(out.coeff_error, std::abs(closed.monomial[j] - reference[j]));
        }
        const double reference_distance = dmu_norm(trial.f - reference, trial.mu);
        out.distance_error = std::abs(closed.distance - reference_distance);
        out.residual_norm_error =
            std::abs(closed.distance - dmu_norm(trial.f - closed.monomial, trial.mu));

        const CoeffSeq fast = fast_monomial_coefficients_unchecked(trial.f, trial.mu, trial.n);
        for (std::size_t j = 0; j <= trial.n; ++j) {
            out.fast_path_error = std::max(out.fast_path_error, std::abs(fast[j] - closed.monomial[j]));
        }
        out.fast_path_checked = true;
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

}  // namespace

ValidationReport cross_validate(std::uint64_t seed, std::size_t trials, std::size_t s_max,
                                std::size_t n_max, double tol) {
    if (trials < 1) {
        throw InvalidArgument("cross_validate needs at least one trial");
    }
    if (!(tol >= 0.0)) {
        throw InvalidArgument("tolerance must be non-negative");
    }
    // Validates s_max/n_max before any thread starts.
    (void)make_trial(trial_seed(seed, 0), s_max, n_max);

    std::vector<TrialOutcome> outcomes(trials);
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::min<std::size_t>(trials, 8));
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < trials; i += workers) {
                    outcomes[i] = run_trial(make_trial(trial_seed(seed, i), s_max, n_max));
                }
            });
        }
    }

    ValidationReport report;
    report.trials = trials;
    report.tolerance = tol;
    for (std::size_t i = 0; i < trials; ++i) {
        const TrialOutcome& o = outcomes[i];
        report.max_coeff_error = std::max(report.max_coeff_error, o.coeff_error);
        report.max_distance_error = std::max(report.max_distance_error, o.distance_error);
        report.max_residual_norm_error = std::max(report.max_residual_norm_error, o.residual_norm_error);
        if (o.fast_path_checked) {
            report.max_fast_path_error = std::max(report.max_fast_path_error, o.fast_path_error);
            ++report.fast_path_trials;
        }

        std::string reason;
        if (!o.error.empty()) {
            reason = o.error;
        } else if (o.coeff_error > tol) {
            reason = "coefficient mismatch";
        } else if (o.distance_error > tol) {
            reason = "distance mismatch";
        } else if (o.fast_path_error > kFastPathTolerance) {
            reason = "fast monomial formula mismatch";
        }
        if (!reason.empty()) {
            const std::uint64_t ts = trial_seed(seed, i);
            ValidationTrial trial = make_trial(ts, s_max, n_max);
            report.failures.push_back({i, ts, trial.mu.points(), std::move(trial.f), trial.n,
                                       o.coeff_error, o.distance_error, std::move(reason)});
        }
    }
    return report;
}

}  // namespace dmu
