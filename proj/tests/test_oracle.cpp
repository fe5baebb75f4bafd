#include <doctest.h>

#include <algorithm>

#include "dmu/dirichlet.hpp"
#include "dmu/errors.hpp"
#include "dmu/oracle.hpp"
#include "dmu/projection.hpp"
#include "test_support.hpp"

using namespace dmu;
using dmu::testing::Gen;
using dmu::testing::max_abs_diff;

namespace {

const std::vector<Complex> kPlusMinus{1.0, -1.0};

AtomicMeasure plus_minus() { return AtomicMeasure::from_points(kPlusMinus); }

}  // namespace

TEST_CASE("Cholesky solve") {
    HermitianMatrix A(2);
    A(0, 0) = 4.0;
    A(0, 1) = Complex(1.0, -1.0);
    A(1, 0) = Complex(1.0, 1.0);
    A(1, 1) = 3.0;
    const std::vector<Complex> x{Complex(1.0, 2.0), Complex(-0.5, 0.25)};
    std::vector<Complex> rhs(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            rhs[i] += A(i, j) * x[j];
        }
    }
    CHECK(max_abs_diff(A.solve(rhs), x) < 1e-15);

    HermitianMatrix singular(2);
    singular(0, 0) = singular(0, 1) = singular(1, 0) = singular(1, 1) = 1.0;
    CHECK_THROWS_AS(singular.solve(rhs), IllConditioned);
}

TEST_CASE("gram_matrix") {
    SUBCASE("atoms (1, -1), n = 2") {
        const HermitianMatrix G = gram_matrix(plus_minus(), 2);
        const double expected[3][3] = {{2, 0, 2}, {0, 2, 0}, {2, 0, 3}};
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                CHECK(std::abs(G(a, b) - expected[a][b]) < 1e-15);
            }
        }
    }
    Gen gen(201);
    SUBCASE("G[0][0] = s and Hermitian") {
        for (int t = 0; t < 20; ++t) {
            const std::size_t s = gen.index(1, 5);
            const AtomicMeasure mu = gen.measure(s, 1e-3);
            const HermitianMatrix G = gram_matrix(mu, gen.index(0, 25));
            CHECK(std::abs(G(0, 0) - static_cast<double>(s)) < 1e-15);
            CHECK(G.max_asymmetry() < 1e-12);
        }
    }
    SUBCASE("entries are D_mu inner products of monomials") {
        const AtomicMeasure mu = gen.measure(3);
        const HermitianMatrix G = gram_matrix(mu, 8);
        for (std::size_t a = 0; a <= 8; ++a) {
            for (std::size_t b = 0; b <= 8; ++b) {
                const Complex direct =
                    dmu_inner(AnalyticFn(CoeffSeq::monomial(a)), AnalyticFn(CoeffSeq::monomial(b)), mu);
                CHECK(std::abs(G(a, b) - direct) < 1e-12 * std::max(1.0, std::abs(direct)));
            }
        }
    }
    SUBCASE("positive definite for n <= 30") {
        for (std::size_t s = 1; s <= 4; ++s) {
            const AtomicMeasure mu = gen.measure(s, 0.3);
            const HermitianMatrix G = gram_matrix(mu, 30);
            std::vector<Complex> rhs(31, 1.0);
            CHECK_NOTHROW(BasicHermitianMatrix<double>(G).solve(rhs, 0.0));
        }
    }
}

TEST_CASE("oracle_project and oracle_distance") {
    SUBCASE("z^3 over (1, -1), n = 2 gives z at distance 1") {
        const AnalyticFn f(CoeffSeq::monomial(3));
        CHECK(max_abs_diff(oracle_project(f, plus_minus(), 2), CoeffSeq{0.0, 1.0}) < 1e-14);
        CHECK(oracle_distance(f, plus_minus(), 2) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("z^3 over delta_1, n = 2 gives z^2") {
        const std::vector<Complex> one{1.0};
        CHECK(max_abs_diff(oracle_project(AnalyticFn(CoeffSeq::monomial(3)), AtomicMeasure::from_points(one), 2),
                           CoeffSeq::monomial(2)) < 1e-13);
    }
    Gen gen(211);
    SUBCASE("polynomials of degree <= n are reproduced") {
        for (int t = 0; t < 10; ++t) {
            const AtomicMeasure mu = gen.measure(gen.index(1, 4));
            const std::size_t n = gen.index(0, 12);
            const CoeffSeq p = gen.polynomial(gen.index(0, n));
            CHECK(max_abs_diff(oracle_project(AnalyticFn(p), mu, n), p) < 1e-9);
            CHECK(oracle_distance(AnalyticFn(p), mu, n) < 1e-10);
        }
    }
    SUBCASE("agrees with the closed form") {
        for (int t = 0; t < 30; ++t) {
            const std::size_t s = gen.index(1, 4);
            const AtomicMeasure mu = gen.measure(s);
            const std::size_t n = gen.index(s - 1, 15);
            const AnalyticFn f = gen.function(gen.index(0, 20), t % 2 == 0);
            CHECK(max_abs_diff(oracle_project(f, mu, n), project(f, mu, n).monomial) < 1e-8);
            CHECK(std::abs(oracle_distance(f, mu, n) - distance(f, mu, n)) < 1e-8);
        }
    }
    SUBCASE("invariant under atom permutation and weight rescaling") {
        for (int t = 0; t < 10; ++t) {
            auto pts = gen.points(gen.index(2, 4));
            const AnalyticFn f = gen.function(14, true);
            const std::size_t n = gen.index(pts.size() - 1, 12);
            const CoeffSeq base = oracle_project(f, AtomicMeasure::from_points(pts), n);
            std::shuffle(pts.begin(), pts.end(), gen.engine());
            std::vector<Atom> atoms;
            for (Complex z : pts) {
                atoms.push_back({UnitPoint(z), gen.uniform(0.1, 10.0)});
            }
            CHECK(max_abs_diff(oracle_project(f, AtomicMeasure(atoms), n), base) < 1e-9);
        }
    }
    SUBCASE("below s - 1 the oracle still gives a best approximation") {
        for (int t = 0; t < 10; ++t) {
            const AtomicMeasure mu = gen.measure(4);
            const std::size_t n = gen.index(0, 2);
            const AnalyticFn f = gen.function(10, t % 2 == 0);
            const CoeffSeq c = oracle_project(f, mu, n);
            CHECK(c.degree() <= static_cast<long>(n));
            const double best = dmu_norm(f - c, mu);
            CHECK(std::abs(oracle_distance(f, mu, n) - best) < 1e-12);
            for (int k = 0; k < 20; ++k) {
                const CoeffSeq competitor = c + gen.polynomial(n) * Complex(gen.uniform(0.0, 0.2));
                CHECK(dmu_norm(f - competitor, mu) >= best - 1e-10);
            }
        }
    }
}

TEST_CASE("clustered atoms") {
    // Two atoms 1e-3 apart.
    Gen gen(223);
    for (int t = 0; t < 10; ++t) {
        const double theta = gen.uniform(0.0, 6.28);
        const double gap = 2.0 * std::asin(0.5e-3);
        std::vector<Complex> pts{std::polar(1.0, theta), std::polar(1.0, theta + gap)};
        if (t % 2 == 1) {
            pts.push_back(std::polar(1.0, theta + 2.5));
        }
        const AtomicMeasure mu = AtomicMeasure::from_points(pts);
        const std::size_t n = gen.index(mu.size() - 1, 15);
        const AnalyticFn f = gen.function(gen.index(0, 20), t % 3 == 0);
        const ProjectionResult r = project(f, mu, n);
        CHECK(max_abs_diff(oracle_project(f, mu, n), r.monomial) < 1e-6);
        CHECK(std::abs(oracle_distance(f, mu, n) - r.distance) < 1e-6);
    }
}

TEST_CASE("cross_validate") {
    SUBCASE("deterministic") {
        const ValidationReport a = cross_validate(7, 40, 4, 12, 1e-8);
        const ValidationReport b = cross_validate(7, 40, 4, 12, 1e-8);
        CHECK(a.max_coeff_error == b.max_coeff_error);
        CHECK(a.max_distance_error == b.max_distance_error);
        CHECK(a.failures.size() == b.failures.size());
        CHECK(a.failures.empty());
        CHECK(a.fast_path_trials == 40);
    }
    SUBCASE("zero tolerance produces failures with reproducible seeds") {
        const ValidationReport r = cross_validate(3, 30, 3, 10, 0.0);
        REQUIRE(!r.failures.empty());
        const ValidationFailure& f = r.failures.front();
        const ValidationTrial trial = make_trial(f.seed, 3, 10);
        CHECK(trial.n == f.n);
        CHECK(trial.mu.points() == f.points);
        CHECK(f.seed == trial_seed(3, f.trial));
    }
    SUBCASE("bad arguments") {
        CHECK_THROWS_AS(cross_validate(1, 0, 4, 15, 1e-8), InvalidArgument);
        CHECK_THROWS_AS(cross_validate(1, 10, 0, 15, 1e-8), InvalidArgument);
        CHECK_THROWS_AS(cross_validate(1, 10, 4, 15, -1.0), InvalidArgument);
    }
    SUBCASE("trials respect the documented ranges") {
        for (std::size_t i = 0; i < 200; ++i) {
            const ValidationTrial t = make_trial(trial_seed(99, i), 4, 15);
            const std::size_t s = t.mu.size();
            CHECK(s >= 1);
            CHECK(s <= 4);
            CHECK(t.n + 1 >= s);
            CHECK(t.n <= 15);
            CHECK(t.f.poly().degree() <= static_cast<long>(15 + s + 3));
            if (t.f.tail()) {
                CHECK(std::abs(t.f.tail()->rho) <= 0.8);
            }
        }
    }
}
