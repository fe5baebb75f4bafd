#include <doctest.h>

#include "dmu/errors.hpp"
#include "dmu/series.hpp"
#include "dmu/sympoly.hpp"
#include "test_support.hpp"

using namespace dmu;
using dmu::testing::Gen;

namespace {
const Complex I(0.0, 1.0);
}

TEST_CASE("CoeffSeq canonicalizes trailing zeros") {
    const CoeffSeq p{1.0, 2.0, 0.0, 0.0};
    CHECK(p.degree() == 1);
    CHECK(CoeffSeq{0.0, 0.0}.is_zero());
    CHECK(CoeffSeq{}.degree() == -1);
    CHECK((p - p).is_zero());
    CHECK_THROWS_AS(CoeffSeq({Complex(NAN, 0.0)}), InvalidArgument);
}

TEST_CASE("synthetic division returns quotient and remainder") {
    // z^3 - 2z + 5 = (z - 2)(z^2 + 2z + 2) + 9
    const CoeffSeq p{5.0, -2.0, 0.0, 1.0};
    Complex rem;
    const CoeffSeq q = p.divide_linear(2.0, &rem);
    CHECK(q == CoeffSeq{2.0, 2.0, 1.0});
    CHECK(rem == Complex(9.0));
    CHECK(rem == p.evaluate(2.0));
}

TEST_CASE("eval_boundary") {
    SUBCASE("z^2 at i is -1") {
        const AnalyticFn f(CoeffSeq::monomial(2));
        CHECK(std::abs(eval_boundary(f, UnitPoint(I)) - Complex(-1.0)) < 1e-15);
    }
    SUBCASE("zero function") {
        Gen gen(3);
        for (int t = 0; t < 5; ++t) {
            CHECK(eval_boundary(AnalyticFn{}, gen.unimodular()) == Complex{});
        }
    }
    SUBCASE("geometric tail a=1, rho=1/2 at 1 is 2") {
        CHECK(std::abs(eval_boundary(AnalyticFn::geometric(1.0, 0.5), UnitPoint(1.0)) - 2.0) < 1e-15);
    }
    SUBCASE("polynomial with zero tail agrees with bare polynomial") {
        Gen gen(11);
        for (int t = 0; t < 20; ++t) {
            const CoeffSeq p = gen.polynomial(gen.index(0, 12));
            const Complex zeta = gen.unimodular();
            const AnalyticFn bare(p);
            const AnalyticFn padded(p, GeometricTail{0.0, gen.uniform(-0.9, 0.9)});
            CHECK(std::abs(eval_boundary(bare, zeta) - eval_boundary(padded, zeta)) < 1e-14);
        }
    }
}

TEST_CASE("h2_inner on coefficient sequences") {
    CHECK(h2_inner(CoeffSeq{1.0, 1.0}, CoeffSeq{1.0, 1.0}) == Complex(2.0));
    CHECK(h2_inner(CoeffSeq{1.0, 0.0}, CoeffSeq{0.0, 1.0}) == Complex{});
    CHECK(h2_inner(CoeffSeq{I}, CoeffSeq{1.0}) == I);

    Gen gen(5);
    for (int t = 0; t < 20; ++t) {
        const CoeffSeq u = gen.polynomial(gen.index(0, 9));
        const CoeffSeq v = gen.polynomial(gen.index(0, 9));
        CHECK(std::abs(h2_inner(u, v) - std::conj(h2_inner(v, u))) < 1e-14);
    }
}

TEST_CASE("h2_inner with tails matches a long truncated sum") {
    Gen gen(17);
    for (int t = 0; t < 20; ++t) {
        const AnalyticFn u = gen.function(gen.index(0, 8), true);
        const AnalyticFn v = gen.function(gen.index(0, 8), t % 3 != 0);
        const auto cu = dmu::testing::taylor(u, 400);
        const auto cv = dmu::testing::taylor(v, 400);
        Complex expected{};
        for (std::size_t k = 0; k < 400; ++k) {
            expected += cu[k] * std::conj(cv[k]);
        }
        CHECK(std::abs(h2_inner(u, v) - expected) < 1e-12);
        CHECK(std::abs(h2_inner(u, v) - std::conj(h2_inner(v, u))) < 1e-14);
    }
}

TEST_CASE("AnalyticFn rejects |rho| >= 1") {
    CHECK_THROWS_AS(AnalyticFn::geometric(1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(AnalyticFn::geometric(1.0, Complex(0.8, 0.7)), InvalidArgument);
    CHECK_NOTHROW(AnalyticFn::geometric(1.0, 0.999));
}

TEST_CASE("tail_weighted_sum examples") {
    const std::vector<Complex> pm{1.0, -1.0};
    const AnalyticFn cube(CoeffSeq::monomial(3));
    const SymTables tables(pm, 3);
    CHECK(std::abs(tail_weighted_sum(cube, tables, 3) - 1.0) < 1e-15);
    CHECK(std::abs(tail_weighted_sum(cube, tables, 2)) < 1e-15);
    CHECK(tail_weighted_sum(cube, tables, 7) == Complex{});

    // One atom at 1, tail (1, 1/2): closed form 2 against the truncated sum.
    const std::vector<Complex> one{1.0};
    const SymTables t1(one, 60);
    const AnalyticFn geo = AnalyticFn::geometric(1.0, 0.5);
    Complex truncated{};
    for (std::size_t k = 0; k <= 60; ++k) {
        truncated += std::pow(0.5, static_cast<double>(k)) * t1.S(k);
    }
    CHECK(std::abs(tail_weighted_sum(geo, t1, 0) - 2.0) < 1e-15);
    CHECK(std::abs(tail_weighted_sum(geo, t1, 0) - truncated) < 1e-12);
}

TEST_CASE("tail_weighted_sum closed form matches brute-force truncation") {
    Gen gen(23);
    for (int t = 0; t < 40; ++t) {
        const std::size_t s = gen.index(1, 4);
        const auto pts = gen.points(s);
        const double r = gen.uniform(0.0, 0.9);
        const AnalyticFn f = gen.function(gen.index(0, 6), false) +
                             AnalyticFn::geometric(gen.complex_in_square(), std::polar(r, gen.uniform(0.0, 6.28)));
        // Stop once |rho|^k k^{s-1} < 1e-14.
        std::size_t K = 1;
        while (std::pow(r, static_cast<double>(K)) * std::pow(static_cast<double>(K), static_cast<double>(s - 1)) >=
               1e-14) {
            ++K;
        }
        const SymTables tables(pts, K + 10);
        const std::size_t j = gen.index(0, 5);
        Complex brute{};
        for (std::size_t k = j; k <= K + j; ++k) {
            brute += f.coefficient(k) * tables.S(k - j);
        }
        CHECK(std::abs(tail_weighted_sum(f, tables, j) - brute) < 1e-10);
    }
}

TEST_CASE("tail_weighted_sum is linear") {
    Gen gen(29);
    for (int t = 0; t < 30; ++t) {
        const auto pts = gen.points(gen.index(1, 4));
        const Complex rho = std::polar(gen.uniform(0.0, 0.8), gen.uniform(0.0, 6.28));
        const AnalyticFn f(gen.polynomial(gen.index(0, 10)), GeometricTail{gen.complex_in_square(), rho});
        const AnalyticFn g(gen.polynomial(gen.index(0, 10)), GeometricTail{gen.complex_in_square(), rho});
        const Complex alpha = gen.complex_in_square();
        const Complex beta = gen.complex_in_square();
        const SymTables tables(pts, 12);
        const std::size_t j = gen.index(0, 11);
        const Complex lhs = tail_weighted_sum(alpha * f + beta * g, tables, j);
        const Complex rhs = alpha * tail_weighted_sum(f, tables, j) + beta * tail_weighted_sum(g, tables, j);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("tail_weighted_sum rejects uncovered tables") {
    const std::vector<Complex> one{1.0};
    const SymTables tables(one, 2);
    CHECK_THROWS_AS(tail_weighted_sum(AnalyticFn(CoeffSeq::monomial(5)), tables, 0), InvalidArgument);
}
