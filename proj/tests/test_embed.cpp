#include "rig/embed.hpp"
#include "rig/rigidity.hpp"

#include "support/random_gen.hpp"

#include <doctest.h>

using namespace rig;
using rigtest::Rng;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("catalog maps validate and have the advertised shapes") {
    for (std::size_t d = 1; d <= 4; ++d) {
        auto f = linear_map(d);
        CHECK(f.validate());
        CHECK(f.degree == 1);
        CHECK(f.D == d);
    }
    auto v = veronese(2);
    CHECK(v.validate());
    CHECK(v.D + 1 == 6);  // all degree-2 monomials in 3 variables

    for (std::size_t p = 2; p <= 3; ++p)
        for (std::size_t n = p; n <= 4; ++n) {
            auto f = plucker(n, p);
            CHECK(f.validate());
            CHECK(f.d == n * p);
            CHECK(f.D + 1 == binom(n + p, n));
            CHECK(f.degree == (int)n);
        }

    for (std::size_t n = 1; n <= 4; ++n) {
        auto w = whitney_hat(n);
        CHECK(w.validate());
        CHECK(w.d == n + 1);
        CHECK(w.D == 2 * n + 1);
        CHECK(w.degree == 2);
        auto b = whitney_ball(n);
        CHECK(b.validate());
        CHECK(b.degree == 2);
    }

    CHECK(catalog("plucker", {2, 2}).name == plucker(2, 2).name);
    CHECK_THROWS_AS(catalog("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(catalog("plucker", {1}), std::invalid_argument);
}

TEST_CASE("whitney_hat components match the closed form") {
    auto f = whitney_hat(2);  // variables xi^0..xi^3
    std::size_t nv = 4;
    CHECK(f.components[0].coeff(Monomial::var(nv, 0) * Monomial::var(nv, 3)) ==
          GaussianRational(2));
    // mu^1 = xi^1 (i xi^0 + xi^3)
    CHECK(f.components[1].coeff(Monomial::var(nv, 0) * Monomial::var(nv, 1)) ==
          GaussianRational::unit_i());
    CHECK(f.components[1].coeff(Monomial::var(nv, 1) * Monomial::var(nv, 3)) ==
          GaussianRational(1));
    // mu^{n+1} conjugate pattern
    CHECK(f.components[3].coeff(Monomial::var(nv, 0) * Monomial::var(nv, 1)) ==
          -GaussianRational::unit_i());
    // last component xi3^2 - xi0^2
    CHECK(f.components[5].coeff(Monomial::var(nv, 3) * Monomial::var(nv, 3)) ==
          GaussianRational(1));
    CHECK(f.components[5].coeff(Monomial::var(nv, 0) * Monomial::var(nv, 0)) ==
          GaussianRational(-1));
}

TEST_CASE("plucker minors satisfy the quadratic relation at random points") {
    auto f = plucker(2, 2);  // target coordinates p01,p02,p03,p12,p13,p23
    Rng rng(307);
    for (int t = 0; t < 25; ++t) {
        std::vector<GaussianRational> pt(5);
        pt[0] = GaussianRational(1);
        for (int i = 1; i < 5; ++i) pt[i] = rng.gaussian();
        auto y = evaluate(f, pt);
        REQUIRE(y.size() == 6);
        CHECK((y[0] * y[5] - y[1] * y[4] + y[2] * y[3]).is_zero());
    }
}

TEST_CASE("jets recover derivatives exactly") {
    SUBCASE("jet order is clamped to the map degree; linear maps stop at 1") {
        auto f = linear_map(3);
        auto j = jet(f, base_point(f), 3);
        CHECK(j.order == 1);
        for (std::size_t a = 0; a < f.D + 1; ++a) REQUIRE(j.taylor[a].size() == 2);
        // d/ds_t of x_{t+1} is the unit target direction t+1.
        std::vector<int> alpha{1, 0, 0};
        auto d = j.derivative(alpha);
        CHECK(d[1] == GaussianRational(1));
        CHECK(d[0].is_zero());
        CHECK(d[2].is_zero());
    }
    SUBCASE("ball-map derivatives at the center") {
        auto f = whitney_ball(2);  // (zeta^2, z0^2, z0 z1, z0 z2, zeta z1, zeta z2)
        auto j = jet(f, base_point(f), 2);
        // The z0 direction collapses at the center, the z1 direction hits
        // the zeta z1 component.
        std::vector<int> a0{1, 0, 0}, a1{0, 1, 0};
        for (const auto& c : j.derivative(a0)) CHECK(c.is_zero());
        CHECK(j.derivative(a1)[4] == GaussianRational(1));
    }
    SUBCASE("points outside the good locus are rejected") {
        auto f = plucker(2, 2);
        std::vector<GaussianRational> zero(f.d + 1);
        CHECK_THROWS_AS(jet(f, zero, 2), std::invalid_argument);
    }
}

TEST_CASE("osculating flags and type numbers") {
    SUBCASE("linear map has height 1 and no type numbers") {
        auto f = linear_map(4);
        auto flag = osculating_flag(f, base_point(f));
        CHECK(flag.immersion);
        CHECK(flag.height == 1);
        CHECK(flag.type_numbers.empty());
        CHECK(flag.dims.back() == 5);
    }
    SUBCASE("plucker(n,2) has height 2 and r_2 = n(n-1)/2") {
        for (std::size_t n = 2; n <= 4; ++n) {
            auto f = plucker(n, 2);
            auto flag = osculating_flag(f, base_point(f));
            CHECK(flag.immersion);
            CHECK(flag.height == 2);
            REQUIRE(flag.type_numbers.size() == 1);
            CHECK(flag.type_numbers[0] == n * (n - 1) / 2);
        }
    }
    SUBCASE("flags fill the target for the minor maps") {
        // 1 + n + sum r_l = D + 1
        struct Case {
            std::size_t n, p;
        } cases[] = {{2, 2}, {3, 2}, {3, 3}};
        for (auto c : cases) {
            auto f = plucker(c.n, c.p);
            auto flag = osculating_flag(f, base_point(f));
            CHECK(flag.dims.back() == f.D + 1);
        }
    }
    SUBCASE("type profiles are constant across random points") {
        for (const auto* name : {"plucker", "whitney_hat"}) {
            PolyMap f = name == std::string("plucker") ? plucker(3, 2) : whitney_hat(3);
            auto rep = constant_type_check(f, 2026);
            CHECK(rep.constant_type);
            CHECK(rep.samples.size() == 5);
            for (const auto& s : rep.samples) CHECK(s == rep.profile);
        }
    }
}

TEST_CASE("fundamental forms of the minor maps match the closed forms") {
    SUBCASE("second forms, p = 2") {
        for (std::size_t n = 2; n <= 3; ++n) {
            auto tower = fundamental_forms(plucker(n, 2), base_point(plucker(n, 2)));
            REQUIRE(tower.levels.size() == 1);
            const auto& lvl = tower.levels[0];
            CHECK(lvl.l == 2);
            CHECK(lvl.form.r == n * (n - 1) / 2);
            CHECK(span_equal({lvl.form}, {plucker_reference_quadrics(n, 2)}));
        }
    }
    SUBCASE("second and third forms, p = 3") {
        auto f = plucker(3, 3);
        auto tower = fundamental_forms(f, base_point(f));
        REQUIRE(tower.levels.size() == 2);
        CHECK(span_equal({tower.levels[0].form}, {plucker_reference_quadrics(3, 3)}));
        CHECK(span_equal({tower.levels[1].form}, {plucker_reference_cubics(3)}));
        CHECK(tower.levels[1].form.r == 1);
    }
    SUBCASE("the tower is rigid level by level") {
        auto f = plucker(2, 2);
        auto tower = fundamental_forms(f, base_point(f));
        const auto& lvl = tower.levels[0];
        auto verdict = bochner_rigid(lvl.form, lvl.grams);
        CHECK(verdict.status == Status::Rigid);
    }
    SUBCASE("non-immersion points are rejected") {
        auto f = veronese(1);  // (x^2, xy, y^2), fine; corrupt a point instead
        std::vector<GaussianRational> zero(f.d + 1);
        CHECK_THROWS_AS(fundamental_forms(f, zero), std::invalid_argument);
    }
}

TEST_CASE("span_equal distinguishes spans exactly") {
    auto a = plucker_reference_quadrics(3, 2);
    CHECK(span_equal({a}, {a * GaussianRational(2, 1)}));
    CHECK(span_equal({a}, {a * GaussianRational::unit_i()}));
    VectorForm b = a;
    b.components[0] += b.components[1];  // change of frame keeps the span
    CHECK(span_equal({a}, {b}));
    VectorForm c = a;
    c.components[0] = HermitianPoly(a.n, a.k, 0);
    CHECK_FALSE(span_equal({a}, {c}));
}

TEST_CASE("degree-2 sphere map pullback identity") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto res = whitney_pullback_check(n);
        CHECK(res.ok);
        // factor = 2 (xi0 conj xi0 + xi_{n+1} conj xi_{n+1})
        std::size_t nv = n + 2;
        CHECK(res.factor.coeff(Monomial::var(nv, 0) * Monomial::cvar(nv, 0)) ==
              GaussianRational(2));
        CHECK(res.factor.coeff(Monomial::var(nv, n + 1) * Monomial::cvar(nv, n + 1)) ==
              GaussianRational(2));

        auto bad = whitney_hat(n);
        bad.components[0] = HermitianPoly::monomial(
            n + 2, Monomial::var(n + 2, 0) * Monomial::var(n + 2, n + 1), GaussianRational(3));
        CHECK_FALSE(whitney_pullback_check_map(n, bad).ok);
    }
}

TEST_CASE("fullness counts for the minor embeddings") {
    // n + sum r_l accounts for the whole projective target dimension.
    struct Case {
        std::size_t n, p, expect;
    } cases[] = {{2, 2, 5}, {3, 2, 9}, {3, 3, 19}};
    for (auto c : cases) {
        auto f = plucker(c.n, c.p);
        auto flag = osculating_flag(f, base_point(f));
        std::size_t total = flag.dims[1] - 1;
        for (auto r : flag.type_numbers) total += r;
        CHECK(total == c.expect);
        CHECK(total == f.D);
    }
}
