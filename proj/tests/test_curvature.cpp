#include "rig/curvature.hpp"

#include "support/random_gen.hpp"

#include <doctest.h>

using namespace rig;
using rigtest::Rng;

namespace {

SymForm diag_form(std::initializer_list<int> entries) {
    SymForm f(entries.size(), 1);
    std::size_t i = 0;
    for (int v : entries) f.components[0](i, i) = Rational(v), ++i;
    return f;
}

SymForm identity_form(std::size_t n) {
    SymForm f(n, 1);
    for (std::size_t i = 0; i < n; ++i) f.components[0](i, i) = Rational(1);
    return f;
}

Curvature random_curvature(Rng& rng, std::size_t n) {
    auto basis = curvature_space_basis(n);
    Curvature r(n);
    for (const auto& b : basis) r += b * rng.rational();
    return r;
}

Matrix<Rational> ricci_of(const Curvature& r) {
    std::size_t n = r.n();
    Matrix<Rational> ric(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) ric(i, j) += r.at(k, i, k, j);
    return ric;
}

}  // namespace

TEST_CASE("curvature space dimensions") {
    CHECK(curvature_dim(2) == 1);
    CHECK(curvature_dim(3) == 6);
    CHECK(curvature_dim(4) == 20);
    CHECK(weyl_dim(2) == 0);
    CHECK(weyl_dim(3) == 0);
    CHECK(weyl_dim(4) == 10);
    CHECK(weyl_dim(5) == 35);
    for (std::size_t n = 2; n <= 5; ++n) {
        auto basis = curvature_space_basis(n);
        CHECK(basis.size() == curvature_dim(n));
        for (const auto& b : basis) CHECK(b.bianchi_ok());
    }
}

TEST_CASE("gauss_gamma has all curvature symmetries") {
    Rng rng(211);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 3 + t % 2;
        auto h = rng.sym_form(n, 2);
        auto p = rng.sym_form(n, 2);
        auto r = gauss_gamma(h, p);
        CHECK(r.bianchi_ok());
        CHECK(r == gauss_gamma(p, h));
        CHECK(r.at(0, 1, 2, 0) == -r.at(1, 0, 2, 0));
        CHECK(r.at(0, 1, 0, 2) == r.at(0, 2, 0, 1));
    }
}

TEST_CASE("gauss_gamma on diagonal forms") {
    auto h = diag_form({1, -1});
    auto p = diag_form({1, 1});
    auto r = gauss_gamma(h, p);
    // R_1212 = h11 p22 + p11 h22 = 1 - 1 = 0
    CHECK(r.at(0, 1, 0, 1) == 0);
    CHECK(r.is_zero());

    auto r2 = gauss_gamma(diag_form({1, 2}), diag_form({1, 1}));
    CHECK(r2.at(0, 1, 0, 1) == Rational(3));
}

TEST_CASE("Ricci/Weyl split is exact") {
    Rng rng(223);
    SUBCASE("zero in, zero out") {
        auto rw = ricci_and_weyl(Curvature(4));
        CHECK(rw.weyl.is_zero());
        CHECK(rw.scalar == 0);
        CHECK(rw.ricci.is_zero());
    }
    SUBCASE("low dimensions have no Weyl part at all") {
        for (std::size_t n = 2; n <= 3; ++n)
            for (const auto& b : curvature_space_basis(n))
                CHECK(ricci_and_weyl(b).weyl.is_zero());
    }
    SUBCASE("Weyl part is totally trace-free") {
        for (int t = 0; t < 30; ++t) {
            auto r = random_curvature(rng, 4 + t % 2);
            auto rw = ricci_and_weyl(r);
            CHECK(ricci_of(rw.weyl).is_zero());
            CHECK(rw.weyl.bianchi_ok());
        }
    }
    SUBCASE("projection is idempotent") {
        for (int t = 0; t < 20; ++t) {
            auto r = random_curvature(rng, 4);
            auto w = ricci_and_weyl(r).weyl;
            CHECK(ricci_and_weyl(w).weyl == w);
        }
    }
    SUBCASE("round sphere data") {
        auto r = gauss_gamma(identity_form(4), identity_form(4));
        CHECK(r.at(0, 1, 0, 1) == Rational(2));
        auto rw = ricci_and_weyl(r);
        CHECK(rw.weyl.is_zero());
        CHECK(rw.scalar == Rational(2 * 4 * 3));
        CHECK(rw.ricci(0, 0) == Rational(2 * 3));
    }
}

TEST_CASE("Weyl-dimension count from the split") {
    // rank of the Weyl projection on the curvature basis equals weyl_dim.
    for (std::size_t n = 2; n <= 5; ++n) {
        auto basis = curvature_space_basis(n);
        std::vector<std::vector<Rational>> rows;
        for (const auto& b : basis) rows.push_back(ricci_and_weyl(b).weyl.flatten());
        Matrix<Rational> m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
        CHECK(rank(m) == weyl_dim(n));
    }
}

TEST_CASE("weyl_rigid oracle values in dimension four") {
    SUBCASE("diag(1,-1,0,0)") {
        auto v = weyl_rigid(diag_form({1, -1, 0, 0}));
        CHECK(v.status == Status::NotRigid);
        CHECK(v.solution_dim() == 3);
        CHECK(v.reference_dim() == 1);
        REQUIRE(v.witness.has_value());
        CHECK(ricci_and_weyl(gauss_gamma(diag_form({1, -1, 0, 0}), *v.witness)).weyl.is_zero());
    }
    SUBCASE("diag(1,1,-2,0)") {
        auto v = weyl_rigid(diag_form({1, 1, -2, 0}));
        CHECK(v.status == Status::NotRigid);
        CHECK(v.solution_dim() == 3);
        CHECK(v.reference_dim() == 1);
    }
    SUBCASE("diag(1,1,1,-3)") {
        auto v = weyl_rigid(diag_form({1, 1, 1, -3}));
        CHECK(v.status == Status::NotRigid);
        CHECK(v.solution_dim() == 5);
        CHECK(v.reference_dim() == 1);
    }
    SUBCASE("explicit extra solution for diag(1,1,-2,0)") {
        // P = diag(1,1,4,0) gives diagonal curvature c_ij = h_i p_j + h_j p_i
        // with c_ij = a_i + a_j for a = (1,1,1,-1), which is Weyl-free but
        // is neither a multiple of H nor pure trace.
        auto h = diag_form({1, 1, -2, 0});
        auto p = diag_form({1, 1, 4, 0});
        CHECK(ricci_and_weyl(gauss_gamma(h, p)).weyl.is_zero());
    }
}

TEST_CASE("weyl_rigid in low dimensions where the Weyl tensor vanishes") {
    // n=2 and n=3: every P solves, so only trivial H-spaces can be rigid.
    auto v2 = weyl_rigid(diag_form({1, -1}));
    CHECK(v2.status == Status::NotRigid);
    CHECK(v2.solution_dim() == 3);  // all of Sym^2(R^2)

    auto v3 = weyl_rigid(diag_form({1, 1, -2}));
    CHECK(v3.status == Status::NotRigid);
    CHECK(v3.solution_dim() == 6);  // all of Sym^2(R^3)
    CHECK(v3.reference_dim() == 1);
}

TEST_CASE("weyl_rigid handles the degenerate and shifted cases") {
    CHECK(weyl_rigid(SymForm(4, 1)).status == Status::Degenerate);

    // Adding a multiple of the metric to H does not change the verdict.
    auto h = diag_form({1, 1, -2, 0});
    auto hs = diag_form({3, 3, 0, 2});  // h + 2g
    auto a = weyl_rigid(h);
    auto b = weyl_rigid(hs);
    CHECK(a.status == b.status);
    CHECK(a.solution_dim() == b.solution_dim());
}

TEST_CASE("every solution basis element is re-verifiable") {
    Rng rng(227);
    for (int t = 0; t < 10; ++t) {
        auto h = rng.sym_form(4, 1);
        if (h.is_zero()) continue;
        auto v = weyl_rigid(h);
        for (const auto& p : v.solution_space)
            CHECK(ricci_and_weyl(gauss_gamma(h, p)).weyl.is_zero());
        for (const auto& p : v.reference_space)
            CHECK(ricci_and_weyl(gauss_gamma(h, p)).weyl.is_zero());
    }
}
