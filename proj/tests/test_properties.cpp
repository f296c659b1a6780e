#include "rig/curvature.hpp"
#include "rig/rigidity.hpp"

#include "support/random_gen.hpp"

#include <doctest.h>

using namespace rig;
using rigtest::Rng;

namespace {

VectorForm apply_mixing(const Matrix<GaussianRational>& u, const VectorForm& h) {
    VectorForm p(h.n, h.k, h.r);
    for (std::size_t a = 0; a < h.r; ++a)
        for (std::size_t b = 0; b < h.r; ++b) p.components[a] += h.components[b] * u(a, b);
    return p;
}

Matrix<GaussianRational> elem_conj(const Matrix<GaussianRational>& a) {
    return a.conj_transpose().transpose();
}

}  // namespace

TEST_CASE("property: gamma is fixed by conj_swap") {
    Rng rng(501);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 2 + t % 2, r = 1 + t % 2;
        int k = 2 + t % 2;
        auto h = rng.vector_form(n, k, r);
        auto p = rng.vector_form(n, k, r);
        GramPair grams{rng.gram(n), rng.gram(r)};
        auto g = gamma(h, p, grams);
        CHECK(g.conj_swap() == g);
    }
}

TEST_CASE("property: skew mixings are gamma-null for any Gram on V") {
    Rng rng(503);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + t % 3;
        auto h = rng.nonzero_vector_form(2, 2, r);
        auto u = rng.skew_hermitian(r);
        // Skewness is with respect to G = identity on W.
        GramPair grams{rng.gram(2), Matrix<GaussianRational>::identity(r)};
        CHECK(gamma(h, apply_mixing(u, h), grams).is_zero());
    }
}

TEST_CASE("property: verdict is invariant under linear changes of frame on V") {
    Rng rng(509);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 2, r = 1;
        int k = 2;
        auto h = rng.nonzero_vector_form(n, k, r);
        auto a = rng.invertible(n);
        VectorForm h2(n, k, r);
        for (std::size_t c = 0; c < r; ++c) h2.components[c] = substitute(h.components[c], a);

        GramPair grams = GramPair::identity(n, r);
        GramPair grams2{a.transpose() * grams.g * elem_conj(a), grams.G};

        auto v1 = bochner_rigid(h, grams);
        auto v2 = bochner_rigid(h2, grams2);
        CHECK(v1.status == v2.status);
        CHECK(v1.solution_dim() == v2.solution_dim());
        CHECK(v1.reference_dim() == v2.reference_dim());
    }
}

TEST_CASE("property: division by the diagonal generator is a true projection") {
    Rng rng(521);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 2 + t % 2;
        auto g = rng.gram(n);
        auto gen = s1_generator(n, g);
        HermitianPoly q(n, 2, 2);
        for (const auto& m : monomial_basis(n, 2, 2))
            if (u(rng.gen) < 0.4) q.add_term(m, rng.gaussian());
        auto red = s1_reduce(q, g);
        CHECK(gen * red.quotient + red.remainder == q);
        // Reducing the remainder again changes nothing.
        auto red2 = s1_reduce(red.remainder, g);
        CHECK(red2.remainder == red.remainder);
        CHECK(red2.quotient.is_zero());
        // Multiples of the generator reduce to zero.
        auto red3 = s1_reduce(gen * red.quotient, g);
        CHECK(red3.remainder.is_zero());
    }
}

TEST_CASE("property: gauss_gamma lands in the curvature space") {
    Rng rng(523);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 3 + t % 2;
        auto h = rng.sym_form(n, 1 + t % 2);
        auto p = rng.sym_form(n, h.r);
        auto r = gauss_gamma(h, p);
        CHECK(r.bianchi_ok());
        CHECK(r == gauss_gamma(p, h));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(r.at(i, i, 0, 1) == 0);
            for (std::size_t j = 0; j < n; ++j)
                CHECK(r.at(i, j, 0, 1) == -r.at(j, i, 0, 1));
        }
    }
}

TEST_CASE("property: bilinearity of the pairings") {
    Rng rng(541);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 2, r = 2;
        auto h = rng.vector_form(n, 2, r);
        auto p = rng.vector_form(n, 2, r);
        auto q = rng.vector_form(n, 2, r);
        GramPair grams{rng.gram(n), rng.gram(r)};
        // gamma(h, p + q) = gamma(h, p) + gamma(h, q), real linearity in P.
        CHECK(gamma(h, p + q, grams) == gamma(h, p, grams) + gamma(h, q, grams));
        Rational c = rng.rational();
        CHECK(gamma(h, p * GaussianRational(c), grams) == gamma(h, p, grams) * GaussianRational(c));
    }
}
