#include "rig/float_oracle.hpp"
#include "rig/matrix.hpp"
#include "rig/rational.hpp"
#include "rig/sparse_solve.hpp"

#include "support/random_gen.hpp"

#include <doctest.h>

using namespace rig;
using rigtest::Rng;

TEST_CASE("rational literals parse and canonicalize") {
    CHECK(rational_from_string("3/6") == Rational(1, 2));
    CHECK(rational_from_string("-4/2") == Rational(-2));
    CHECK(rational_to_string(Rational(7, 3)) == "7/3");
    CHECK(is_integer(rational_from_string("4/2")));
    CHECK_FALSE(is_integer(Rational(1, 3)));
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("gaussian rational field operations") {
    GaussianRational i = GaussianRational::unit_i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.conj() == -i);
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        GaussianRational a = rng.gaussian(), b = rng.nonzero_gaussian(), c = rng.gaussian();
        CHECK((a / b) * b == a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.norm2() == (a * a.conj()).re);
    }
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST_CASE("rref, rank and kernel are exact and consistent") {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        auto m = rng.rational_matrix(5, 7);
        auto ker = kernel_basis(m);
        CHECK(ker.size() == m.cols() - rank(m));
        for (const auto& v : ker) {
            auto mv = m.apply(v);
            for (const auto& x : mv) CHECK(x == 0);
        }
    }
}

TEST_CASE("membership finds exact coefficients or rejects") {
    std::vector<std::vector<Rational>> s = {{1, 0, 2}, {0, 1, 1}};
    auto c = membership<Rational>({2, 3, 7}, s);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == 3);
    CHECK_FALSE(membership<Rational>({0, 0, 1}, s).has_value());
}

TEST_CASE("constrained preimage with empty span reduces to the kernel") {
    Rng rng(31);
    auto m = rng.rational_matrix(4, 6);
    auto pre = constrained_preimage(m, {});
    CHECK(pre.size() == kernel_basis(m).size());
    for (const auto& v : pre)
        for (const auto& x : m.apply(v)) CHECK(x == 0);
}

TEST_CASE("determinant matches cofactor expansion on small matrices") {
    Matrix<Rational> m(3, 3);
    int vals[9] = {2, 1, 0, 1, 3, 1, 0, 1, 2};
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = vals[i];
    CHECK(determinant(m) == Rational(8));
    CHECK(determinant(Matrix<Rational>::identity(5)) == Rational(1));
}

TEST_CASE("realification doubles rank with the fixed block convention") {
    Rng rng(47);
    for (int t = 0; t < 20; ++t) {
        Matrix<GaussianRational> m(4, 5);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = rng.gaussian();
        CHECK(rank(realify(m)) == 2 * rank(m));
    }
    Matrix<GaussianRational> one(1, 1);
    one(0, 0) = GaussianRational(3, -2);
    auto r = realify(one);
    CHECK(r(0, 0) == Rational(3));
    CHECK(r(0, 1) == Rational(2));
    CHECK(r(1, 0) == Rational(-2));
    CHECK(r(1, 1) == Rational(3));
}

TEST_CASE("sparse kernel solver agrees with the dense kernel") {
    Rng rng(59);
    for (int t = 0; t < 20; ++t) {
        Matrix<Rational> dense = rng.rational_matrix(12, 9);
        SparseColumns cols;
        cols.ncols = dense.cols();
        cols.cols.resize(cols.ncols);
        for (std::size_t j = 0; j < dense.cols(); ++j)
            for (std::size_t i = 0; i < dense.rows(); ++i)
                if (dense(i, j) != 0) cols.cols[j][(int)i] = dense(i, j);
        auto sparse_ker = SparseKernelSolver::kernel(cols);
        auto dense_ker = kernel_basis(dense);
        CHECK(sparse_ker.size() == dense_ker.size());
        for (const auto& v : sparse_ker)
            for (const auto& x : dense.apply(v)) CHECK(x == 0);
    }
}

TEST_CASE("sparse kernel solver with certified early termination stays exact") {
    Rng rng(61);
    // Tall redundant system: many repeated constraints trigger the stall path.
    Matrix<Rational> base = rng.rational_matrix(6, 40);
    SparseColumns cols;
    cols.ncols = base.cols();
    cols.cols.resize(cols.ncols);
    int row_id = 0;
    for (int rep = 0; rep < 30; ++rep)
        for (std::size_t i = 0; i < base.rows(); ++i, ++row_id)
            for (std::size_t j = 0; j < base.cols(); ++j)
                if (base(i, j) != 0) cols.cols[j][row_id] = base(i, j);
    SparseKernelSolver::Verifier verify = [&](const std::vector<Rational>& v) {
        for (const auto& x : base.apply(v))
            if (x != 0) return false;
        return true;
    };
    auto ker = SparseKernelSolver::kernel(cols, &verify);
    CHECK(ker.size() == kernel_basis(base).size());
}

TEST_CASE("float rank oracle agrees with exact rank on random matrices") {
    Rng rng(71);
    for (int t = 0; t < 20; ++t) {
        auto m = rng.rational_matrix(6, 8);
        CHECK(float_rank_oracle(m) == rank(m));
        Matrix<GaussianRational> c(5, 6);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 6; ++j) c(i, j) = rng.gaussian();
        CHECK(float_rank_oracle(c) == rank(c));
    }
    // Rank-deficient by construction: duplicate a row.
    Matrix<Rational> m = rng.rational_matrix(4, 6);
    for (std::size_t j = 0; j < 6; ++j) m(3, j) = m(0, j);
    CHECK(float_rank_oracle(m) == rank(m));
}
