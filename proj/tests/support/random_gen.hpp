#pragma once

#include "rig/poly.hpp"
#include "rig/curvature.hpp"
#include "rig/spaces.hpp"

#include <random>

namespace rigtest {

using rig::GaussianRational;
using rig::Rational;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    Rational rational(int lo = -4, int hi = 4, int maxden = 3) {
        std::uniform_int_distribution<int> num(lo, hi);
        std::uniform_int_distribution<int> den(1, maxden);
        Rational q(num(gen), den(gen));
        q.canonicalize();  // mpq_class(p, q) stores the fraction unreduced
        return q;
    }

    GaussianRational gaussian() { return GaussianRational(rational(), rational()); }

    GaussianRational nonzero_gaussian() {
        for (;;) {
            GaussianRational z = gaussian();
            if (!z.is_zero()) return z;
        }
    }

    rig::VectorForm vector_form(std::size_t n, int k, std::size_t r, double density = 0.5) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        rig::VectorForm f(n, k, r);
        auto monos = rig::monomial_basis(n, k, 0);
        for (std::size_t a = 0; a < r; ++a)
            for (const auto& m : monos)
                if (u(gen) < density) f.components[a].add_term(m, gaussian());
        return f;
    }

    rig::VectorForm nonzero_vector_form(std::size_t n, int k, std::size_t r) {
        for (;;) {
            rig::VectorForm f = vector_form(n, k, r);
            if (!f.is_zero()) return f;
        }
    }

    rig::Matrix<GaussianRational> skew_hermitian(std::size_t r) {
        rig::Matrix<GaussianRational> u(r, r);
        for (std::size_t a = 0; a < r; ++a) {
            u(a, a) = GaussianRational(Rational(0), rational());
            for (std::size_t b = a + 1; b < r; ++b) {
                u(a, b) = gaussian();
                u(b, a) = -u(a, b).conj();
            }
        }
        return u;
    }

    /// A A* + I: Hermitian and positive definite by construction.
    rig::Matrix<GaussianRational> gram(std::size_t n) {
        rig::Matrix<GaussianRational> a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = gaussian();
        rig::Matrix<GaussianRational> g = a * a.conj_transpose();
        for (std::size_t i = 0; i < n; ++i) g(i, i) += GaussianRational(1);
        return g;
    }

    rig::Matrix<GaussianRational> invertible(std::size_t n) {
        for (;;) {
            rig::Matrix<GaussianRational> a(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) a(i, j) = gaussian();
            if (!rig::determinant(a).is_zero()) return a;
        }
    }

    rig::SymForm sym_form(std::size_t n, std::size_t r) {
        rig::SymForm f(n, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    Rational v = rational();
                    f.components[a](i, j) = v;
                    f.components[a](j, i) = v;
                }
        return f;
    }

    rig::Matrix<Rational> rational_matrix(std::size_t rows, std::size_t cols) {
        rig::Matrix<Rational> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
        return m;
    }
};

}  // namespace rigtest
