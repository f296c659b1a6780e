#pragma once

#include "rig/matrix.hpp"
#include "rig/rigidity.hpp"

#include <optional>
#include <vector>

namespace rig {

/// W-valued symmetric bilinear form on R^n: r symmetric n x n rational
/// matrices (candidate second fundamental forms in an orthonormal frame).
struct SymForm {
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<Matrix<Rational>> components;

    SymForm() = default;
    SymForm(std::size_t n_, std::size_t r_) : n(n_), r(r_) {
        components.assign(r, Matrix<Rational>(n, n));
    }

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_symmetric() const {
        for (const auto& c : components)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (c(i, j) != c(j, i)) return false;
        return true;
    }

    friend bool operator==(const SymForm& a, const SymForm& b) {
        return a.n == b.n && a.r == b.r && a.components == b.components;
    }
};

/// Algebraic curvature tensor on R^n in an orthonormal frame: stored as a
/// symmetric matrix on ordered index pairs (i<j), with the first Bianchi
/// identity as an extra linear condition checked by bianchi_ok().
/// Index symmetries R_{ijkl} = -R_{jikl} = -R_{ijlk} = R_{klij} are baked
/// into the storage.
class Curvature {
public:
    explicit Curvature(std::size_t n) : n_(n), s_(pair_count(n), pair_count(n)) {}

    std::size_t n() const { return n_; }
    std::size_t pairs() const { return s_.rows(); }

    static std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

    /// Index of the pair i<j in lex order: (0,1),(0,2),...,(0,n-1),(1,2),...
    static std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }

    Rational at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        if (i == j || k == l) return Rational(0);
        int sign = 1;
        if (i > j) {
            std::swap(i, j);
            sign = -sign;
        }
        if (k > l) {
            std::swap(k, l);
            sign = -sign;
        }
        Rational v = s_(pair_index(n_, i, j), pair_index(n_, k, l));
        return sign < 0 ? Rational(-v) : v;
    }

    /// Sets R_{ijkl} (i<j, k<l) and its mirror R_{klij}.
    void set(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Rational& v) {
        std::size_t p = pair_index(n_, i, j), q = pair_index(n_, k, l);
        s_(p, q) = v;
        s_(q, p) = v;
    }

    bool is_zero() const { return s_.is_zero(); }

    bool bianchi_ok() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                for (std::size_t k = j + 1; k < n_; ++k)
                    for (std::size_t l = k + 1; l < n_; ++l)
                        if (at(i, j, k, l) + at(i, k, l, j) + at(i, l, j, k) != 0) return false;
        return true;
    }

    Curvature& operator+=(const Curvature& o) {
        for (std::size_t p = 0; p < pairs(); ++p)
            for (std::size_t q = 0; q < pairs(); ++q) s_(p, q) += o.s_(p, q);
        return *this;
    }
    Curvature& operator-=(const Curvature& o) {
        for (std::size_t p = 0; p < pairs(); ++p)
            for (std::size_t q = 0; q < pairs(); ++q) s_(p, q) -= o.s_(p, q);
        return *this;
    }
    friend Curvature operator-(Curvature a, const Curvature& b) { return a -= b; }

    Curvature operator*(const Rational& c) const {
        Curvature r(n_);
        for (std::size_t p = 0; p < pairs(); ++p)
            for (std::size_t q = 0; q < pairs(); ++q) r.s_(p, q) = s_(p, q) * c;
        return r;
    }

    friend bool operator==(const Curvature& a, const Curvature& b) {
        return a.n_ == b.n_ && a.s_ == b.s_;
    }

    /// Upper triangle of the pair matrix, row by row: a faithful coordinate
    /// vector for the pair-symmetric tensors.
    std::vector<Rational> flatten() const {
        std::vector<Rational> out;
        out.reserve(pairs() * (pairs() + 1) / 2);
        for (std::size_t p = 0; p < pairs(); ++p)
            for (std::size_t q = p; q < pairs(); ++q) out.push_back(s_(p, q));
        return out;
    }

private:
    std::size_t n_;
    Matrix<Rational> s_;
};

/// n^2 (n^2 - 1) / 12.
std::size_t curvature_dim(std::size_t n);

/// n (n+1) (n+2) (n-3) / 12; zero for n < 4.
std::size_t weyl_dim(std::size_t n);

/// Basis of the space of algebraic curvature tensors (pair symmetry plus
/// first Bianchi), size curvature_dim(n).
std::vector<Curvature> curvature_space_basis(std::size_t n);

/// Symmetrized Gauss-equation pairing:
/// R_{ijkl} = sum_a (h_{ik} p_{jl} + p_{ik} h_{jl} - h_{il} p_{jk} - p_{il} h_{jk}).
/// Symmetric in (h, p); satisfies the first Bianchi identity.
Curvature gauss_gamma(const SymForm& h, const SymForm& p);

struct RicciWeyl {
    Matrix<Rational> ricci;  // Ric_{ij} = sum_k R_{kikj}
    Rational scalar;
    Curvature weyl;  // totally trace-free part
};

/// Orthogonal split of R into Ricci data and the Weyl (trace-free) part.
RicciWeyl ricci_and_weyl(const Curvature& r);

struct WeylVerdict {
    Status status = Status::Degenerate;
    std::optional<SymForm> witness;
    std::vector<SymForm> solution_space;   // { P : Weyl(gauss_gamma(H,P)) = 0 }
    std::vector<SymForm> reference_space;  // skew mixings of H plus trace forms

    std::size_t solution_dim() const { return solution_space.size(); }
    std::size_t reference_dim() const { return reference_space.size(); }
};

/// Weyl rigidity of a W-valued symmetric form H: every P with
/// Weyl(gauss_gamma(H,P)) = 0 must come from a skew rotation of H or a
/// pure-trace direction. H = 0 yields DEGENERATE.
WeylVerdict weyl_rigid(const SymForm& h);

}  // namespace rig
