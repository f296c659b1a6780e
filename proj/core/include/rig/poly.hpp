#pragma once

#include "rig/gaussian.hpp"
#include "rig/matrix.hpp"
#include "rig/monomial.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace rig {

/// Element of S^{k,l}(V*): polynomial of bidegree (k,l) in n variables
/// over Q[i]. Zero coefficients are never stored.
class HermitianPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialGreater>;

    HermitianPoly() : n_(0), k_(0), l_(0) {}
    HermitianPoly(std::size_t n, int k, int l) : n_(n), k_(k), l_(l) {
        if (k < 0 || l < 0) throw std::invalid_argument("negative bidegree");
    }

    static HermitianPoly monomial(std::size_t n, const Monomial& m,
                                  GaussianRational c = GaussianRational(1)) {
        HermitianPoly p(n, m.hol_degree(), m.antihol_degree());
        p.add_term(m, c);
        return p;
    }

    std::size_t n() const { return n_; }
    int k() const { return k_; }
    int l() const { return l_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    GaussianRational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    void add_term(const Monomial& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        if (m.n() != n_ || m.hol_degree() != k_ || m.antihol_degree() != l_)
            throw std::invalid_argument("term bidegree mismatch");
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HermitianPoly& operator+=(const HermitianPoly& o) {
        check_same_space(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    HermitianPoly& operator-=(const HermitianPoly& o) {
        check_same_space(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend HermitianPoly operator+(HermitianPoly a, const HermitianPoly& b) { return a += b; }
    friend HermitianPoly operator-(HermitianPoly a, const HermitianPoly& b) { return a -= b; }

    HermitianPoly operator*(const GaussianRational& c) const {
        HermitianPoly r(n_, k_, l_);
        if (c.is_zero()) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
        return r;
    }

    /// Exact distributive product; bidegrees add.
    friend HermitianPoly operator*(const HermitianPoly& a, const HermitianPoly& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("poly product: variable count mismatch");
        HermitianPoly r(a.n_, a.k_ + b.k_, a.l_ + b.l_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    /// Conjugation S^{k,l} -> S^{l,k}: swaps the blocks and conjugates
    /// coefficients. An involution.
    HermitianPoly conj_swap() const {
        HermitianPoly r(n_, l_, k_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m.conj_swap(), c.conj());
        return r;
    }

    friend bool operator==(const HermitianPoly& a, const HermitianPoly& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.l_ == b.l_ && a.terms_ == b.terms_;
    }

private:
    void check_same_space(const HermitianPoly& o) const {
        if (n_ != o.n_ || k_ != o.k_ || l_ != o.l_)
            throw std::invalid_argument("poly sum: bidegree mismatch");
    }

    std::size_t n_;
    int k_, l_;
    TermMap terms_;
};

/// W-valued holomorphic form H = H^a (x) e_a in S^{k,0}(V*) (x) W:
/// r purely holomorphic components of degree k in n variables.
struct VectorForm {
    std::size_t n = 0;
    int k = 0;
    std::size_t r = 0;
    std::vector<HermitianPoly> components;

    VectorForm() = default;
    VectorForm(std::size_t n_, int k_, std::size_t r_) : n(n_), k(k_), r(r_) {
        components.assign(r, HermitianPoly(n, k, 0));
    }

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }

    VectorForm& operator+=(const VectorForm& o) {
        check_same_space(o);
        for (std::size_t a = 0; a < r; ++a) components[a] += o.components[a];
        return *this;
    }
    friend VectorForm operator+(VectorForm a, const VectorForm& b) { return a += b; }

    VectorForm operator*(const GaussianRational& c) const {
        VectorForm out(n, k, r);
        for (std::size_t a = 0; a < r; ++a) out.components[a] = components[a] * c;
        return out;
    }

    friend bool operator==(const VectorForm& a, const VectorForm& b) {
        return a.n == b.n && a.k == b.k && a.r == b.r && a.components == b.components;
    }

    void check_same_space(const VectorForm& o) const {
        if (n != o.n || k != o.k || r != o.r)
            throw std::invalid_argument("vector form: space mismatch");
    }
};

/// Frame metrics: g on V (n x n) and G on W (r x r), both Hermitian
/// positive definite. With identity Grams everything reduces to the
/// unitary-frame formulas.
struct GramPair {
    Matrix<GaussianRational> g;
    Matrix<GaussianRational> G;

    static GramPair identity(std::size_t n, std::size_t r) {
        return {Matrix<GaussianRational>::identity(n), Matrix<GaussianRational>::identity(r)};
    }

    void validate() const {
        validate_one(g, "g");
        validate_one(G, "G");
    }

private:
    static void validate_one(const Matrix<GaussianRational>& m, const char* name) {
        if (m.rows() != m.cols()) throw std::invalid_argument(std::string(name) + ": not square");
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j) != m(j, i).conj())
                    throw std::invalid_argument(std::string(name) + ": not Hermitian");
        // Positive definiteness certified by exact leading principal minors.
        for (std::size_t s = 1; s <= m.rows(); ++s) {
            Matrix<GaussianRational> lead(s, s);
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < s; ++j) lead(i, j) = m(i, j);
            GaussianRational det = determinant(lead);
            if (!det.is_real() || !(det.re > 0))
                throw std::invalid_argument(std::string(name) + ": not positive definite");
        }
    }
};

/// <H, Pbar> with frame metric G on W: sum_{a,b} G_{ab} H^a * conj(P^b).
/// With G = identity this is the plain sum_a H^a (x) Pbar^a.
inline HermitianPoly pairing(const VectorForm& h, const VectorForm& p,
                             const Matrix<GaussianRational>& G) {
    if (h.n != p.n || h.r != p.r) throw std::invalid_argument("pairing: space mismatch");
    if (G.rows() != h.r || G.cols() != h.r) throw std::invalid_argument("pairing: bad Gram size");
    HermitianPoly out(h.n, h.k, p.k);
    for (std::size_t a = 0; a < h.r; ++a) {
        if (h.components[a].is_zero()) continue;
        for (std::size_t b = 0; b < p.r; ++b) {
            if (field_is_zero(G(a, b)) || p.components[b].is_zero()) continue;
            out += (h.components[a] * p.components[b].conj_swap()) * G(a, b);
        }
    }
    return out;
}

/// Substitute x -> A x (exact linear change of holomorphic variables).
/// Antiholomorphic exponents transform by the conjugate matrix.
HermitianPoly substitute(const HermitianPoly& p, const Matrix<GaussianRational>& a);
VectorForm substitute(const VectorForm& f, const Matrix<GaussianRational>& a);

}  // namespace rig
