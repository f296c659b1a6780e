#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rig {

/// Bigraded monomial x^hol * xbar^antihol in n variables. Ordering is
/// graded lexicographic with the holomorphic block before the
/// antiholomorphic one; this fixes serialization and matrix column order.
struct Monomial {
    std::vector<int> hol;
    std::vector<int> antihol;

    Monomial() = default;
    Monomial(std::vector<int> h, std::vector<int> a) : hol(std::move(h)), antihol(std::move(a)) {
        if (hol.size() != antihol.size())
            throw std::invalid_argument("monomial blocks must have equal length");
    }

    static Monomial one(std::size_t n) {
        return Monomial(std::vector<int>(n, 0), std::vector<int>(n, 0));
    }
    /// x^i (0-based index).
    static Monomial var(std::size_t n, std::size_t i) {
        Monomial m = one(n);
        m.hol[i] = 1;
        return m;
    }
    /// xbar^i (0-based index).
    static Monomial cvar(std::size_t n, std::size_t i) {
        Monomial m = one(n);
        m.antihol[i] = 1;
        return m;
    }

    std::size_t n() const { return hol.size(); }
    int hol_degree() const { return std::accumulate(hol.begin(), hol.end(), 0); }
    int antihol_degree() const { return std::accumulate(antihol.begin(), antihol.end(), 0); }

    Monomial conj_swap() const { return Monomial(antihol, hol); }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < r.hol.size(); ++i) {
            r.hol[i] += o.hol[i];
            r.antihol[i] += o.antihol[i];
        }
        return r;
    }

    bool divisible_by(const Monomial& o) const {
        for (std::size_t i = 0; i < hol.size(); ++i)
            if (hol[i] < o.hol[i] || antihol[i] < o.antihol[i]) return false;
        return true;
    }

    Monomial divide(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < r.hol.size(); ++i) {
            r.hol[i] -= o.hol[i];
            r.antihol[i] -= o.antihol[i];
            if (r.hol[i] < 0 || r.antihol[i] < 0)
                throw std::domain_error("monomial division underflow");
        }
        return r;
    }

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.hol_degree() <=> b.hol_degree(); c != 0) return c;
        if (auto c = a.antihol_degree() <=> b.antihol_degree(); c != 0) return c;
        if (auto c = a.hol <=> b.hol; c != 0) return c;
        return a.antihol <=> b.antihol;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Descending order, so map iteration starts at the leading term.
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

}  // namespace rig
