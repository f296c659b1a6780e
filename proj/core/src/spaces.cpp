#include "rig/spaces.hpp"

#include <algorithm>

namespace rig {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return (std::size_t)b.get_ui();
}

void gen_exponents(std::size_t pos, std::size_t n, int left, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (pos + 1 == n) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (int e = left; e >= 0; --e) {
        cur[pos] = e;
        gen_exponents(pos + 1, n, left - e, cur, out);
    }
}

}  // namespace

std::size_t space_dim(std::size_t n, int k, int l) {
    if (n == 0 || k < 0 || l < 0) throw std::invalid_argument("space_dim: bad arguments");
    return binom(n + k - 1, k) * binom(n + l - 1, l);
}

std::vector<std::vector<int>> exponent_vectors(std::size_t n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    gen_exponents(0, n, k, cur, out);
    return out;  // descending lex by construction
}

std::vector<Monomial> monomial_basis(std::size_t n, int k, int l) {
    auto hols = exponent_vectors(n, k);
    auto antis = exponent_vectors(n, l);
    std::vector<Monomial> out;
    out.reserve(hols.size() * antis.size());
    for (const auto& h : hols)
        for (const auto& a : antis) out.emplace_back(h, a);
    return out;
}

HermitianPoly s1_generator(std::size_t n, const Matrix<GaussianRational>& g) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("s1_generator: bad Gram size");
    HermitianPoly gen(n, 1, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (field_is_zero(g(i, j))) continue;
            gen.add_term(Monomial::var(n, i) * Monomial::cvar(n, j), g(i, j));
        }
    return gen;
}

std::vector<HermitianPoly> s1_subspace(std::size_t n, int k, int l,
                                       const Matrix<GaussianRational>& g) {
    if (k < 1 || l < 1) return {};
    HermitianPoly gen = s1_generator(n, g);
    std::vector<HermitianPoly> cols;
    for (const auto& m : monomial_basis(n, k - 1, l - 1))
        cols.push_back(gen * HermitianPoly::monomial(n, m));
    return cols;
}

S1Reduction s1_reduce(const HermitianPoly& q, const Matrix<GaussianRational>& g) {
    const std::size_t n = q.n();
    S1Reduction out{HermitianPoly(n, std::max(q.k() - 1, 0), std::max(q.l() - 1, 0)),
                    HermitianPoly(n, q.k(), q.l())};
    if (q.k() < 1 || q.l() < 1) {
        out.remainder = q;
        return out;
    }
    HermitianPoly gen = s1_generator(n, g);
    // Leading term of the generator is x^1 xbar^1 (g_{11} > 0 for any
    // positive definite Gram), so divisibility is a check on the first
    // variable's exponents. Each step strictly decreases the working
    // leading monomial; termination is guaranteed.
    const Monomial lead = Monomial::var(n, 0) * Monomial::cvar(n, 0);
    const GaussianRational lead_coeff = gen.coeff(lead);
    HermitianPoly work = q;
    while (!work.is_zero()) {
        // Largest term still divisible by the generator's leading monomial.
        auto it = std::find_if(work.terms().begin(), work.terms().end(),
                               [&](const auto& t) { return t.first.divisible_by(lead); });
        if (it == work.terms().end()) break;
        GaussianRational c = it->second / lead_coeff;
        Monomial cof = it->first.divide(lead);
        out.quotient.add_term(cof, c);
        work -= gen * (HermitianPoly::monomial(n, cof) * c);
    }
    out.remainder = std::move(work);
    return out;
}

std::optional<HermitianPoly> s1_decompose(const HermitianPoly& q,
                                          const Matrix<GaussianRational>& g) {
    S1Reduction r = s1_reduce(q, g);
    if (!r.remainder.is_zero()) return std::nullopt;
    return r.quotient;
}

HermitianPoly substitute(const HermitianPoly& p, const Matrix<GaussianRational>& a) {
    const std::size_t n = p.n();
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("substitute: bad matrix size");
    // Images of the variables: x^i -> sum_j A_ij x^j, xbar^i by conjugates.
    std::vector<HermitianPoly> ximg(n, HermitianPoly(n, 1, 0));
    std::vector<HermitianPoly> cimg(n, HermitianPoly(n, 0, 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (field_is_zero(a(i, j))) continue;
            ximg[i].add_term(Monomial::var(n, j), a(i, j));
            cimg[i].add_term(Monomial::cvar(n, j), a(i, j).conj());
        }
    HermitianPoly out(n, p.k(), p.l());
    for (const auto& [m, c] : p.terms()) {
        HermitianPoly term(n, 0, 0);
        term.add_term(Monomial::one(n), c);
        for (std::size_t i = 0; i < n; ++i) {
            for (int e = 0; e < m.hol[i]; ++e) term = term * ximg[i];
            for (int e = 0; e < m.antihol[i]; ++e) term = term * cimg[i];
        }
        out += term;
    }
    return out;
}

VectorForm substitute(const VectorForm& f, const Matrix<GaussianRational>& a) {
    VectorForm out(f.n, f.k, f.r);
    for (std::size_t i = 0; i < f.r; ++i) out.components[i] = substitute(f.components[i], a);
    return out;
}

}  // namespace rig
