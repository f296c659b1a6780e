#include "rig/embed.hpp"

#include "rig/matrix.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rig {

namespace {

using ExpVec = std::vector<int>;

/// Inhomogeneous scratch polynomial used only for Taylor shifts.
using SparsePoly = std::map<ExpVec, GaussianRational>;

void spadd(SparsePoly& a, const ExpVec& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = a.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

SparsePoly spmul(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            ExpVec m = ma;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            spadd(out, m, ca * cb);
        }
    return out;
}

Rational binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

GaussianRational powc(const GaussianRational& x, int e) {
    GaussianRational out(1);
    for (int i = 0; i < e; ++i) out = out * x;
    return out;
}

GaussianRational eval_poly(const HermitianPoly& q, const std::vector<GaussianRational>& p) {
    GaussianRational out;
    for (const auto& [m, c] : q.terms()) {
        GaussianRational t = c;
        for (std::size_t i = 0; i < p.size(); ++i) t = t * powc(p[i], m.hol[i]);
        out += t;
    }
    return out;
}

/// Determinant of a small matrix of holomorphic linear forms by cofactor
/// expansion; exploits the many zero entries of the catalog matrices.
HermitianPoly poly_det(const std::vector<std::vector<HermitianPoly>>& m, std::size_t nvars) {
    const std::size_t k = m.size();
    if (k == 1) return m[0][0];
    HermitianPoly out(nvars, (int)k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<HermitianPoly>> sub;
        sub.reserve(k - 1);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == i) continue;
            sub.emplace_back(m[r].begin() + 1, m[r].end());
        }
        HermitianPoly cof = m[i][0] * poly_det(sub, nvars);
        if (i % 2)
            out -= cof;
        else
            out += cof;
    }
    return out;
}

/// <u, v> = sum_A u_A conj(v_A), the standard Hermitian form.
GaussianRational herm(const std::vector<GaussianRational>& u,
                      const std::vector<GaussianRational>& v) {
    GaussianRational out;
    for (std::size_t i = 0; i < u.size(); ++i) out += u[i] * v[i].conj();
    return out;
}

Matrix<GaussianRational> inverse(const Matrix<GaussianRational>& m) {
    const std::size_t n = m.rows();
    Matrix<GaussianRational> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = GaussianRational(1);
    }
    auto r = rref(std::move(aug));
    if (r.rank != n || r.pivot_cols.back() != n - 1)
        throw std::invalid_argument("inverse: singular matrix");
    Matrix<GaussianRational> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
    return out;
}

/// Subtract from u its orthogonal projection onto span(basis).
std::vector<GaussianRational> orth_complement(
    const std::vector<GaussianRational>& u,
    const std::vector<std::vector<GaussianRational>>& basis) {
    if (basis.empty()) return u;
    const std::size_t r = basis.size();
    Matrix<GaussianRational> g(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) g(a, b) = herm(basis[a], basis[b]);
    std::vector<GaussianRational> rhs(r);
    for (std::size_t a = 0; a < r; ++a) rhs[a] = herm(u, basis[a]);
    // coefficients c with <u - sum c_a basis_a, basis_m> = 0: conj(G)^T c = rhs,
    // and conj(G)^T = G for the Hermitian Gram.
    auto c = inverse(g).apply(rhs);
    std::vector<GaussianRational> out = u;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c[a] * basis[a][i];
    return out;
}

/// Incremental exact row reduction for rank tracking.
struct Elim {
    std::vector<std::vector<GaussianRational>> rows;
    std::vector<std::size_t> pivots;

    bool add(std::vector<GaussianRational> v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const GaussianRational& x = v[pivots[r]];
            if (x.is_zero()) continue;
            GaussianRational f = x;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) return false;
        GaussianRational inv = GaussianRational(1) / v[p];
        for (auto& x : v) x = x * inv;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

}  // namespace

PolyMap linear_map(std::size_t d) {
    PolyMap f;
    f.d = d;
    f.D = d;
    f.degree = 1;
    f.name = "linear";
    for (std::size_t i = 0; i <= d; ++i)
        f.components.push_back(HermitianPoly::monomial(d + 1, Monomial::var(d + 1, i)));
    return f;
}

PolyMap veronese(std::size_t d) {
    PolyMap f;
    f.d = d;
    f.degree = 2;
    f.name = "veronese";
    for (const auto& m : monomial_basis(d + 1, 2, 0))
        f.components.push_back(HermitianPoly::monomial(d + 1, m));
    f.D = f.components.size() - 1;
    return f;
}

PolyMap plucker(std::size_t n, std::size_t p) {
    if (n < p || p < 2) throw std::invalid_argument("plucker: need n >= p >= 2");
    const std::size_t nvars = n * p + 1;
    // Row i of the chart matrix [x0 I | X]: X(i,j) is variable 1 + i*p + j.
    auto entry = [&](std::size_t i, std::size_t col) {
        if (col < n) {
            if (col != i) return HermitianPoly(nvars, 1, 0);
            return HermitianPoly::monomial(nvars, Monomial::var(nvars, 0));
        }
        return HermitianPoly::monomial(nvars, Monomial::var(nvars, 1 + i * p + (col - n)));
    };
    PolyMap f;
    f.d = nvars - 1;
    f.degree = (int)n;
    f.name = "plucker";
    // Column subsets in lex order.
    std::vector<std::size_t> sel(n);
    for (std::size_t i = 0; i < n; ++i) sel[i] = i;
    while (true) {
        std::vector<std::vector<HermitianPoly>> sub(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c : sel) sub[i].push_back(entry(i, c));
        f.components.push_back(poly_det(sub, nvars));
        // next subset of {0..n+p-1}
        std::size_t total = n + p;
        std::size_t i = n;
        while (i > 0 && sel[i - 1] == total - (n - i + 1)) --i;
        if (i == 0) break;
        ++sel[i - 1];
        for (std::size_t j = i; j < n; ++j) sel[j] = sel[j - 1] + 1;
    }
    f.D = f.components.size() - 1;
    return f;
}

PolyMap whitney_hat(std::size_t n) {
    if (n < 1) throw std::invalid_argument("whitney_hat: need n >= 1");
    const std::size_t nv = n + 2;  // xi^0 .. xi^{n+1}
    auto v = [&](std::size_t i) { return Monomial::var(nv, i); };
    PolyMap f;
    f.d = nv - 1;
    f.D = 2 * n + 1;
    f.degree = 2;
    f.name = "whitney_hat";
    f.components.assign(2 * n + 2, HermitianPoly(nv, 2, 0));
    f.components[0].add_term(v(0) * v(n + 1), GaussianRational(2));
    for (std::size_t i = 1; i <= n; ++i) {
        f.components[i].add_term(v(i) * v(0), GaussianRational::unit_i());
        f.components[i].add_term(v(i) * v(n + 1), GaussianRational(1));
        f.components[n + i].add_term(v(i) * v(0), -GaussianRational::unit_i());
        f.components[n + i].add_term(v(i) * v(n + 1), GaussianRational(1));
    }
    f.components[2 * n + 1].add_term(v(n + 1) * v(n + 1), GaussianRational(1));
    f.components[2 * n + 1].add_term(v(0) * v(0), GaussianRational(-1));
    return f;
}

PolyMap whitney_ball(std::size_t n) {
    if (n < 1) throw std::invalid_argument("whitney_ball: need n >= 1");
    const std::size_t nv = n + 2;  // zeta, z^0, z^1 .. z^n
    auto v = [&](std::size_t i) { return Monomial::var(nv, i); };
    PolyMap f;
    f.d = nv - 1;
    f.D = 2 * n + 1;
    f.degree = 2;
    f.name = "whitney_ball";
    f.components.assign(2 * n + 2, HermitianPoly(nv, 2, 0));
    f.components[0].add_term(v(0) * v(0), GaussianRational(1));
    f.components[1].add_term(v(1) * v(1), GaussianRational(1));
    for (std::size_t i = 1; i <= n; ++i) {
        f.components[1 + i].add_term(v(1) * v(1 + i), GaussianRational(1));
        f.components[1 + n + i].add_term(v(0) * v(1 + i), GaussianRational(1));
    }
    return f;
}

PolyMap catalog(const std::string& name, const std::vector<std::size_t>& params) {
    auto need = [&](std::size_t c) {
        if (params.size() != c) throw std::invalid_argument("catalog: wrong parameter count");
    };
    if (name == "linear") {
        need(1);
        return linear_map(params[0]);
    }
    if (name == "veronese") {
        need(1);
        return veronese(params[0]);
    }
    if (name == "plucker") {
        need(2);
        return plucker(params[0], params[1]);
    }
    if (name == "whitney_hat") {
        need(1);
        return whitney_hat(params[0]);
    }
    if (name == "whitney_ball") {
        need(1);
        return whitney_ball(params[0]);
    }
    throw std::invalid_argument("catalog: unknown embedding '" + name + "'");
}

std::vector<GaussianRational> base_point(const PolyMap& f) {
    std::vector<GaussianRational> p(f.d + 1);
    p[0] = GaussianRational(1);
    return p;
}

std::vector<GaussianRational> evaluate(const PolyMap& f, const std::vector<GaussianRational>& p) {
    if (p.size() != f.d + 1) throw std::invalid_argument("evaluate: bad point length");
    std::vector<GaussianRational> out(f.D + 1);
    for (std::size_t a = 0; a <= f.D; ++a) out[a] = eval_poly(f.components[a], p);
    return out;
}

Jet jet(const PolyMap& f, const std::vector<GaussianRational>& p0, int order) {
    if (p0.size() != f.d + 1) throw std::invalid_argument("jet: bad point length");
    std::size_t chart = 0;
    while (chart <= f.d && p0[chart].is_zero()) ++chart;
    if (chart > f.d) throw std::invalid_argument("jet: zero point");
    std::vector<GaussianRational> p(p0.size());
    GaussianRational inv = GaussianRational(1) / p0[chart];
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = p0[i] * inv;

    bool nonzero = false;
    for (const auto& v : evaluate(f, p))
        if (!v.is_zero()) nonzero = true;
    if (!nonzero) throw std::invalid_argument("jet: F(p) = 0, point outside the chart's good locus");

    Jet out;
    out.n = f.d;
    out.chart = chart;
    out.point = p;
    out.order = std::min(order, f.degree);

    // Affine directions: all source variables except the chart one.
    std::vector<std::size_t> dir;
    for (std::size_t i = 0; i <= f.d; ++i)
        if (i != chart) dir.push_back(i);

    out.taylor.resize(f.D + 1);
    for (std::size_t a = 0; a <= f.D; ++a) {
        SparsePoly shifted;
        for (const auto& [m, c] : f.components[a].terms()) {
            // x_chart -> 1; x_j -> p_j + s_j expanded binomially.
            SparsePoly acc{{ExpVec(out.n, 0), c}};
            for (std::size_t t = 0; t < dir.size(); ++t) {
                int e = m.hol[dir[t]];
                if (e == 0) continue;
                SparsePoly fac;
                for (int u = 0; u <= e; ++u) {
                    ExpVec mv(out.n, 0);
                    mv[t] = u;
                    fac[mv] = powc(p[dir[t]], e - u) * GaussianRational(binom(e, u));
                }
                acc = spmul(acc, fac);
            }
            for (const auto& [mv, cv] : acc) spadd(shifted, mv, cv);
        }
        auto& parts = out.taylor[a];
        for (int l = 0; l <= f.degree; ++l) parts.emplace_back(out.n, l, 0);
        for (const auto& [mv, cv] : shifted) {
            int deg = 0;
            for (int e : mv) deg += e;
            parts[deg].add_term(Monomial(mv, ExpVec(out.n, 0)), cv);
        }
    }
    return out;
}

std::vector<GaussianRational> Jet::derivative(const std::vector<int>& alpha) const {
    int deg = 0;
    Rational fact(1);
    for (int e : alpha) {
        deg += e;
        for (int u = 2; u <= e; ++u) fact *= u;
    }
    std::vector<GaussianRational> out(taylor.size());
    if (deg >= (int)taylor[0].size()) return out;
    Monomial m(alpha, std::vector<int>(n, 0));
    for (std::size_t a = 0; a < taylor.size(); ++a)
        out[a] = taylor[a][deg].coeff(m) * GaussianRational(fact);
    return out;
}

OsculatingFlag osculating_flag(const PolyMap& f, const std::vector<GaussianRational>& p) {
    Jet j = jet(f, p, f.degree);
    OsculatingFlag flag;
    flag.n = j.n;
    flag.chart = j.chart;
    flag.point = j.point;

    Elim elim;
    std::size_t last_jump = 0;
    for (int l = 0; l <= f.degree; ++l) {
        std::vector<std::vector<GaussianRational>> added;
        for (const auto& alpha : exponent_vectors(j.n, l)) {
            auto v = j.derivative(alpha);
            if (elim.add(v)) added.push_back(std::move(v));
        }
        if (!added.empty()) {
            if ((std::size_t)l != flag.new_vecs.size())
                throw std::logic_error("osculating_flag: derivative flag stalled before height");
            last_jump = (std::size_t)l;
            flag.new_vecs.push_back(std::move(added));
            flag.dims.push_back(elim.rows.size());
        }
    }
    flag.height = last_jump;
    for (std::size_t l = 2; l <= flag.height; ++l)
        flag.type_numbers.push_back(flag.dims[l] - flag.dims[l - 1]);
    flag.immersion = flag.height >= 1 && flag.dims[1] - flag.dims[0] == flag.n;
    return flag;
}

FFTower fundamental_forms(const PolyMap& f, const std::vector<GaussianRational>& p) {
    FFTower tower;
    tower.flag = osculating_flag(f, p);
    const OsculatingFlag& flag = tower.flag;
    if (!flag.immersion)
        throw std::invalid_argument("fundamental_forms: not an immersion at this point");
    Jet j = jet(f, p, f.degree);

    // Projected tangent frame and its Gram.
    std::vector<std::vector<GaussianRational>> o0 = flag.basis_up_to(0);
    std::vector<std::vector<GaussianRational>> tangent;
    for (std::size_t i = 0; i < flag.n; ++i) {
        std::vector<int> alpha(flag.n, 0);
        alpha[i] = 1;
        tangent.push_back(orth_complement(j.derivative(alpha), o0));
    }
    Matrix<GaussianRational> g(flag.n, flag.n);
    for (std::size_t a = 0; a < flag.n; ++a)
        for (std::size_t b = 0; b < flag.n; ++b) g(a, b) = herm(tangent[a], tangent[b]);

    for (std::size_t l = 2; l <= flag.height; ++l) {
        auto below = flag.basis_up_to(l - 1);
        std::vector<std::vector<GaussianRational>> w;
        for (const auto& v : flag.new_vecs[l]) w.push_back(orth_complement(v, below));
        const std::size_t rl = w.size();
        Matrix<GaussianRational> G(rl, rl);
        for (std::size_t a = 0; a < rl; ++a)
            for (std::size_t b = 0; b < rl; ++b) G(a, b) = herm(w[a], w[b]);

        // Project the degree-l Taylor parts onto span(w): solve
        // sum_a <w_a, w_m> c_a = <T_l, w_m> with polynomial right sides.
        std::vector<HermitianPoly> rhs;
        for (std::size_t m = 0; m < rl; ++m) {
            HermitianPoly b(flag.n, (int)l, 0);
            for (std::size_t A = 0; A < j.taylor.size(); ++A) {
                if (w[m][A].is_zero()) continue;
                b += j.taylor[A][l] * w[m][A].conj();
            }
            rhs.push_back(std::move(b));
        }
        Matrix<GaussianRational> gt = G.transpose();  // <w_a, w_m> as (m,a)
        Matrix<GaussianRational> gtinv = inverse(gt);
        FFLevel level;
        level.l = (int)l;
        level.form = VectorForm(flag.n, (int)l, rl);
        for (std::size_t a = 0; a < rl; ++a)
            for (std::size_t m = 0; m < rl; ++m) {
                if (gtinv(a, m).is_zero()) continue;
                level.form.components[a] += rhs[m] * gtinv(a, m);
            }
        if (level.form.is_zero()) throw std::logic_error("fundamental_forms: vanishing level");
        level.grams = GramPair{g, G};
        tower.levels.push_back(std::move(level));
    }
    return tower;
}

bool span_equal(const std::vector<VectorForm>& a, const std::vector<VectorForm>& b) {
    if (a.empty() && b.empty()) return true;
    const VectorForm& ref = a.empty() ? b.front() : a.front();
    auto monos = monomial_basis(ref.n, ref.k, 0);
    auto rows_of = [&](const std::vector<VectorForm>& fs) {
        std::vector<std::vector<GaussianRational>> rows;
        for (const auto& f : fs) {
            if (f.n != ref.n || f.k != ref.k)
                throw std::invalid_argument("span_equal: mismatched spaces");
            for (const auto& c : f.components) {
                std::vector<GaussianRational> row(monos.size());
                for (std::size_t m = 0; m < monos.size(); ++m) row[m] = c.coeff(monos[m]);
                rows.push_back(std::move(row));
            }
        }
        return rows;
    };
    auto ra = rows_of(a), rb = rows_of(b);
    auto rank_of = [&](const std::vector<std::vector<GaussianRational>>& rows) {
        Matrix<GaussianRational> m(rows.size(), monos.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t jj = 0; jj < monos.size(); ++jj) m(i, jj) = rows[i][jj];
        return rank(m);
    };
    std::size_t sa = rank_of(ra), sb = rank_of(rb);
    if (sa != sb) return false;
    auto all = ra;
    all.insert(all.end(), rb.begin(), rb.end());
    return rank_of(all) == sa;
}

TypeProfile type_profile(const OsculatingFlag& flag) {
    return TypeProfile{flag.n, flag.type_numbers, flag.height};
}

std::vector<GaussianRational> random_point(const PolyMap& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<GaussianRational> p(f.d + 1);
        p[0] = GaussianRational(1);
        for (std::size_t i = 1; i <= f.d; ++i)
            p[i] = GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        bool good = false;
        for (const auto& v : evaluate(f, p))
            if (!v.is_zero()) good = true;
        if (good) return p;
    }
    throw std::runtime_error("random_point: sampling failed");
}

ConstantTypeReport constant_type_check(const PolyMap& f, std::uint64_t seed, int trials) {
    ConstantTypeReport rep;
    for (int t = 0; t < trials; ++t) {
        auto p = random_point(f, seed + (std::uint64_t)t * 0x9e3779b97f4a7c15ull);
        rep.samples.push_back(type_profile(osculating_flag(f, p)));
    }
    rep.profile = rep.samples.front();
    rep.constant_type = true;
    for (const auto& s : rep.samples)
        if (!(s == rep.profile)) rep.constant_type = false;
    return rep;
}

VectorForm plucker_reference_quadrics(std::size_t n, std::size_t p) {
    if (p != 2 && p != 3) throw std::invalid_argument("plucker_reference_quadrics: p must be 2 or 3");
    const std::size_t nv = n * p;
    auto t = [&](std::size_t i, std::size_t c) { return Monomial::var(nv, i * p + c); };
    // Column pairs, one family per pair; p = 2 has the single family (0,1).
    std::vector<std::pair<std::size_t, std::size_t>> fams;
    if (p == 2)
        fams = {{0, 1}};
    else
        fams = {{1, 2}, {2, 0}, {0, 1}};
    VectorForm h(nv, 2, fams.size() * n * (n - 1) / 2);
    std::size_t a = 0;
    for (auto [c, d] : fams)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                h.components[a].add_term(t(i, c) * t(j, d), GaussianRational(1));
                h.components[a].add_term(t(j, c) * t(i, d), GaussianRational(-1));
                ++a;
            }
    return h;
}

VectorForm plucker_reference_cubics(std::size_t n) {
    if (n < 3) throw std::invalid_argument("plucker_reference_cubics: need n >= 3");
    const std::size_t nv = n * 3;
    auto t = [&](std::size_t i, std::size_t c) { return Monomial::var(nv, i * 3 + c); };
    VectorForm h(nv, 3, n * (n - 1) * (n - 2) / 6);
    std::size_t a = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const std::size_t idx[3] = {i, j, k};
                // signed sum over permutations of (x, y, z) slots
                const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                        {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
                for (int q = 0; q < 6; ++q) {
                    Monomial m = t(idx[perm[q][0]], 0) * t(idx[perm[q][1]], 1) *
                                 t(idx[perm[q][2]], 2);
                    h.components[a].add_term(m, GaussianRational(q < 3 ? 1 : -1));
                }
                ++a;
            }
    return h;
}

namespace {

/// Q_m over m+2 coordinates z^0..z^{m+1}:
/// sum_{A=1}^{m} z^A conj z^A + i (z^0 conj z^{m+1} - z^{m+1} conj z^0).
HermitianPoly hermitian_form_q(std::size_t m) {
    const std::size_t nv = m + 2;
    HermitianPoly q(nv, 1, 1);
    for (std::size_t a = 1; a <= m; ++a)
        q.add_term(Monomial::var(nv, a) * Monomial::cvar(nv, a), GaussianRational(1));
    q.add_term(Monomial::var(nv, 0) * Monomial::cvar(nv, m + 1), GaussianRational::unit_i());
    q.add_term(Monomial::var(nv, m + 1) * Monomial::cvar(nv, 0), -GaussianRational::unit_i());
    return q;
}

}  // namespace

PullbackResult whitney_pullback_check_map(std::size_t n, const PolyMap& f) {
    if (f.d != n + 1 || f.D != 2 * n + 1 || f.degree != 2)
        throw std::invalid_argument("whitney_pullback_check: wrong map shape");
    const std::size_t nv = n + 2;
    // Pull Q_{2n} back through the components.
    HermitianPoly pb(nv, 2, 2);
    for (std::size_t a = 1; a <= 2 * n; ++a)
        pb += f.components[a] * f.components[a].conj_swap();
    pb += (f.components[0] * f.components[2 * n + 1].conj_swap()) * GaussianRational::unit_i();
    pb -= (f.components[2 * n + 1] * f.components[0].conj_swap()) * GaussianRational::unit_i();

    PullbackResult out;
    out.factor = HermitianPoly(nv, 1, 1);
    out.factor.add_term(Monomial::var(nv, 0) * Monomial::cvar(nv, 0), GaussianRational(2));
    out.factor.add_term(Monomial::var(nv, n + 1) * Monomial::cvar(nv, n + 1), GaussianRational(2));
    out.ok = pb == out.factor * hermitian_form_q(n);
    return out;
}

PullbackResult whitney_pullback_check(std::size_t n) {
    return whitney_pullback_check_map(n, whitney_hat(n));
}

}  // namespace rig
