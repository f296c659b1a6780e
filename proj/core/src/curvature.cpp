#include "rig/curvature.hpp"

#include <stdexcept>

namespace rig {

std::size_t curvature_dim(std::size_t n) { return n * n * (n * n - 1) / 12; }

std::size_t weyl_dim(std::size_t n) {
    if (n < 4) return 0;
    return n * (n + 1) * (n + 2) * (n - 3) / 12;
}

namespace {

Curvature unflatten(std::size_t n, const std::vector<Rational>& v) {
    Curvature r(n);
    // Walk pairs in the same lex order pair_index uses.
    std::vector<std::pair<std::size_t, std::size_t>> pr;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pr.emplace_back(i, j);
    std::size_t idx = 0;
    for (std::size_t p = 0; p < pr.size(); ++p)
        for (std::size_t q = p; q < pr.size(); ++q)
            r.set(pr[p].first, pr[p].second, pr[q].first, pr[q].second, v[idx++]);
    return r;
}

std::vector<Rational> sym_coords(const SymForm& f) {
    std::vector<Rational> out;
    out.reserve(f.r * f.n * (f.n + 1) / 2);
    for (const auto& c : f.components)
        for (std::size_t i = 0; i < f.n; ++i)
            for (std::size_t j = i; j < f.n; ++j) out.push_back(c(i, j));
    return out;
}

SymForm sym_from_coords(std::size_t n, std::size_t r, const std::vector<Rational>& v) {
    SymForm f(n, r);
    std::size_t idx = 0;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                f.components[a](i, j) = v[idx];
                f.components[a](j, i) = v[idx];
                ++idx;
            }
    return f;
}

std::size_t span_rank(const std::vector<std::vector<Rational>>& vecs, std::size_t len) {
    Matrix<Rational> m(vecs.size(), len);
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < len; ++j) m(i, j) = vecs[i][j];
    return rank(m);
}

std::vector<std::vector<Rational>> independent_rows(const std::vector<std::vector<Rational>>& vecs,
                                                    std::size_t len) {
    Matrix<Rational> m(vecs.size(), len);
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < len; ++j) m(i, j) = vecs[i][j];
    RrefResult<Rational> r = rref(std::move(m));
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::vector<Rational> v(len);
        for (std::size_t j = 0; j < len; ++j) v[j] = r.reduced(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<Curvature> curvature_space_basis(std::size_t n) {
    std::size_t m = Curvature::pair_count(n);
    std::size_t vars = m * (m + 1) / 2;
    auto flat_index = [m](std::size_t p, std::size_t q) {
        if (p > q) std::swap(p, q);
        return p * m - p * (p + 1) / 2 + q;
    };
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    // R_{ijkl} - R_{ikjl} + R_{iljk} = 0 on pair coordinates
                    std::vector<Rational> row(vars);
                    row[flat_index(Curvature::pair_index(n, i, j),
                                   Curvature::pair_index(n, k, l))] += 1;
                    row[flat_index(Curvature::pair_index(n, i, k),
                                   Curvature::pair_index(n, j, l))] -= 1;
                    row[flat_index(Curvature::pair_index(n, i, l),
                                   Curvature::pair_index(n, j, k))] += 1;
                    rows.push_back(std::move(row));
                }
    Matrix<Rational> c(rows.size(), vars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < vars; ++j) c(i, j) = rows[i][j];
    auto ker = kernel_basis(c);
    std::vector<Curvature> basis;
    basis.reserve(ker.size());
    for (const auto& v : ker) basis.push_back(unflatten(n, v));
    return basis;
}

Curvature gauss_gamma(const SymForm& h, const SymForm& p) {
    if (h.n != p.n || h.r != p.r) throw std::invalid_argument("gauss_gamma: space mismatch");
    const std::size_t n = h.n;
    Curvature r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    if (Curvature::pair_index(n, i, j) > Curvature::pair_index(n, k, l)) continue;
                    Rational v;
                    for (std::size_t a = 0; a < h.r; ++a) {
                        const auto& hc = h.components[a];
                        const auto& pc = p.components[a];
                        v += hc(i, k) * pc(j, l) + pc(i, k) * hc(j, l) - hc(i, l) * pc(j, k) -
                             pc(i, l) * hc(j, k);
                    }
                    r.set(i, j, k, l, v);
                }
    return r;
}

RicciWeyl ricci_and_weyl(const Curvature& r) {
    const std::size_t n = r.n();
    RicciWeyl out{Matrix<Rational>(n, n), Rational(0), Curvature(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational v;
            for (std::size_t k = 0; k < n; ++k) v += r.at(k, i, k, j);
            out.ricci(i, j) = v;
        }
    for (std::size_t i = 0; i < n; ++i) out.scalar += out.ricci(i, i);

    if (n < 2) return out;
    // Schouten-type tensor A with R - A (kn) g trace-free; for n = 2 the
    // Weyl part vanishes identically and A = (s/4) g does the job.
    Matrix<Rational> a(n, n);
    if (n == 2) {
        Rational c = out.scalar / 4;
        a(0, 0) = c;
        a(1, 1) = c;
    } else {
        Rational sc = out.scalar / (2 * (int)(n - 1));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational v = out.ricci(i, j);
                if (i == j) v -= sc;
                a(i, j) = v / (int)(n - 2);
            }
    }
    auto g = [&](std::size_t i, std::size_t j) { return i == j ? Rational(1) : Rational(0); };
    out.weyl = r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    if (Curvature::pair_index(n, i, j) > Curvature::pair_index(n, k, l)) continue;
                    Rational kn = a(i, k) * g(j, l) + a(j, l) * g(i, k) - a(i, l) * g(j, k) -
                                  a(j, k) * g(i, l);
                    out.weyl.set(i, j, k, l, r.at(i, j, k, l) - kn);
                }
    return out;
}

WeylVerdict weyl_rigid(const SymForm& h) {
    if (!h.is_symmetric()) throw std::invalid_argument("weyl_rigid: H must be symmetric");
    WeylVerdict verdict;
    if (h.is_zero()) return verdict;

    const std::size_t n = h.n;
    const std::size_t r = h.r;
    const std::size_t pdim = r * n * (n + 1) / 2;
    const std::size_t flat_len = Curvature(n).flatten().size();

    // Columns of P -> Weyl(gauss_gamma(H, P)) over the symmetric basis.
    Matrix<Rational> m(flat_len, pdim);
    {
        std::size_t col = 0;
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    SymForm e(n, r);
                    e.components[a](i, j) = 1;
                    e.components[a](j, i) = 1;
                    auto flat = ricci_and_weyl(gauss_gamma(h, e)).weyl.flatten();
                    for (std::size_t row = 0; row < flat_len; ++row) m(row, col) = flat[row];
                    ++col;
                }
    }
    auto ker = kernel_basis(m);
    for (const auto& v : ker) verdict.solution_space.push_back(sym_from_coords(n, r, v));

    // Reference directions: skew mixings v H (v + v^T = 0) and pure-trace
    // forms c_a g. Both always solve, since their Gauss pairing with H has
    // no Weyl component.
    std::vector<std::vector<Rational>> ref;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b) {
            SymForm f(n, r);
            f.components[a] = h.components[b];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) f.components[b](i, j) = -h.components[a](i, j);
            ref.push_back(sym_coords(f));
        }
    for (std::size_t a = 0; a < r; ++a) {
        SymForm f(n, r);
        f.components[a] = Matrix<Rational>::identity(n);
        ref.push_back(sym_coords(f));
    }
    auto ref_basis = independent_rows(ref, pdim);
    for (const auto& v : ref_basis) verdict.reference_space.push_back(sym_from_coords(n, r, v));

    // Sanity: the reference span sits inside the solution span.
    {
        std::vector<std::vector<Rational>> all = ker;
        all.insert(all.end(), ref_basis.begin(), ref_basis.end());
        if (span_rank(all, pdim) != ker.size())
            throw std::logic_error("reference directions escaped the solution space");
    }

    if (ref_basis.size() == ker.size()) {
        verdict.status = Status::Rigid;
        return verdict;
    }
    verdict.status = Status::NotRigid;
    for (const auto& v : ker) {
        if (membership(v, ref_basis)) continue;
        SymForm w = sym_from_coords(n, r, v);
        if (!ricci_and_weyl(gauss_gamma(h, w)).weyl.is_zero())
            throw std::logic_error("witness failed re-verification");
        verdict.witness = std::move(w);
        break;
    }
    if (!verdict.witness) throw std::logic_error("NOT_RIGID without witness");
    return verdict;
}

}  // namespace rig
