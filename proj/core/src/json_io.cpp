#include "rig/json_io.hpp"

namespace rig {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument(path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) fail(path + "." + key, "missing field");
    return j.at(key);
}

std::size_t size_field(const Json& j, const char* key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        fail(path + "." + key, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

std::vector<int> exps_from_json(const Json& j, std::size_t n, const std::string& path) {
    if (!j.is_array() || j.size() != n) fail(path, "expected an exponent array of length n");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<long long>() < 0)
            fail(path, "exponents must be nonnegative integers");
        out.push_back(e.get<int>());
    }
    return out;
}

}  // namespace

Json to_json(const Rational& x) { return rational_to_string(x); }

Json to_json(const GaussianRational& x) {
    return Json{{"re", rational_to_string(x.re)}, {"im", rational_to_string(x.im)}};
}

Json to_json(const HermitianPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json{{"hol", m.hol},
                             {"antihol", m.antihol},
                             {"re", rational_to_string(c.re)},
                             {"im", rational_to_string(c.im)}});
    return Json{{"n", p.n()}, {"k", p.k()}, {"l", p.l()}, {"terms", std::move(terms)}};
}

Json to_json(const VectorForm& f) {
    Json comps = Json::array();
    for (const auto& c : f.components) {
        Json terms = Json::array();
        for (const auto& [m, v] : c.terms())
            terms.push_back(Json{{"hol", m.hol},
                                 {"antihol", m.antihol},
                                 {"re", rational_to_string(v.re)},
                                 {"im", rational_to_string(v.im)}});
        comps.push_back(std::move(terms));
    }
    return Json{{"n", f.n}, {"k", f.k}, {"r", f.r}, {"components", std::move(comps)}};
}

Json to_json(const Matrix<GaussianRational>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Matrix<Rational>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const GramPair& g) { return Json{{"g", to_json(g.g)}, {"G", to_json(g.G)}}; }

Json to_json(const SymForm& f) {
    Json comps = Json::array();
    for (const auto& c : f.components) comps.push_back(to_json(c));
    return Json{{"n", f.n}, {"r", f.r}, {"components", std::move(comps)}};
}

Json to_json(const RigidityVerdict& v, bool emit_witness) {
    Json out{{"status", to_string(v.status)},
             {"solution_dim", v.solution_dim()},
             {"kernel_dim", v.reference_dim()}};
    if (v.witness && emit_witness) out["witness"] = to_json(*v.witness);
    return out;
}

Json to_json(const WeylVerdict& v, bool emit_witness) {
    Json out{{"status", to_string(v.status)},
             {"solution_dim", v.solution_dim()},
             {"kernel_dim", v.reference_dim()}};
    if (v.witness && emit_witness) out["witness"] = to_json(*v.witness);
    return out;
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
    try {
        return rational_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

GaussianRational gaussian_from_json(const Json& j, const std::string& path) {
    if (j.is_string()) return GaussianRational(rational_from_json(j, path));
    return GaussianRational(rational_from_json(field(j, "re", path), path + ".re"),
                            rational_from_json(field(j, "im", path), path + ".im"));
}

namespace {

void terms_into(HermitianPoly& p, const Json& terms, std::size_t n, const std::string& path) {
    if (!terms.is_array()) fail(path, "expected a term array");
    std::size_t idx = 0;
    for (const auto& t : terms) {
        std::string tp = path + "[" + std::to_string(idx++) + "]";
        Monomial m(exps_from_json(field(t, "hol", tp), n, tp + ".hol"),
                   exps_from_json(field(t, "antihol", tp), n, tp + ".antihol"));
        GaussianRational c(rational_from_json(field(t, "re", tp), tp + ".re"),
                           rational_from_json(field(t, "im", tp), tp + ".im"));
        try {
            p.add_term(m, c);
        } catch (const std::invalid_argument& e) {
            fail(tp, e.what());
        }
    }
}

}  // namespace

HermitianPoly poly_from_json(const Json& j, const std::string& path) {
    std::size_t n = size_field(j, "n", path);
    HermitianPoly p(n, (int)size_field(j, "k", path), (int)size_field(j, "l", path));
    terms_into(p, field(j, "terms", path), n, path + ".terms");
    return p;
}

VectorForm vector_form_from_json(const Json& j, const std::string& path) {
    std::size_t n = size_field(j, "n", path);
    std::size_t r = size_field(j, "r", path);
    VectorForm f(n, (int)size_field(j, "k", path), r);
    const Json& comps = field(j, "components", path);
    if (!comps.is_array() || comps.size() != r)
        fail(path + ".components", "expected r component term lists");
    for (std::size_t a = 0; a < r; ++a) {
        const Json& c = comps[a];
        std::string cp = path + ".components[" + std::to_string(a) + "]";
        terms_into(f.components[a], c.is_object() ? field(c, "terms", cp) : c, n, cp);
    }
    return f;
}

Matrix<GaussianRational> cmatrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of rows");
    std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) fail(path, "expected nonempty rows");
    Matrix<GaussianRational> m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols) fail(path, "ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = gaussian_from_json(
                j[i][c], path + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
    return m;
}

Matrix<Rational> rmatrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of rows");
    std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) fail(path, "expected nonempty rows");
    Matrix<Rational> m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols) fail(path, "ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = rational_from_json(
                j[i][c], path + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
    return m;
}

GramPair grams_from_json(const Json& j, const std::string& path) {
    GramPair g{cmatrix_from_json(field(j, "g", path), path + ".g"),
               cmatrix_from_json(field(j, "G", path), path + ".G")};
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
    return g;
}

SymForm sym_form_from_json(const Json& j, const std::string& path) {
    std::size_t n = size_field(j, "n", path);
    std::size_t r = size_field(j, "r", path);
    SymForm f(n, r);
    const Json& comps = field(j, "components", path);
    if (!comps.is_array() || comps.size() != r)
        fail(path + ".components", "expected r symmetric matrices");
    for (std::size_t a = 0; a < r; ++a) {
        std::string cp = path + ".components[" + std::to_string(a) + "]";
        Matrix<Rational> m = rmatrix_from_json(comps[a], cp);
        if (m.rows() != n || m.cols() != n) fail(cp, "expected an n x n matrix");
        f.components[a] = std::move(m);
    }
    if (!f.is_symmetric()) fail(path, "components must be symmetric");
    return f;
}

}  // namespace rig
