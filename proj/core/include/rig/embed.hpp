#pragma once

#include "rig/poly.hpp"
#include "rig/spaces.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rig {

/// Homogeneous polynomial map C^{d+1} -> C^{D+1}: D+1 components of a
/// common degree, purely holomorphic, exact coefficients.
struct PolyMap {
    std::size_t d = 0;
    std::size_t D = 0;
    int degree = 0;
    std::string name;
    std::vector<HermitianPoly> components;

    bool validate() const {
        if (components.size() != D + 1) return false;
        bool any = false;
        for (const auto& c : components) {
            if (c.n() != d + 1 || c.l() != 0 || c.k() != degree) return false;
            if (!c.is_zero()) any = true;
        }
        return any;
    }
};

/// Catalog entries:
///   linear(d)        identity map, degree 1
///   veronese(d)      all degree-2 monomials of C^{d+1}
///   plucker(n, p)    n x n minors of [x0 I_n | X], X an n x p variable
///                    block; source C^{np+1}, target C^{C(n+p,n)}
///   whitney_hat(n)   degree-2 sphere-to-sphere map in n+2 variables
///   whitney_ball(n)  projectivized ball map (z0^2, z0 z^i, z^i)
/// Throws std::invalid_argument on unknown names or bad parameters.
PolyMap catalog(const std::string& name, const std::vector<std::size_t>& params);

PolyMap plucker(std::size_t n, std::size_t p);
PolyMap whitney_hat(std::size_t n);
PolyMap whitney_ball(std::size_t n);
PolyMap linear_map(std::size_t d);
PolyMap veronese(std::size_t d);

/// Natural base point of a catalog map (first chart coordinate 1, rest 0,
/// adjusted where that leaves the map's good locus).
std::vector<GaussianRational> base_point(const PolyMap& f);

std::vector<GaussianRational> evaluate(const PolyMap& f, const std::vector<GaussianRational>& p);

/// Exact Taylor data of F at p in the affine chart that sets the first
/// nonzero coordinate of p to 1. taylor[A][l] is the degree-l part of
/// component A expanded around p, a polynomial in the n = d chart
/// directions; its coefficient at s^alpha equals d^alpha F_A(p) / alpha!.
struct Jet {
    std::size_t n = 0;
    std::size_t chart = 0;
    std::vector<GaussianRational> point;  // normalized, point[chart] = 1
    int order = 0;
    std::vector<std::vector<HermitianPoly>> taylor;

    /// d^alpha F(p) as a target vector, alpha over the chart directions.
    std::vector<GaussianRational> derivative(const std::vector<int>& alpha) const;
};

/// Throws std::invalid_argument when F(p) = 0 (outside the good locus).
Jet jet(const PolyMap& f, const std::vector<GaussianRational>& p, int order);

/// Flag O_0 c O_1 c ... c O_tau of spans of derivatives, with the type
/// numbers r_l = dim O_l - dim O_{l-1} for l >= 2 and the height tau
/// (last rank jump; O_{tau+1} = O_tau is verified).
struct OsculatingFlag {
    std::size_t n = 0;  // tangent dimension of the chart
    std::size_t chart = 0;
    std::vector<GaussianRational> point;
    std::vector<std::size_t> dims;                                    // dim O_l, l = 0..tau
    std::vector<std::vector<std::vector<GaussianRational>>> new_vecs;  // added at order l
    std::vector<std::size_t> type_numbers;                            // r_2..r_tau
    std::size_t height = 0;
    bool immersion = false;  // dim O_1 - dim O_0 == n

    std::vector<std::vector<GaussianRational>> basis_up_to(std::size_t l) const {
        std::vector<std::vector<GaussianRational>> out;
        for (std::size_t i = 0; i <= l && i < new_vecs.size(); ++i)
            out.insert(out.end(), new_vecs[i].begin(), new_vecs[i].end());
        return out;
    }
};

OsculatingFlag osculating_flag(const PolyMap& f, const std::vector<GaussianRational>& p);

/// One level of the tower: F^l with its frame metrics. grams.g is the Gram
/// of the projected tangent frame, grams.G the Gram of the W_l frame; both
/// with respect to the standard Hermitian form on the target.
struct FFLevel {
    int l = 0;
    VectorForm form;
    GramPair grams;
};

struct FFTower {
    OsculatingFlag flag;
    std::vector<FFLevel> levels;  // l = 2..tau
};

/// Degree-l Taylor parts projected onto the exact orthogonal complement
/// W_l of O_{l-1} in O_l, expressed in the projected-derivative frame.
FFTower fundamental_forms(const PolyMap& f, const std::vector<GaussianRational>& p);

/// Exact equality of coefficient-vector spans. Forms must share (n,k).
bool span_equal(const std::vector<VectorForm>& a, const std::vector<VectorForm>& b);

/// Type data of a flag, for constant-type comparisons.
struct TypeProfile {
    std::size_t n = 0;
    std::vector<std::size_t> type_numbers;
    std::size_t height = 0;

    friend bool operator==(const TypeProfile& a, const TypeProfile& b) {
        return a.n == b.n && a.type_numbers == b.type_numbers && a.height == b.height;
    }
};

TypeProfile type_profile(const OsculatingFlag& flag);

/// Samples `trials` random small-height rational points (seeded, with
/// rejection off the good locus) and compares type data. constant_type
/// false means some sample collapsed: the caller reports NON_GENERIC.
struct ConstantTypeReport {
    bool constant_type = false;
    TypeProfile profile;  // from the first sample
    std::vector<TypeProfile> samples;
};

ConstantTypeReport constant_type_check(const PolyMap& f, std::uint64_t seed, int trials = 5);

std::vector<GaussianRational> random_point(const PolyMap& f, std::uint64_t seed);

/// Closed-form second fundamental form of plucker(n, p) at the base
/// point, in the chart variables t_{i*p+c} = X(i, c): the 2x2 minors of
/// each column pair of the tangent block. p = 2 gives the n(n-1)/2 forms
/// x^i y^j - x^j y^i; p = 3 the three families (yz, zx, xy minors).
VectorForm plucker_reference_quadrics(std::size_t n, std::size_t p);

/// Closed-form third fundamental form for p = 3: the 3x3 minor cubics
/// x^i y^j z^k + ... - ..., one per triple i < j < k, over 3n variables.
VectorForm plucker_reference_cubics(std::size_t n);

/// Pullback identity of the degree-2 sphere map: the target Hermitian
/// form composed with whitney_hat(n) factors as
/// 2 (xi^0 conj xi^0 + xi^{n+1} conj xi^{n+1}) times the source form.
/// Returns the verdict and the expected factor.
struct PullbackResult {
    bool ok = false;
    HermitianPoly factor;
};

PullbackResult whitney_pullback_check(std::size_t n);

/// Same identity checked against an arbitrary candidate map (used to show
/// the identity is sharp: corrupted coefficients must fail).
PullbackResult whitney_pullback_check_map(std::size_t n, const PolyMap& f);

}  // namespace rig
