#pragma once

#include "rig/spaces.hpp"

#include <optional>

namespace rig {

enum class Status { Rigid, NotRigid, Degenerate };

const char* to_string(Status s);

/// Outcome of a rigidity decision. solution_space is a real basis of
/// { P : gamma(H,P) in S1 }; reference_space is the subspace the
/// definition compares against (for Bochner: the kernel of gamma(H, .);
/// for Weyl: skew mixing of H plus pure-trace forms). RIGID means the two
/// spans coincide; NOT_RIGID carries a re-verifiable witness.
struct RigidityVerdict {
    Status status = Status::Degenerate;
    std::optional<VectorForm> witness;
    std::vector<VectorForm> solution_space;
    std::vector<VectorForm> reference_space;

    std::size_t solution_dim() const { return solution_space.size(); }
    std::size_t reference_dim() const { return reference_space.size(); }
};

/// u + u* = 0 exactly.
struct SkewHermitian {
    Matrix<GaussianRational> u;
};

/// gamma(H,P) = <H,Pbar> + <P,Hbar> in S^{k,k}. Hermitian-symmetric
/// (fixed by conj_swap) and real-linear in P.
HermitianPoly gamma(const VectorForm& h, const VectorForm& p, const GramPair& grams);

/// True iff the r x dim S^{k,0} coefficient matrix of H has rank r,
/// i.e. the associated map S^{k,0}(V) -> W is surjective.
bool nondegenerate(const VectorForm& h);

/// Coefficient matrix of H: rows indexed by components, columns by the
/// monomial basis of S^{k,0}.
Matrix<GaussianRational> coefficient_matrix(const VectorForm& h);

/// Bochner rigidity of H: gamma(H,P) in S^{k-1,k-1}_1 must force
/// gamma(H,P) = 0. Decided by two exact kernels over the realified
/// P-space. H = 0 yields DEGENERATE.
RigidityVerdict bochner_rigid(const VectorForm& h, const GramPair& grams);

/// Solve P^a = u^a_b H^b for u and verify skew-Hermitian-ness.
/// Preconditions (H nondegenerate, gamma(H,P) = 0) are enforced.
std::optional<SkewHermitian> recover_skew(const VectorForm& h, const VectorForm& p,
                                          const GramPair& grams);

/// Real basis of { B in S^{1,0} (x) W : <H,Bbar> in S^{k-1,0}_1 }.
std::vector<VectorForm> lemma1_solve(const VectorForm& h, const GramPair& grams);

/// True iff gamma(H,H) lies in S^{k-1,k-1}_1.
bool bochner_flat(const VectorForm& h, const GramPair& grams);

struct IwataniResult {
    bool ok = false;
    Rational r_squared;  // <nu_q, nu_q> for q < n, the scale certificate
};

/// Checks the orthogonality conditions on the vectors nu_i = h^a_{in} w_a
/// of a form in normal shape sum h^a_{in} x^i x^n (x) w_a:
/// <nu_i,nu_j> = 0 for i != j and <nu_n,nu_n> = 4 <nu_q,nu_q> for q < n.
/// Coefficient convention: h^a_{in} is the symmetric-tensor coefficient,
/// half the polynomial coefficient of x^i x^n for i < n.
/// Throws when H is not in normal shape.
IwataniResult iwatani_check(const VectorForm& h, const Matrix<GaussianRational>& G);

/// Builds the normal-shape form with prescribed nu vectors (columns of
/// nu, one per tangent index, each a W-coordinate vector of length r).
VectorForm iwatani_normal_form(std::size_t n, const Matrix<GaussianRational>& nu);

// Realified coordinates of the P-space S^{k,0} (x) W: basis element
// 2*(a*dk + m) is monomial m in component a, +1 is i times it.
std::vector<VectorForm> real_form_basis(std::size_t n, int k, std::size_t r);
VectorForm form_from_real_coords(std::size_t n, int k, std::size_t r,
                                 const std::vector<Rational>& coords);
std::vector<Rational> real_coords_of_form(const VectorForm& f);

}  // namespace rig
