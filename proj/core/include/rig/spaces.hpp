#pragma once

#include "rig/poly.hpp"

#include <optional>

namespace rig {

/// dim S^{k,l} over n variables: C(n+k-1,k) * C(n+l-1,l).
std::size_t space_dim(std::size_t n, int k, int l);

/// All exponent vectors of length n summing to k, in descending
/// lexicographic order (matches the term order of HermitianPoly).
std::vector<std::vector<int>> exponent_vectors(std::size_t n, int k);

/// Basis monomials of S^{k,l}, descending graded-lex.
std::vector<Monomial> monomial_basis(std::size_t n, int k, int l);

/// The S1 generator: sum_{i,j} g_{ij} x^i xbar^j. With g = identity this
/// is sum_i x^i xbar^i.
HermitianPoly s1_generator(std::size_t n, const Matrix<GaussianRational>& g);

/// Columns spanning S^{k-1,l-1}_1 inside S^{k,l}: generator * m for each
/// basis monomial m of S^{k-1,l-1}. Empty when k = 0 or l = 0.
std::vector<HermitianPoly> s1_subspace(std::size_t n, int k, int l,
                                       const Matrix<GaussianRational>& g);

/// Exact division of Q by the S1 generator: Q = gen * quotient + remainder
/// where no remainder term is divisible by the generator's leading
/// monomial x^1 xbar^1. The remainder is a linear projection with kernel
/// exactly S1, so membership and decomposition both fall out of it.
struct S1Reduction {
    HermitianPoly quotient;   // bidegree (k-1, l-1)
    HermitianPoly remainder;  // bidegree (k, l)
};
S1Reduction s1_reduce(const HermitianPoly& q, const Matrix<GaussianRational>& g);

/// Recover f with generator * f = Q exactly, or nullopt when Q is not in S1.
std::optional<HermitianPoly> s1_decompose(const HermitianPoly& q,
                                          const Matrix<GaussianRational>& g);

}  // namespace rig
