#pragma once

#include "rig/matrix.hpp"

namespace rig {

/// Floating-point rank estimate of the numeric image of an exact matrix,
/// from an SVD with a relative singular-value cutoff. Test-side
/// cross-check only: on disagreement the exact rank wins.
std::size_t float_rank_oracle(const Matrix<Rational>& m, double tol = 1e-9);
std::size_t float_rank_oracle(const Matrix<GaussianRational>& m, double tol = 1e-9);

}  // namespace rig
