#include "rig/float_oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <complex>

namespace rig {

namespace {

template <class EigenMatrix>
std::size_t svd_rank(const EigenMatrix& m, double tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::BDCSVD<EigenMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double cutoff = tol * sv(0);
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return r;
}

}  // namespace

std::size_t float_rank_oracle(const Matrix<Rational>& m, double tol) {
    Eigen::MatrixXd d(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).get_d();
    return svd_rank(d, tol);
}

std::size_t float_rank_oracle(const Matrix<GaussianRational>& m, double tol) {
    Eigen::MatrixXcd d(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            d(i, j) = std::complex<double>(m(i, j).re.get_d(), m(i, j).im.get_d());
    return svd_rank(d, tol);
}

}  // namespace rig
