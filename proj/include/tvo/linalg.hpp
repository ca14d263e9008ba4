#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tvo {

using Vec = std::vector<double>;

// Dense row-major matrix. Sizes here are tiny (asset counts, small grids),
// so everything below is written for clarity and determinism, not BLAS speed.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat identity(std::size_t n);

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Vec& data() const { return data_; }
    Vec& data() { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec data_;
};

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);

// A . x
Vec matvec(const Mat& a, const Vec& x);
// x . A  (row vector times matrix)
Vec vecmat(const Vec& x, const Mat& a);
// A . B
Mat matmul(const Mat& a, const Mat& b);
// A . A^T
Mat gram(const Mat& a);

// Lower Cholesky factor of an SPD matrix. Throws NumericalError (tagged
// with `what`) if the matrix is not positive definite.
Mat cholesky_lower(const Mat& spd, const std::string& what = "matrix");

// Solves (L L^T) x = b given the lower factor L.
Vec cholesky_solve(const Mat& chol_lower, const Vec& b);

// mu^T Sigma^{-1} mu via a Cholesky solve of Sigma.
double quadratic_form_inv(const Mat& sigma, const Vec& mu, const std::string& what = "Sigma");

}  // namespace tvo
