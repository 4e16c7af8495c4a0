#pragma once

#include <cstddef>
#include <vector>

namespace sarima {

// Row-major dense matrix, sized for state dimensions in the tens.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

    Matrix transpose() const;
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);

// A * B * A'
Matrix sandwich(const Matrix& a, const Matrix& b);

struct LeastSquares {
    std::vector<double> coef;
    std::vector<double> se;        // sigma_hat * sqrt(diag((X'X)^-1))
    std::vector<double> residuals;
    double sigma2 = 0.0;           // SSR / (n - k)
    int df = 0;                    // n - k
};

// Ordinary least squares via Householder QR with column norms checked for
// rank deficiency; throws NumericError("rank ...") when X is singular to
// working precision.
LeastSquares least_squares(const Matrix& X, const std::vector<double>& y);

// Cholesky factor L (lower) of a symmetric positive definite matrix.
// Throws NumericError when the matrix is not positive definite.
Matrix cholesky(const Matrix& a);

// Inverse of an SPD matrix through its Cholesky factor.
Matrix spd_inverse(const Matrix& a);

// Solves a general square system by partial-pivot Gaussian elimination.
std::vector<double> solve(Matrix a, std::vector<double> b);

}  // namespace sarima
