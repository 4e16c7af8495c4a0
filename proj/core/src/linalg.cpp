#include "sarima/linalg.hpp"

#include <cmath>
#include <string>

#include "sarima/errors.hpp"

namespace sarima {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ArgumentError("matrix product: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ArgumentError("matrix sum: shape mismatch");
    }
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

Matrix sandwich(const Matrix& a, const Matrix& b) { return a * b * a.transpose(); }

LeastSquares least_squares(const Matrix& X, const std::vector<double>& y) {
    const std::size_t n = X.rows();
    const std::size_t k = X.cols();
    if (y.size() != n) throw ArgumentError("least_squares: length mismatch");
    if (n < k) throw NumericError("least_squares: fewer rows than columns");

    // Householder QR of [X | y], R accumulated in place.
    Matrix a = X;
    std::vector<double> rhs = y;
    for (std::size_t j = 0; j < k; ++j) {
        double norm = 0.0;
        for (std::size_t i = j; i < n; ++i) norm += a(i, j) * a(i, j);
        norm = std::sqrt(norm);
        if (norm < 1e-12) {
            throw NumericError("least_squares: rank deficient design (column " +
                               std::to_string(j) + ")");
        }
        double alpha = (a(j, j) > 0.0) ? -norm : norm;
        std::vector<double> v(n - j);
        v[0] = a(j, j) - alpha;
        for (std::size_t i = j + 1; i < n; ++i) v[i - j] = a(i, j);
        double vnorm2 = 0.0;
        for (double t : v) vnorm2 += t * t;
        if (vnorm2 > 0.0) {
            for (std::size_t c = j; c < k; ++c) {
                double dot = 0.0;
                for (std::size_t i = j; i < n; ++i) dot += v[i - j] * a(i, c);
                double f = 2.0 * dot / vnorm2;
                for (std::size_t i = j; i < n; ++i) a(i, c) -= f * v[i - j];
            }
            double dot = 0.0;
            for (std::size_t i = j; i < n; ++i) dot += v[i - j] * rhs[i];
            double f = 2.0 * dot / vnorm2;
            for (std::size_t i = j; i < n; ++i) rhs[i] -= f * v[i - j];
        }
        a(j, j) = alpha;
    }

    for (std::size_t j = 0; j < k; ++j) {
        if (std::abs(a(j, j)) < 1e-12) {
            throw NumericError("least_squares: rank deficient design (column " +
                               std::to_string(j) + ")");
        }
    }

    // Back substitution on R coef = Q'y.
    std::vector<double> coef(k);
    for (std::size_t jj = k; jj-- > 0;) {
        double s = rhs[jj];
        for (std::size_t c = jj + 1; c < k; ++c) s -= a(jj, c) * coef[c];
        coef[jj] = s / a(jj, jj);
    }

    LeastSquares out;
    out.coef = coef;
    out.residuals.resize(n);
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double fit = 0.0;
        for (std::size_t c = 0; c < k; ++c) fit += X(i, c) * coef[c];
        out.residuals[i] = y[i] - fit;
        ssr += out.residuals[i] * out.residuals[i];
    }
    out.df = static_cast<int>(n - k);
    out.sigma2 = (out.df > 0) ? ssr / out.df : 0.0;

    // (X'X)^-1 = R^-1 R^-T from the triangular factor.
    Matrix rinv(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        rinv(j, j) = 1.0 / a(j, j);
        for (std::size_t i = j; i-- > 0;) {
            double s = 0.0;
            for (std::size_t c = i + 1; c <= j; ++c) s += a(i, c) * rinv(c, j);
            rinv(i, j) = -s / a(i, i);
        }
    }
    out.se.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        double d = 0.0;
        for (std::size_t c = i; c < k; ++c) d += rinv(i, c) * rinv(i, c);
        out.se[i] = std::sqrt(out.sigma2 * d);
    }
    return out;
}

Matrix cholesky(const Matrix& a) {
    if (a.rows() != a.cols()) throw ArgumentError("cholesky: matrix must be square");
    const std::size_t n = a.rows();
    Matrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (std::size_t c = 0; c < j; ++c) s -= l(i, c) * l(j, c);
            if (i == j) {
                if (s <= 0.0) throw NumericError("cholesky: matrix not positive definite");
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

Matrix spd_inverse(const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix l = cholesky(a);
    // Invert L in place (lower triangular).
    Matrix linv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        linv(i, i) = 1.0 / l(i, i);
        for (std::size_t j = 0; j < i; ++j) {
            double s = 0.0;
            for (std::size_t c = j; c < i; ++c) s += l(i, c) * linv(c, j);
            linv(i, j) = -s / l(i, i);
        }
    }
    // A^-1 = L^-T L^-1
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t c = i; c < n; ++c) s += linv(c, i) * linv(c, j);
            inv(i, j) = s;
            inv(j, i) = s;
        }
    }
    return inv;
}

std::vector<double> solve(Matrix a, std::vector<double> b) {
    if (a.rows() != a.cols() || a.rows() != b.size()) {
        throw ArgumentError("solve: shape mismatch");
    }
    const std::size_t n = a.rows();
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (std::abs(a(i, c)) > std::abs(a(pivot, c))) pivot = i;
        }
        if (std::abs(a(pivot, c)) < 1e-300) throw NumericError("solve: singular matrix");
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(pivot, j));
            std::swap(b[c], b[pivot]);
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            double f = a(i, c) / a(c, c);
            if (f == 0.0) continue;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            b[i] -= f * b[c];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

}  // namespace sarima
