#pragma once
// Dense matrices over an arbitrary commutative ring R, with a division-free
// characteristic polynomial (Berkowitz), exact Gaussian elimination over Rat,
// and order-by-order inversion of matrices of polynomials as truncated series.
#include <vector>
#include <optional>
#include <cstdint>

#include "hopf/errors.hpp"
#include "hopf/qpoly.hpp"
#include "hopf/rational.hpp"
#include "hopf/series.hpp"

namespace hopf {

template <class R>
class Matrix {
  public:
    Matrix() : r_(0), c_(0) {}
    Matrix(int r, int c, const R& fill) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, fill) {
        require(r >= 0 && c >= 0, "negative matrix dimension");
    }
    Matrix(int r, int c) : Matrix(r, c, R(0)) {}
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    R& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const R& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    Matrix operator+(const Matrix& o) const {
        require(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch");
        Matrix m = *this;
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = m.a_[k] + o.a_[k];
        return m;
    }
    Matrix operator-(const Matrix& o) const {
        require(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch");
        Matrix m = *this;
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = m.a_[k] - o.a_[k];
        return m;
    }
    Matrix operator*(const Matrix& o) const {
        require(c_ == o.r_, "matrix shape mismatch in product");
        Matrix m(r_, o.c_, R(0));
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const R& x = (*this)(i, k);
                using hopf::is_zero;
                if (is_zero(x)) continue;
                for (int j = 0; j < o.c_; ++j) m(i, j) = m(i, j) + x * o(k, j);
            }
        return m;
    }
    Matrix scale(const R& s) const {
        Matrix m = *this;
        for (auto& x : m.a_) x = x * s;
        return m;
    }
    Matrix transpose() const {
        Matrix m(c_, r_, R(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    std::vector<R> apply(const std::vector<R>& v) const {
        require(static_cast<int>(v.size()) == c_, "matrix/vector shape mismatch");
        std::vector<R> w(r_, R(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) w[i] = w[i] + (*this)(i, j) * v[j];
        return w;
    }

  private:
    int r_, c_;
    std::vector<R> a_;
};

using RatMat = Matrix<Rat>;

// Characteristic polynomial det(xI - A) by the Berkowitz division-free
// algorithm; valid over any commutative ring. Coefficients ascending in x.
template <class R>
std::vector<R> berkowitz_charpoly(const Matrix<R>& A) {
    require(A.rows() == A.cols(), "characteristic polynomial of non-square matrix");
    const int n = A.rows();
    std::vector<R> p{R(1)};  // highest-degree-first during the recursion
    for (int k = 1; k <= n; ++k) {
        std::vector<R> c(k + 1, R(0));
        c[0] = R(1);
        c[1] = R(0) - A(k - 1, k - 1);
        std::vector<R> v(k - 1, R(0));
        for (int i = 0; i < k - 1; ++i) v[i] = A(i, k - 1);
        for (int j = 2; j <= k; ++j) {
            R dot(0);
            for (int i = 0; i < k - 1; ++i) dot = dot + A(k - 1, i) * v[i];
            c[j] = R(0) - dot;
            if (j < k) {
                std::vector<R> w(k - 1, R(0));
                for (int r = 0; r < k - 1; ++r)
                    for (int s = 0; s < k - 1; ++s) w[r] = w[r] + A(r, s) * v[s];
                v = std::move(w);
            }
        }
        std::vector<R> pn(k + 1, R(0));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < k && j <= i; ++j) pn[i] = pn[i] + c[i - j] * p[j];
        p = std::move(pn);
    }
    std::vector<R> asc(p.rbegin(), p.rend());
    return asc;
}

QPoly charpoly(const RatMat& A);

// --- exact linear algebra over the rationals ---

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMat& A);
int rank(RatMat A);
std::vector<std::vector<Rat>> kernel_basis(const RatMat& A);
std::optional<std::vector<Rat>> solve(const RatMat& A, const std::vector<Rat>& b);
RatMat inverse(const RatMat& A);

// Row space membership/intersection helper: echelon basis of the span of rows.
RatMat row_echelon_basis(const RatMat& A);

// Rank over GF(p). Requires all denominators coprime to p. Used only as the
// upper-bound half of exact dimension certificates in tests.
int modp_rank(const RatMat& A, std::uint64_t p);

// Inverse of a polynomial matrix as a matrix of truncated series
// (constant-term matrix must be invertible over the rationals).
Matrix<Series> series_matrix_inverse(const Matrix<QPoly>& M, int order);

} // namespace hopf
