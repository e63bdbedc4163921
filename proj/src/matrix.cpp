#include "hopf/matrix.hpp"

#include <algorithm>

namespace hopf {

QPoly charpoly(const RatMat& A) {
    return QPoly(berkowitz_charpoly(A));
}

std::vector<int> rref(RatMat& A) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < A.cols() && row < A.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < A.rows(); ++i)
            if (!A(i, col).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < A.cols(); ++j) std::swap(A(pr, j), A(row, j));
        Rat inv = Rat(1) / A(row, col);
        for (int j = col; j < A.cols(); ++j) A(row, j) *= inv;
        for (int i = 0; i < A.rows(); ++i) {
            if (i == row || A(i, col).is_zero()) continue;
            Rat f = A(i, col);
            for (int j = col; j < A.cols(); ++j) A(i, j) -= f * A(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(RatMat A) { return static_cast<int>(rref(A).size()); }

std::vector<std::vector<Rat>> kernel_basis(const RatMat& A) {
    RatMat E = A;
    std::vector<int> pivots = rref(E);
    std::vector<bool> is_pivot(A.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int freec = 0; freec < A.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Rat> v(A.cols(), Rat(0));
        v[freec] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -E(static_cast<int>(r), freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const RatMat& A, const std::vector<Rat>& b) {
    require(static_cast<int>(b.size()) == A.rows(), "solve: rhs size mismatch");
    RatMat aug(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // inconsistent
    std::vector<Rat> x(A.cols(), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), A.cols());
    return x;
}

RatMat inverse(const RatMat& A) {
    require(A.rows() == A.cols(), "inverse of non-square matrix");
    int n = A.rows();
    RatMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(aug);
    require(static_cast<int>(pivots.size()) == n && pivots[n - 1] == n - 1, "matrix not invertible");
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

RatMat row_echelon_basis(const RatMat& A) {
    RatMat E = A;
    std::vector<int> pivots = rref(E);
    RatMat B(static_cast<int>(pivots.size()), A.cols());
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) B(i, j) = E(i, j);
    return B;
}

int modp_rank(const RatMat& A, std::uint64_t p) {
    auto reduce = [&](const Rat& x) -> std::uint64_t {
        Int num = numerator(x) % Int(p);
        Int den = denominator(x) % Int(p);
        if (num < 0) num += Int(p);
        HOPF_CHECK(den != 0, "modp_rank: denominator divisible by p");
        // Fermat inverse
        std::uint64_t d = static_cast<std::uint64_t>(den), r = 1, e = p - 2, b = d;
        auto mulmod = [&](std::uint64_t u, std::uint64_t v) {
            return static_cast<std::uint64_t>((static_cast<unsigned __int128>(u) * v) % p);
        };
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return mulmod(static_cast<std::uint64_t>(num), r);
    };
    int rows = A.rows(), cols = A.cols();
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = reduce(A(i, j));
    auto mulmod = [&](std::uint64_t u, std::uint64_t v) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(u) * v) % p);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    int rnk = 0;
    for (int col = 0; col < cols && rnk < rows; ++col) {
        int pr = -1;
        for (int i = rnk; i < rows; ++i)
            if (m[i][col] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[pr], m[rnk]);
        std::uint64_t inv = powmod(m[rnk][col], p - 2);
        for (int j = col; j < cols; ++j) m[rnk][j] = mulmod(m[rnk][j], inv);
        for (int i = 0; i < rows; ++i) {
            if (i == rnk || m[i][col] == 0) continue;
            std::uint64_t f = m[i][col];
            for (int j = col; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, m[rnk][j]);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        ++rnk;
    }
    return rnk;
}

Matrix<Series> series_matrix_inverse(const Matrix<QPoly>& M, int order) {
    require(M.rows() == M.cols(), "series inverse of non-square matrix");
    require(order >= 1, "series order must be >= 1");
    const int n = M.rows();
    int maxdeg = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) maxdeg = std::max(maxdeg, M(i, j).degree());
    std::vector<RatMat> Mk(std::max(maxdeg + 1, 1), RatMat(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k <= M(i, j).degree(); ++k) Mk[k](i, j) = M(i, j).coeff(k);
    RatMat X0 = inverse(Mk[0]);
    std::vector<RatMat> X{X0};
    for (int k = 1; k < order; ++k) {
        RatMat acc(n, n);
        for (int j = 1; j <= k && j < static_cast<int>(Mk.size()); ++j)
            acc = acc + Mk[j] * X[k - j];
        X.push_back((X0 * acc).scale(Rat(-1)));
    }
    Matrix<Series> out(n, n, Series(order));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Series s(order);
            for (int k = 0; k < order; ++k) s.set_coeff(k, X[k](i, j));
            out(i, j) = s;
        }
    // postcondition: M * out == I modulo the truncation order
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Series acc(order);
            for (int k = 0; k < n; ++k) acc = acc + Series::from_poly(M(i, k), order) * out(k, j);
            Series expect(order);
            if (i == j) expect = Series::one(order);
            HOPF_CHECK(acc == expect, "series matrix inverse failed to verify");
        }
    return out;
}

} // namespace hopf
