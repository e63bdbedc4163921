#pragma once
// Dense univariate polynomials over Rat (indeterminate conventionally called q,
// also used for characteristic polynomials in x). Invariant: no trailing zero
// coefficients; the zero polynomial has an empty coefficient vector.
#include <vector>
#include <string>

#include "hopf/rational.hpp"

namespace hopf {

class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(const Rat& c) { coeffs_.push_back(c); trim(); }
    explicit QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static QPoly monomial(const Rat& c, int power);
    static QPoly variable() { return monomial(1, 1); }

    // degree of zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rat(0);
    }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }
    bool operator<(const QPoly& o) const { return coeffs_ < o.coeffs_; }

    QPoly pow(int e) const;
    Rat evaluate(const Rat& x) const;
    QPoly substitute(const QPoly& x) const;   // this(x)
    QPoly derivative() const;

    // Euclidean division; divisor must be nonzero.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;

    std::string str(const std::string& var = "q") const;

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

inline bool is_zero(const QPoly& p) { return p.is_zero(); }
inline QPoly operator*(const Rat& c, const QPoly& p) { return QPoly(c) * p; }
inline QPoly operator*(const QPoly& p, const Rat& c) { return p * QPoly(c); }

QPoly qpoly_gcd(QPoly a, QPoly b);  // monic gcd, gcd(0,0) = 0

// Square-free decomposition: returns [(f1,1),(f2,2),...] with
// p = lc * prod fi^i, each fi monic square-free, pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

// All rational roots of p with multiplicities, found by exact candidate
// search over divisors of the trailing/leading coefficients.
std::vector<std::pair<Rat, int>> rational_roots(const QPoly& p);

// Parses sums of terms like "3", "-q", "2*q^3", "1/2*q", "q^2".
QPoly parse_qpoly(const std::string& s, const std::string& var = "q");

} // namespace hopf
