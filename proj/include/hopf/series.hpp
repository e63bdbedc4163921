#pragma once
// Truncated formal power series over Rat with an explicit truncation order:
// a Series of order N carries the coefficients of t^0 .. t^{N-1} and all
// operations are exact modulo t^N. Mixed-order arithmetic truncates to the
// smaller order rather than guessing.
#include <vector>
#include <string>

#include "hopf/qpoly.hpp"
#include "hopf/rational.hpp"

namespace hopf {

class Series {
  public:
    explicit Series(int order) : c_(order, Rat(0)) { require(order >= 1, "series order must be >= 1"); }
    Series(std::vector<Rat> coeffs, int order) : c_(std::move(coeffs)) {
        require(order >= 1, "series order must be >= 1");
        c_.resize(order, Rat(0));
    }
    static Series one(int order) {
        Series s(order);
        s.c_[0] = 1;
        return s;
    }
    static Series from_poly(const QPoly& p, int order);

    int order() const { return static_cast<int>(c_.size()); }
    Rat coeff(int k) const { return (k >= 0 && k < order()) ? c_[k] : Rat(0); }
    void set_coeff(int k, const Rat& v) {
        require(k >= 0 && k < order(), "series coefficient out of range");
        c_[k] = v;
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    Series operator*(const Series& o) const;
    bool operator==(const Series& o) const { return c_ == o.c_; }

    Series inverse() const;  // requires invertible constant term
    Series pow(int e) const; // negative e through inverse()

    std::string str(const std::string& var = "t") const;

  private:
    std::vector<Rat> c_;
};

inline bool is_zero(const Series& s) { return s.is_zero(); }

// (1 - t^n)^e modulo t^order, e may be negative.
Series one_minus_power(int n, long e, int order);

// prod_{n>=1} (1 - t^n)^{sign*a_n} modulo t^order; a_n given for n = 1..order-1.
Series product_one_minus(const std::vector<Int>& a, int sign, int order);

} // namespace hopf
