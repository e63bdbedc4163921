#include "hopf/series.hpp"

#include <algorithm>
#include <sstream>

namespace hopf {

Series Series::from_poly(const QPoly& p, int order) {
    Series s(order);
    for (int k = 0; k < order && k <= p.degree(); ++k) s.c_[k] = p.coeff(k);
    return s;
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x.is_zero(); });
}

Series Series::operator+(const Series& o) const {
    int n = std::min(order(), o.order());
    Series r(n);
    for (int k = 0; k < n; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    int n = std::min(order(), o.order());
    Series r(n);
    for (int i = 0; i < n; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j < n; ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

Series Series::inverse() const {
    require(!c_[0].is_zero(), "series inverse needs invertible constant term");
    int n = order();
    Series r(n);
    r.c_[0] = Rat(1) / c_[0];
    for (int k = 1; k < n; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc / c_[0];
    }
    return r;
}

Series Series::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Series r = Series::one(order()), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Series one_minus_power(int n, long e, int order) {
    require(n >= 1, "one_minus_power needs n >= 1");
    // (1 - t^n)^e = sum_k C(e, k) (-t^n)^k; exact for integer e of either sign
    // via the generalized binomial C(e,k) = e(e-1)...(e-k+1)/k!.
    Series s(order);
    Rat term(1);
    for (int k = 0; k * n < order; ++k) {
        s.set_coeff(k * n, term * ((k % 2 == 0) ? 1 : -1));
        // update C(e,k) -> C(e,k+1)
        term = term * Rat(e - k) / Rat(k + 1);
    }
    return s;
}

Series product_one_minus(const std::vector<Int>& a, int sign, int order) {
    Series r = Series::one(order);
    for (int n = 1; n < order; ++n) {
        long e = 0;
        if (n - 1 < static_cast<int>(a.size())) {
            e = static_cast<long>(a[n - 1]);
        }
        if (e == 0) continue;
        r = r * one_minus_power(n, sign * e, order);
    }
    return r;
}

std::string Series::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < order(); ++k) {
        if (c_[k].is_zero()) continue;
        Rat a = c_[k];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (k == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << order() << ")";
    return os.str();
}

} // namespace hopf
