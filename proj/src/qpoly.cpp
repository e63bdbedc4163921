#include "hopf/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace hopf {

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly QPoly::monomial(const Rat& c, int power) {
    require(power >= 0, "monomial with negative power");
    std::vector<Rat> v(power + 1, Rat(0));
    v[power] = c;
    return QPoly(std::move(v));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-() const {
    std::vector<Rat> v = coeffs_;
    for (auto& c : v) c = -c;
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::pow(int e) const {
    require(e >= 0, "polynomial power must be nonnegative");
    QPoly r(Rat(1)), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rat QPoly::evaluate(const Rat& x) const {
    Rat r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

QPoly QPoly::substitute(const QPoly& x) const {
    QPoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + QPoly(*it);
    return r;
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return QPoly();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
    require(!d.is_zero(), "division by zero polynomial");
    QPoly rem = *this;
    if (rem.degree() < d.degree()) return {QPoly(), rem};
    std::vector<Rat> q(rem.degree() - d.degree() + 1, Rat(0));
    const Rat lc = d.coeffs_.back();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rat c = rem.coeffs_.back() / lc;
        q[k] = c;
        rem -= QPoly::monomial(c, k) * d;
    }
    return {QPoly(std::move(q)), rem};
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rat lc = a.coeffs().back();
        std::vector<Rat> v = a.coeffs();
        for (auto& c : v) c /= lc;
        a = QPoly(std::move(v));
    }
    return a;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
    // Yun's algorithm over a field of characteristic zero.
    std::vector<std::pair<QPoly, int>> out;
    if (p.degree() <= 0) return out;
    QPoly g = qpoly_gcd(p, p.derivative());
    QPoly w = p.divmod(g).first;
    QPoly y = p.derivative().divmod(g).first;
    QPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        QPoly f = qpoly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, i);
        w = w.divmod(f).first;
        y = z.divmod(f).first;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

namespace {

std::vector<Int> divisors_of(Int n) {
    // All positive divisors by trial division (desk-scale values only).
    if (n < 0) n = -n;
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
        if (d > 2000000) break;  // give up on huge prime-ish tails
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

} // namespace

std::vector<std::pair<Rat, int>> rational_roots(const QPoly& p) {
    std::vector<std::pair<Rat, int>> out;
    if (p.degree() <= 0) return out;
    QPoly f = p;
    // strip factors of x first
    int x_mult = 0;
    while (f.coeff(0).is_zero() && f.degree() > 0) {
        f = f.divmod(QPoly::variable()).first;
        ++x_mult;
    }
    if (x_mult > 0) out.emplace_back(Rat(0), x_mult);
    if (f.degree() <= 0) return out;
    // clear denominators so the rational root theorem applies
    Int den = 1;
    for (const auto& c : f.coeffs()) den = boost::multiprecision::lcm(den, denominator(c));
    std::vector<Int> ic;
    for (const auto& c : f.coeffs()) ic.push_back(Int(c * den));
    std::vector<Int> ps = divisors_of(ic.front());
    std::vector<Int> qs = divisors_of(ic.back());
    std::vector<Rat> candidates;
    for (const auto& pn : ps)
        for (const auto& qd : qs) {
            candidates.push_back(Rat(pn, qd));
            candidates.push_back(Rat(-pn, qd));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        if (!f.evaluate(r).is_zero()) continue;
        int mult = 0;
        QPoly lin(std::vector<Rat>{-r, Rat(1)});
        while (f.evaluate(r).is_zero() && f.degree() > 0) {
            f = f.divmod(lin).first;
            ++mult;
        }
        out.emplace_back(r, mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rat& c = coeffs_[k];
        if (c.is_zero()) continue;
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1);
        if (k == 0) {
            os << to_string(a);
        } else {
            if (!unit) os << to_string(a) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

namespace {

struct PolyLex {
    const std::string& s;
    const std::string& var;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool eat_var() {
        skip();
        if (s.compare(i, var.size(), var) == 0) {
            size_t j = i + var.size();
            // must not be a longer identifier
            if (j >= s.size() || !std::isalnum(static_cast<unsigned char>(s[j]))) {
                i = j;
                return true;
            }
        }
        return false;
    }
    Rat number() {
        skip();
        size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        if (j == i) throw parse_error("expected number in polynomial: " + s);
        Rat r = parse_rat(s.substr(i, j - i));
        i = j;
        return r;
    }
    int integer() {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw parse_error("expected exponent in polynomial: " + s);
        int v = std::stoi(s.substr(i, j - i));
        i = j;
        return v;
    }
};

} // namespace

QPoly parse_qpoly(const std::string& s, const std::string& var) {
    PolyLex lx{s, var};
    QPoly acc;
    lx.skip();
    if (lx.i >= lx.s.size()) throw parse_error("empty polynomial text: " + s);
    int sign = lx.eat('-') ? -1 : 1;
    while (true) {
        Rat c(1);
        bool have_coeff = false;
        lx.skip();
        if (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
            c = lx.number();
            have_coeff = true;
        }
        bool have_var = false;
        if (have_coeff) {
            if (lx.eat('*')) {
                if (!lx.eat_var()) throw parse_error("expected variable after '*': " + s);
                have_var = true;
            } else if (lx.eat_var()) {
                have_var = true;
            }
        } else if (lx.eat_var()) {
            have_var = true;
        } else {
            throw parse_error("expected term in polynomial: " + s);
        }
        int power = have_var ? (lx.eat('^') ? lx.integer() : 1) : 0;
        acc += QPoly::monomial(sign > 0 ? c : -c, power);
        lx.skip();
        if (lx.i >= lx.s.size()) break;
        if (lx.eat('+')) sign = 1;
        else if (lx.eat('-')) sign = -1;
        else throw parse_error("unexpected text in polynomial: " + s);
    }
    return acc;
}

} // namespace hopf
