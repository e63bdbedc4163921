#include "hopf/rational.hpp"

#include <cctype>

namespace hopf {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

Int factorial(long n) {
    require(n >= 0, "factorial of negative");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int multinomial(const std::vector<long>& parts) {
    long n = 0;
    for (long p : parts) {
        require(p >= 0, "multinomial with negative part");
        n += p;
    }
    Int r = factorial(n);
    for (long p : parts) r /= factorial(p);
    return r;
}

Rat parse_rat(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    std::string t = s.substr(a, b - a);
    if (t.empty()) throw parse_error("empty rational literal");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(t));
        Int num(t.substr(0, slash));
        Int den(t.substr(slash + 1));
        if (den.is_zero()) throw parse_error("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw parse_error("bad rational literal: " + s);
    }
}

std::string to_string(const Rat& x) { return x.str(); }
std::string to_string(const Int& x) { return x.str(); }

} // namespace hopf
