#include "hopf/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "hopf/series.hpp"

namespace hopf {

std::vector<Permutation> all_permutations(int n) {
    require(n >= 0, "negative size");
    require_scale(n <= 8, "permutation enumeration capped at n = 8");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

namespace {

void compositions_rec(int rest, std::vector<int>& parts, std::vector<Composition>& out) {
    if (rest == 0) {
        out.push_back(Composition(parts));
        return;
    }
    for (int p = 1; p <= rest; ++p) {
        parts.push_back(p);
        compositions_rec(rest - p, parts, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<Composition> all_compositions(int n) {
    require(n >= 0, "negative size");
    require_scale(n <= 20, "composition enumeration capped at n = 20");
    std::vector<Composition> out;
    std::vector<int> parts;
    compositions_rec(n, parts, out);
    return out;
}

std::vector<Word> all_words(int n, int max_letter) {
    require(n >= 0 && max_letter >= 1, "bad word enumeration parameters");
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= max_letter;
        require_scale(total <= 2'000'000, "word enumeration capped at 2e6 items");
    }
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<int> a(n, 1);
    while (true) {
        out.push_back(Word(a));
        int i = n - 1;
        while (i >= 0 && a[i] == max_letter) {
            a[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++a[i];
    }
    return out;
}

Int count_connected(int n, ConnectedRoute route) {
    require(n >= 1, "connected count needs n >= 1");
    if (route == ConnectedRoute::filter) {
        require_scale(n <= 10, "connected-permutation filter capped at n = 10");
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        Int count = 0;
        do {
            bool connected = true;
            int mx = 0;
            for (int k = 1; k < n; ++k) {
                mx = std::max(mx, w[k - 1]);
                if (mx <= k) {
                    connected = false;
                    break;
                }
            }
            if (connected) ++count;
        } while (std::next_permutation(w.begin(), w.end()));
        return count;
    }
    require_scale(n <= 64, "connected-permutation series capped at n = 64");
    Series fact(n + 1);  // sum_k k! t^k, constant term 1 = 0! for invertibility
    Rat f = 1;
    fact.set_coeff(0, 1);
    for (int k = 1; k <= n; ++k) {
        f *= k;
        fact.set_coeff(k, f);
    }
    Series c = Series::one(n + 1) - fact.inverse();
    Rat cn = c.coeff(n);
    HOPF_CHECK(denominator(cn) == 1, "connected count must be an integer");
    return numerator(cn);
}

} // namespace hopf
