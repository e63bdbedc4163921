#include "hopf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "hopf/enumerate.hpp"

namespace hopf {

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : w_) {
        require(v >= 1 && v <= n, "permutation letter out of range");
        require(!seen[v], "repeated letter in permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    require(n >= 0, "negative permutation size");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    require(n >= 0, "negative permutation size");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& o) const {
    require(size() == o.size(), "composing permutations of different sizes");
    std::vector<int> w(w_.size());
    for (int i = 0; i < size(); ++i) w[i] = w_[o.w_[i] - 1];
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(w_.size());
    for (int i = 0; i < size(); ++i) w[w_[i] - 1] = i + 1;
    return Permutation(std::move(w));
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

int Permutation::maj() const {
    int m = 0;
    for (int d : descents()) m += d;
    return m;
}

std::vector<int> Permutation::descents() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
        if (w_[i - 1] > w_[i]) d.push_back(i);
    return d;
}

bool Permutation::is_connected() const {
    if (size() == 0) return false;
    int mx = 0;
    for (int k = 1; k < size(); ++k) {
        mx = std::max(mx, w_[k - 1]);
        if (mx <= k) return false;
    }
    return true;
}

std::vector<Permutation> Permutation::connected_factorization() const {
    std::vector<Permutation> factors;
    int mx = 0, start = 0;
    for (int k = 1; k <= size(); ++k) {
        mx = std::max(mx, w_[k - 1]);
        if (mx == k) {  // prefix 1..k is a union of earlier blocks; close one here
            std::vector<int> block(w_.begin() + start, w_.begin() + k);
            for (int& v : block) v -= start;
            factors.emplace_back(std::move(block));
            start = k;
        }
    }
    return factors;
}

Permutation Permutation::shifted_concat(const Permutation& o) const {
    std::vector<int> w = w_;
    w.reserve(w_.size() + o.w_.size());
    for (int v : o.w_) w.push_back(v + size());
    return Permutation(std::move(w));
}

std::string Permutation::str() const {
    if (size() == 0) return "[]";
    std::ostringstream out;
    if (size() <= 9) {
        for (int v : w_) out << v;
    } else {
        out << '[';
        for (int i = 0; i < size(); ++i) out << (i ? "," : "") << w_[i];
        out << ']';
    }
    return out.str();
}

Permutation parse_permutation(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw parse_error("empty permutation");
    std::vector<int> w;
    if (t.front() == '[') {
        if (t.back() != ']') throw parse_error("unterminated '[' in permutation");
        std::string inner = t.substr(1, t.size() - 2);
        if (!inner.empty()) {
            std::istringstream in(inner);
            std::string item;
            while (std::getline(in, item, ',')) {
                if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) {
                        return std::isdigit(static_cast<unsigned char>(c));
                    }))
                    throw parse_error("bad entry in permutation: '" + item + "'");
                w.push_back(std::stoi(item));
            }
            if (!inner.empty() && inner.back() == ',')
                throw parse_error("trailing comma in permutation");
        }
    } else {
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw parse_error(std::string("bad character in permutation: '") + c + "'");
            w.push_back(c - '0');
        }
    }
    try {
        return Permutation(std::move(w));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

namespace {

// Ehresmann criterion: s <= t in Bruhat order iff for every k the sorted
// prefix {s(1..k)} is entrywise <= the sorted prefix {t(1..k)}.
bool bruhat_leq(const Permutation& s, const Permutation& t) {
    const int n = s.size();
    std::vector<int> ps, pt;
    ps.reserve(n);
    pt.reserve(n);
    for (int k = 1; k <= n; ++k) {
        ps.insert(std::upper_bound(ps.begin(), ps.end(), s(k)), s(k));
        pt.insert(std::upper_bound(pt.begin(), pt.end(), t(k)), t(k));
        for (int i = 0; i < k; ++i)
            if (ps[i] > pt[i]) return false;
    }
    return true;
}

} // namespace

bool order_leq(const Permutation& s, const Permutation& t, PermOrder which) {
    require(s.size() == t.size(), "comparing permutations of different sizes");
    switch (which) {
        case PermOrder::bruhat:
            return bruhat_leq(s, t);
        case PermOrder::left_weak:
            return t.length() == s.length() + (t * s.inverse()).length();
        case PermOrder::right_weak:
            return t.length() == s.length() + (s.inverse() * t).length();
    }
    throw internal_error("unknown permutation order");
}

Composition descent_composition(const Permutation& s) {
    std::set<int> d;
    for (int i : s.descents()) d.insert(i);
    return Composition::from_descent_set(d, s.size());
}

Permutation alpha_of(const Composition& I) {
    // Draw the ribbon with row 1 on top and each next row starting under the
    // last cell of the previous one; number the cells one column at a time,
    // left to right, bottom to top inside a column; read rows top-first.
    const int n = I.weight();
    const int r = I.length();
    std::vector<int> start(r), len(r);
    int maxcol = 0;
    for (int i = 0; i < r; ++i) {
        start[i] = i == 0 ? 1 : start[i - 1] + len[i - 1] - 1;
        len[i] = I.part(i);
        maxcol = std::max(maxcol, start[i] + len[i] - 1);
    }
    // cell value indexed by (row, col)
    std::vector<std::vector<int>> value(r, std::vector<int>(maxcol + 1, 0));
    int next = 1;
    for (int c = 1; c <= maxcol; ++c)
        for (int row = r - 1; row >= 0; --row)  // bottom to top
            if (c >= start[row] && c < start[row] + len[row]) value[row][c] = next++;
    HOPF_CHECK(next == n + 1, "ribbon numbering miscounted");
    std::vector<int> w;
    w.reserve(n);
    for (int row = 0; row < r; ++row)
        for (int c = start[row]; c < start[row] + len[row]; ++c) w.push_back(value[row][c]);
    return Permutation(std::move(w));
}

Permutation omega_of(const Composition& I) {
    // Hand each run a block of consecutive values, largest block first, each
    // block written in increasing order.
    const int n = I.weight();
    std::vector<int> w;
    w.reserve(n);
    int hi = n;
    for (int i = 0; i < I.length(); ++i) {
        int lo = hi - I.part(i) + 1;
        for (int v = lo; v <= hi; ++v) w.push_back(v);
        hi = lo - 1;
    }
    return Permutation(std::move(w));
}

std::vector<Permutation> descent_class(const Composition& I) {
    std::vector<Permutation> out;
    for (const Permutation& s : all_permutations(I.weight()))
        if (descent_composition(s) == I) out.push_back(s);
    return out;
}

} // namespace hopf
