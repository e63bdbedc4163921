#include "hopf/composition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hopf {

Composition Composition::from_descent_set(const std::set<int>& des, int n) {
    require(n >= 0, "composition weight must be >= 0");
    if (n == 0) {
        require(des.empty(), "descent set of the empty composition must be empty");
        return Composition();
    }
    std::vector<int> parts;
    int prev = 0;
    for (int d : des) {
        require(d >= 1 && d <= n - 1, "descent out of range");
        parts.push_back(d - prev);
        prev = d;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::set<int> Composition::descent_set() const {
    std::set<int> des;
    int acc = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        des.insert(acc);
    }
    return des;
}

Composition Composition::conjugate() const {
    int n = weight();
    std::set<int> des = descent_set(), comp;
    for (int i = 1; i <= n - 1; ++i)
        if (!des.count(i)) comp.insert(i);
    return from_descent_set(comp, n);
}

Composition Composition::mirror() const {
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::doubled() const {
    std::vector<int> p;
    for (int x : parts_) p.push_back(2 * x);
    return Composition(std::move(p));
}

Composition Composition::concat(const Composition& o) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), o.parts_.begin(), o.parts_.end());
    return Composition(std::move(p));
}

Composition Composition::near_concat(const Composition& o) const {
    require(!parts_.empty() && !o.parts_.empty(), "near-concatenation needs nonempty operands");
    std::vector<int> p = parts_;
    p.back() += o.parts_.front();
    p.insert(p.end(), o.parts_.begin() + 1, o.parts_.end());
    return Composition(std::move(p));
}

Composition Composition::join(const Composition& o) const {
    require(weight() == o.weight(), "join needs equal weights");
    std::set<int> des = descent_set();
    for (int d : o.descent_set()) des.insert(d);
    return from_descent_set(des, weight());
}

bool Composition::refines(const Composition& coarser) const {
    if (weight() != coarser.weight()) return false;
    std::set<int> mine = descent_set();
    for (int d : coarser.descent_set())
        if (!mine.count(d)) return false;
    return true;
}

std::string Composition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

Composition parse_composition(const std::string& s) {
    size_t i = 0, n = s.size();
    auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip();
    if (i >= n || s[i] != '(') throw parse_error("composition must start with '(': " + s);
    ++i;
    std::vector<int> parts;
    skip();
    if (i < n && s[i] == ')') return Composition();  // "()"
    while (true) {
        skip();
        size_t j = i;
        while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw parse_error("expected part in composition: " + s);
        parts.push_back(std::stoi(s.substr(i, j - i)));
        i = j;
        skip();
        if (i < n && s[i] == ',') { ++i; continue; }
        if (i < n && s[i] == ')') { ++i; break; }
        throw parse_error("expected ',' or ')' in composition: " + s);
    }
    skip();
    if (i != n) throw parse_error("trailing text after composition: " + s);
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 1; }))
        throw parse_error("composition parts must be positive: " + s);
    return Composition(std::move(parts));
}

} // namespace hopf
