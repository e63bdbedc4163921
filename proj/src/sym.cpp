#include "hopf/sym.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hopf/errors.hpp"
#include "hopf/matrix.hpp"
#include "hopf/tableau.hpp"

namespace hopf {

bool is_partition(const Composition& c) {
    const std::vector<int>& p = c.parts();
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[i - 1]) return false;
    return true;
}

Composition sorted_partition(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Composition(parts);
}

SymElem sym_single(SymBasis basis, const Composition& lambda, const Rat& c) {
    require(is_partition(lambda), "symmetric-function labels must be partitions");
    return SymElem{basis, PartComb::single(lambda, c)};
}

MonoPoly mono_mul(const MonoPoly& a, const MonoPoly& b) {
    return MonoPoly::bilinear(a, b, [](const std::vector<int>& u, const std::vector<int>& v) {
        HOPF_CHECK(u.size() == v.size(), "monomials over different variable counts");
        std::vector<int> w(u.size());
        for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
        return MonoPoly::single(w);
    });
}

namespace {

constexpr int kMaxDegree = 8;
constexpr int kMaxVars = 8;

// All exponent vectors of total degree d in nvars variables.
void exponent_vectors(int d, int nvars, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(nvars, 0);
    std::function<void(int, int)> walk = [&](int pos, int left) {
        if (pos == nvars - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = e;
            walk(pos + 1, left - e);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return;
    }
    walk(0, d);
}

MonoPoly expand_h_part(int p, int nvars) {
    std::vector<std::vector<int>> mons;
    exponent_vectors(p, nvars, mons);
    MonoPoly r;
    for (auto& m : mons) r.add(m, Rat(1));
    return r;
}

MonoPoly expand_label(SymBasis basis, const Composition& lambda, int nvars) {
    MonoPoly r = MonoPoly::single(std::vector<int>(nvars, 0));
    switch (basis) {
        case SymBasis::h:
            for (int p : lambda.parts()) r = mono_mul(r, expand_h_part(p, nvars));
            return r;
        case SymBasis::m: {
            std::vector<int> ex(lambda.parts());
            ex.resize(nvars, 0);
            std::sort(ex.begin(), ex.end());
            MonoPoly s;
            do {
                s.add(ex, Rat(1));
            } while (std::next_permutation(ex.begin(), ex.end()));
            return s;
        }
        case SymBasis::s: {
            MonoPoly s;
            for (const Tableau& t : semistandard_tableaux(lambda.parts(), nvars)) {
                std::vector<int> content(nvars, 0);
                for (const auto& row : t.rows())
                    for (int letter : row) content[letter - 1] += 1;
                s.add(content, Rat(1));
            }
            return s;
        }
    }
    throw internal_error("unknown symmetric-function basis");
}

int degree_of(const SymElem& e) {
    int d = 0;
    for (const auto& [lambda, c] : e.terms.terms()) d = std::max(d, lambda.weight());
    return d;
}

// Coordinates on the monomial basis: the coefficient of m_lambda equals the
// coefficient of the single monomial x^lambda, provided every degree is at
// most the variable count.
PartComb canonical_coordinates(const MonoPoly& p) {
    PartComb coords;
    for (const auto& [ex, c] : p.terms()) {
        std::vector<int> parts;
        for (int e : ex) {
            require(e >= 0, "negative exponent in symmetric polynomial");
            if (e > 0) parts.push_back(e);
        }
        bool canonical = std::is_sorted(parts.begin(), parts.end(), std::greater<int>());
        // Partition-shaped exponents may still sit in the wrong variables
        // (e.g. x_2^2 x_3): only the leftmost representative counts.
        if (canonical) {
            size_t nonzero_prefix = parts.size();
            bool leftmost = true;
            for (size_t i = 0; i < nonzero_prefix; ++i)
                if (ex[i] == 0) leftmost = false;
            if (leftmost) coords.add(Composition(parts), c);
        }
        require(std::accumulate(parts.begin(), parts.end(), 0) <=
                    static_cast<int>(ex.size()),
                "degree exceeds variable count; monomial coordinates would be lossy");
    }
    return coords;
}

PartComb m_coords_of_s(const Composition& lambda) {
    int d = std::max(1, lambda.weight());
    return canonical_coordinates(expand_label(SymBasis::s, lambda, d));
}

SymElem peel_to_schur(PartComb coords) {
    PartComb result;
    while (!coords.is_zero()) {
        // Lexicographically largest remaining label: its Schur coefficient is
        // exactly its monomial coefficient, by unitriangularity of Kostka.
        auto it = std::prev(coords.terms().end());
        Composition lambda = it->first;
        Rat c = it->second;
        result.add(lambda, c);
        coords -= c * m_coords_of_s(lambda);
    }
    return SymElem{SymBasis::s, result};
}

} // namespace

MonoPoly monomial_expand(const SymElem& e, int nvars) {
    require(nvars >= degree_of(e), "need at least as many variables as the degree");
    require_scale(degree_of(e) <= kMaxDegree && nvars <= kMaxVars,
                  "symmetric-function expansion beyond desk scale");
    MonoPoly r;
    for (const auto& [lambda, c] : e.terms.terms()) r += c * expand_label(e.basis, lambda, nvars);
    return r;
}

SymElem schur_from_monomials(const MonoPoly& p) {
    return peel_to_schur(canonical_coordinates(p));
}

SymElem to_schur(const SymElem& e) {
    if (e.basis == SymBasis::s) return e;
    if (e.terms.is_zero()) return SymElem{SymBasis::s, {}};
    return schur_from_monomials(monomial_expand(e, std::max(1, degree_of(e))));
}

SymElem sym_to_basis(const SymElem& e, SymBasis target) {
    if (e.basis == target) return e;
    if (target == SymBasis::s) return to_schur(e);
    PartComb coords = e.basis == SymBasis::m
                          ? e.terms
                          : canonical_coordinates(monomial_expand(e, std::max(1, degree_of(e))));
    if (target == SymBasis::m) return SymElem{target, coords};
    // Target h: solve the change-of-basis system weight by weight.
    PartComb result;
    std::map<int, std::vector<std::pair<Composition, Rat>>> by_weight;
    for (const auto& [mu, c] : coords.terms()) by_weight[mu.weight()].push_back({mu, c});
    for (const auto& [d, entries] : by_weight) {
        std::vector<Composition> lambdas;
        for (const auto& parts : partitions(d)) lambdas.push_back(Composition(parts));
        const int m = static_cast<int>(lambdas.size());
        std::map<Composition, int> index;
        for (int i = 0; i < m; ++i) index[lambdas[i]] = i;
        Matrix<Rat> A(m, m);
        for (int j = 0; j < m; ++j) {
            PartComb col = canonical_coordinates(
                expand_label(SymBasis::h, lambdas[j], std::max(1, d)));
            for (const auto& [mu, c] : col.terms()) A(index.at(mu), j) = c;
        }
        std::vector<Rat> rhs(m, Rat(0));
        for (const auto& [mu, c] : entries) rhs[index.at(mu)] = c;
        auto sol = solve(A, rhs);
        HOPF_CHECK(sol.has_value(), "complete homogeneous basis must be invertible");
        for (int j = 0; j < m; ++j) result.add(lambdas[j], (*sol)[j]);
    }
    return SymElem{SymBasis::h, result};
}

Int z_of(const Composition& lambda) {
    require(is_partition(lambda), "z is defined for partitions");
    std::map<int, long> mult;
    for (int p : lambda.parts()) mult[p] += 1;
    Int z = 1;
    for (const auto& [part, m] : mult) {
        for (long i = 0; i < m; ++i) z *= part;
        z *= factorial(m);
    }
    return z;
}

Rat power_sum_evaluate(const Composition& lambda, const std::vector<Rat>& x) {
    Rat r(1);
    for (int p : lambda.parts()) {
        Rat sum(0);
        for (const Rat& xi : x) {
            Rat pw(1);
            for (int e = 0; e < p; ++e) pw = pw * xi;
            sum = sum + pw;
        }
        r = r * sum;
    }
    return r;
}

std::string sym_str(const SymElem& e) {
    const char* name = e.basis == SymBasis::h ? "h" : e.basis == SymBasis::s ? "s" : "m";
    return e.terms.str(
        [&](const Composition& lambda) {
            std::string s = name;
            s += "[";
            const auto& parts = lambda.parts();
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(parts[i]);
            }
            return s + "]";
        },
        [](const Rat& c) { return to_string(c); });
}

} // namespace hopf
