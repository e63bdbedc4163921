#include "hopf/fqsym.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hopf/enumerate.hpp"
#include "hopf/shuffle.hpp"
#include "hopf/word.hpp"

namespace hopf {

namespace {

const QPoly kOne(Rat(1));

// F_a F_b on basis labels: shifted shuffle of the one-line words.
PermComb f_basis_product(const Permutation& a, const Permutation& b) {
    auto sh = shifted_shuffle(Word(a.word()), Word(b.word()));
    PermComb r;
    for (const auto& [w, c] : sh.terms()) r.add(Permutation(w.letters()), QPoly(c));
    return r;
}

PermComb f_basis_q_product(const Permutation& a, const Permutation& b) {
    auto sh = shifted_q_shuffle(Word(a.word()), Word(b.word()));
    PermComb r;
    for (const auto& [w, c] : sh.terms()) r.add(Permutation(w.letters()), c);
    return r;
}

Permutation sconc_all(const std::vector<Permutation>& parts) {
    Permutation acc;
    for (const auto& p : parts) acc = acc.shifted_concat(p);
    return acc;
}

int comb_degree_max(const PermComb& x) {
    int n = 0;
    for (const auto& [s, c] : x.terms()) n = std::max(n, s.size());
    return n;
}

// Expansion of the G^ basis element labelled t in the F basis.
PermComb gup_in_F(const Permutation& t) {
    PermComb acc = fq_unit();
    for (const auto& piece : t.connected_factorization())
        acc = product_F(acc, PermComb::single(piece.inverse(), kOne));
    return acc;
}

// Expansion of the F^ basis element labelled t in the F basis.
PermComb fup_in_F(const Permutation& t) {
    PermComb acc = fq_unit();
    for (const auto& piece : t.connected_factorization())
        acc = product_F(acc, PermComb::single(piece, kOne));
    return acc;
}

constexpr int kConversionDegreeCap = 6;

struct DegreeData {
    std::vector<Permutation> basis;        // lex order
    std::map<Permutation, int> index;
};

const DegreeData& degree_data(int n) {
    static std::mutex mu;
    static std::map<int, DegreeData> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        DegreeData d;
        d.basis = all_permutations(n);
        for (size_t i = 0; i < d.basis.size(); ++i) d.index[d.basis[i]] = static_cast<int>(i);
        it = cache.emplace(n, std::move(d)).first;
    }
    return it->second;
}

// Row t of the matrix: coefficients of the tagged basis element labelled t on
// the F basis (except for V, which is defined by inverting the G^ matrix in
// G coordinates; see primitive_basis_V).
RatMat expansion_matrix(FQBasis b, int n) {
    const auto& dd = degree_data(n);
    const int m = static_cast<int>(dd.basis.size());
    RatMat M(m, m);
    for (int t = 0; t < m; ++t) {
        PermComb row;
        switch (b) {
            case FQBasis::F: row = PermComb::single(dd.basis[t], kOne); break;
            case FQBasis::G: row = PermComb::single(dd.basis[t].inverse(), kOne); break;
            case FQBasis::Fup: row = fup_in_F(dd.basis[t]); break;
            case FQBasis::Gup: row = gup_in_F(dd.basis[t]); break;
            case FQBasis::V: throw internal_error("V handled separately");
        }
        for (const auto& [s, c] : row.terms()) {
            HOPF_CHECK(c.degree() == 0, "rational expansion expected");
            M(t, dd.index.at(s)) = c.coeff(0);
        }
    }
    return M;
}

// G-coordinate expansion matrix of the G^ basis: row t, column s holds the
// coefficient of G_s in the product of G over the connected factors of t.
const RatMat& gup_g_matrix(int n) {
    static std::mutex mu;
    static std::map<int, RatMat> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        const auto& dd = degree_data(n);
        const int m = static_cast<int>(dd.basis.size());
        RatMat M(m, m);
        for (int t = 0; t < m; ++t) {
            PermComb row = gup_in_F(dd.basis[t]);
            for (const auto& [s, c] : row.terms())   // G_sigma has F-label sigma^{-1}
                M(t, dd.index.at(s.inverse())) = c.coeff(0);
        }
        it = cache.emplace(n, std::move(M)).first;
    }
    return it->second;
}

// Matrix whose column s holds the F-coefficients of V_s: the inverse of the
// G-coordinate expansion matrix of the G^ basis.
const RatMat& v_matrix(int n) {
    static std::mutex mu;
    static std::map<int, RatMat> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, inverse(gup_g_matrix(n))).first;
    return it->second;
}

const RatMat& conversion_from_F(FQBasis b, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, RatMat> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(static_cast<int>(b), n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        RatMat Mt = expansion_matrix(b, n).transpose();
        it = cache.emplace(key, inverse(Mt)).first;
    }
    return it->second;
}

// Adds G of the hatted permutation, expressed in the F basis. Hatting
// composes s with a canonical element of its own descent class: the class
// minimum for the all-compositions series, the class maximum for the
// even-shape series. (The minimum variant fails the even-shape identities
// already in degree 4; the maximum variant is the one that verifies.)
void add_hatted(PermComb& acc, const Permutation& s, bool use_class_max) {
    const Composition shape = descent_composition(s);
    Permutation hat = s * (use_class_max ? omega_of(shape) : alpha_of(shape));
    acc.add(hat.inverse(), kOne);  // G_hat expanded in the F basis
}

} // namespace

std::string basis_name(FQBasis b) {
    switch (b) {
        case FQBasis::F: return "F";
        case FQBasis::G: return "G";
        case FQBasis::Fup: return "F^";
        case FQBasis::Gup: return "G^";
        case FQBasis::V: return "V";
    }
    throw internal_error("unknown basis tag");
}

FQElem fq_single(FQBasis basis, const Permutation& s, const QPoly& c) {
    return FQElem{basis, PermComb::single(s, c)};
}

PermComb fq_unit() { return PermComb::single(Permutation(), kOne); }

PermComb product_F(const PermComb& x, const PermComb& y) {
    return PermComb::bilinear(x, y, f_basis_product);
}

PermComb q_product(const PermComb& x, const PermComb& y) {
    return PermComb::bilinear(x, y, f_basis_q_product);
}

PermTensor coproduct_F(const PermComb& x) {
    PermTensor r;
    for (const auto& [s, c] : x.terms()) {
        const auto& w = s.word();
        for (int k = 0; k <= s.size(); ++k) {
            Word u(std::vector<int>(w.begin(), w.begin() + k));
            Word v(std::vector<int>(w.begin() + k, w.end()));
            r.add({standardize(u), standardize(v)}, c);
        }
    }
    return r;
}

PermTensor tensor_multiply(const PermTensor& x, const PermTensor& y) {
    PermTensor r;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            PermComb left = f_basis_product(a.first, b.first);
            PermComb right = f_basis_product(a.second, b.second);
            for (const auto& [l, cl] : left.terms())
                for (const auto& [t, ct] : right.terms()) r.add({l, t}, ca * cb * cl * ct);
        }
    return r;
}

QPoly duality_pairing(const PermComb& x, const PermComb& y) {
    return PermComb::pairing(x, y, [](const Permutation& a, const Permutation& b) {
        return a.inverse() == b ? kOne : QPoly();
    });
}

QPoly tensor_pairing(const PermTensor& x, const PermTensor& y) {
    return PermTensor::pairing(
        x, y,
        [](const std::pair<Permutation, Permutation>& a,
           const std::pair<Permutation, Permutation>& b) {
            return a.first.inverse() == b.first && a.second.inverse() == b.second ? kOne
                                                                                  : QPoly();
        });
}

PermComb to_F(const FQElem& e) {
    switch (e.basis) {
        case FQBasis::F: return e.terms;
        case FQBasis::G: {
            PermComb r;
            for (const auto& [s, c] : e.terms.terms()) r.add(s.inverse(), c);
            return r;
        }
        case FQBasis::Fup: return e.terms.map_terms(fup_in_F);
        case FQBasis::Gup: return e.terms.map_terms(gup_in_F);
        case FQBasis::V: return e.terms.map_terms(primitive_basis_V);
    }
    throw internal_error("unknown basis tag");
}

FQElem from_F(const PermComb& x, FQBasis target) {
    if (target == FQBasis::F) return FQElem{FQBasis::F, x};
    if (target == FQBasis::G) {
        PermComb r;
        for (const auto& [s, c] : x.terms()) r.add(s.inverse(), c);
        return FQElem{FQBasis::G, r};
    }
    FQElem out{target, {}};
    require_scale(comb_degree_max(x) <= kConversionDegreeCap,
                  "basis conversion capped at degree 7");
    for (int n = 0; n <= comb_degree_max(x); ++n) {
        PermComb part = homogeneous_component(x, n);
        if (part.is_zero()) continue;
        const auto& dd = degree_data(n);
        const int m = static_cast<int>(dd.basis.size());
        std::vector<QPoly> vec(m);
        for (const auto& [s, c] : part.terms()) vec[dd.index.at(s)] = c;
        // Coefficients in the target basis: for F^/G^ rows, solve x = M^T c
        // with the cached (M^T)^{-1}; for V, the F-coordinate matrix of the V
        // basis is gup_g_matrix^{-1}, so its inverse is gup_g_matrix itself.
        const RatMat& inv =
            target == FQBasis::V ? gup_g_matrix(n) : conversion_from_F(target, n);
        for (int i = 0; i < m; ++i) {
            QPoly acc;
            for (int j = 0; j < m; ++j) {
                const Rat& w = inv(i, j);
                if (w.is_zero() || vec[j].is_zero()) continue;
                acc += vec[j] * w;
            }
            if (!acc.is_zero()) out.terms.add(dd.basis[i], acc);
        }
    }
    return out;
}

FQElem to_basis(const FQElem& e, FQBasis target) {
    if (e.basis == target) return e;
    return from_F(to_F(e), target);
}

PermComb primitive_basis_V(const Permutation& s) {
    const int n = s.size();
    require_scale(n <= kConversionDegreeCap, "primitive basis capped at degree 7");
    if (n == 0) return fq_unit();
    const auto& dd = degree_data(n);
    const RatMat& Vm = v_matrix(n);
    const int col = dd.index.at(s);
    PermComb r;
    for (int row = 0; row < Vm.rows(); ++row)
        if (!Vm(row, col).is_zero()) r.add(dd.basis[row], QPoly(Vm(row, col)));
    return r;
}

PermComb splitting_projector(const Composition& I, const PermComb& x) {
    PermComb r;
    for (const auto& [s, c] : x.terms()) {
        auto parts = sfact(I, Word(s.word()));
        if (!parts) continue;
        r.add(sconc_all(*parts), c);
    }
    return r;
}

PermComb projector_pi(const PermComb& x) {
    PermComb r;
    for (const auto& [s, c] : x.terms()) {
        if (s.size() == 0) continue;  // no composition of weight 0 has length >= 1
        for (const auto& I : all_compositions(s.size())) {
            auto parts = sfact(I, Word(s.word()));
            HOPF_CHECK(parts.has_value(), "weights match by construction");
            QPoly signed_c = (I.length() % 2 == 1) ? c : QPoly() - c;
            r.add(sconc_all(*parts), signed_c);
        }
    }
    return r;
}

int primitive_dimension(int n) {
    require(n >= 1, "primitive dimension needs degree >= 1");
    require_scale(n <= 6, "primitive dimension capped at degree 6");
    const auto& dd = degree_data(n);
    const int m = static_cast<int>(dd.basis.size());

    // Rows of the reduced coproduct: pairs of nonempty factors, indexed
    // degreewise through lexicographic permutation indices.
    std::vector<int> row_offset(n, 0);
    int rows = 0;
    for (int k = 1; k <= n - 1; ++k) {
        row_offset[k] = rows;
        rows += static_cast<int>(degree_data(k).basis.size() *
                                 degree_data(n - k).basis.size());
    }
    RatMat M(rows, m);
    for (int col = 0; col < m; ++col) {
        const auto& w = dd.basis[col].word();
        for (int k = 1; k <= n - 1; ++k) {
            Word u(std::vector<int>(w.begin(), w.begin() + k));
            Word v(std::vector<int>(w.begin() + k, w.end()));
            const auto& left = degree_data(k);
            const auto& right = degree_data(n - k);
            int row = row_offset[k] +
                      left.index.at(standardize(u)) * static_cast<int>(right.basis.size()) +
                      right.index.at(standardize(v));
            M(row, col) = M(row, col) + Rat(1);
        }
    }

    if (n <= 5) return m - rank(M);

    // n = 6: sandwich the kernel dimension between two independent bounds.
    int lower = 0;
    for (const auto& s : dd.basis) {
        if (!s.is_connected()) continue;
        PermComb v = projector_pi(PermComb::single(s, kOne));
        // Unitriangularity: leading coefficient 1 on s, all other labels
        // non-connected; distinct leading labels make the family independent.
        HOPF_CHECK(v.coeff(s) == kOne, "projector image lost its leading term");
        for (const auto& [t, c] : v.terms())
            HOPF_CHECK(t == s || !t.is_connected(), "unexpected connected tail term");
        // Primitivity: the reduced coproduct kills the projector image.
        PermTensor red = coproduct_F(v);
        for (const auto& [s2, c2] : v.terms()) {
            red.add({Permutation(), s2}, QPoly() - c2);
            red.add({s2, Permutation()}, QPoly() - c2);
        }
        HOPF_CHECK(red.is_zero(), "projector image is not primitive");
        ++lower;
    }
    const int upper = m - modp_rank(M, 1000003);
    HOPF_CHECK(lower == upper, "primitive dimension bounds disagree");
    return lower;
}

LinComb<Composition, QPoly> phi_q(const PermComb& x) {
    LinComb<Composition, QPoly> r;
    for (const auto& [s, c] : x.terms())
        r.add(descent_composition(s), c * QPoly::monomial(Rat(1), s.length()));
    return r;
}

PermComb box_q(const Permutation& a, const Permutation& b) {
    const int k = a.size(), l = b.size(), n = k + l;
    require_scale(n <= 12, "pseudo-convolution capped at 12 values");
    PermComb r;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> I, J;
        for (int v = 1; v <= n; ++v)
            ((mask >> (v - 1)) & 1u ? I : J).push_back(v);
        std::vector<int> u(k), w(l);
        for (int p = 0; p < k; ++p) u[p] = I[a(p + 1) - 1];
        for (int p = 0; p < l; ++p) w[p] = J[b(p + 1) - 1];
        auto sh = q_shuffle(Word(u), Word(w));
        for (const auto& [word, c] : sh.terms()) r.add(Permutation(word.letters()), c);
    }
    return r;
}

PermComb gbasis_q_shuffle(const Permutation& a, const Permutation& b) {
    const int n = a.size() + b.size();
    require_scale(n <= 6, "polynomial-realization route capped at 6 letters");
    // G_s is realized on n letters as the sum of all words whose
    // standardization is s itself (the dual F_s collects Std(w) = s^{-1}).
    auto realize = [&](const Permutation& s) {
        LinComb<Word, QPoly> series;
        if (s.size() == 0) {
            series.add(Word(), kOne);
            return series;
        }
        for (const auto& w : all_words(s.size(), n))
            if (standardize(w) == s) series.add(w, kOne);
        return series;
    };
    auto left = realize(a);
    auto right = realize(b);
    auto prod = LinComb<Word, QPoly>::bilinear(
        left, right, [](const Word& u, const Word& v) { return q_shuffle(u, v); });
    // Extract G-coefficients from the permutation words, then verify that the
    // full polynomial expansion agrees with the claimed G-combination.
    PermComb out;
    for (const auto& [w, c] : prod.terms()) {
        if (static_cast<int>(w.size()) != n) continue;
        auto letters = w.letters();
        std::vector<int> sorted_letters = letters;
        std::sort(sorted_letters.begin(), sorted_letters.end());
        bool is_perm = true;
        for (int i = 0; i < n; ++i) is_perm = is_perm && sorted_letters[i] == i + 1;
        if (is_perm) out.add(Permutation(letters), c);
    }
    LinComb<Word, QPoly> reconstructed;
    for (const auto& [s, c] : out.terms()) {
        LinComb<Word, QPoly> rs = realize(s);
        for (const auto& [w, unit] : rs.terms()) reconstructed.add(w, c * unit);
    }
    HOPF_CHECK(reconstructed == prod, "G-expansion does not match the word expansion");
    return out;
}

PermComb pseudo_convolution_T(int n, bool symbolic_q) {
    require(n >= 1, "pseudo-convolution element needs n >= 1");
    require_scale(n <= 5, "pseudo-convolution element capped at n = 5");
    // T_n(q) = sum_k S_k shuffle_q S_{n-k}; the q = 1 specialization is T_n.
    // No extra q-power weights: the known characteristic polynomials (see the
    // test suite) pin this normalization down.
    PermComb r;
    for (int k = 0; k <= n; ++k) {
        PermComb term = box_q(Permutation::identity(k), Permutation::identity(n - k));
        if (symbolic_q) {
            r += term;
        } else {
            for (const auto& [s, c] : term.terms()) r.add(s, QPoly(c.evaluate(Rat(1))));
        }
    }
    return r;
}

Matrix<QPoly> left_mult_matrix(const PermComb& x, int n) {
    const auto& dd = degree_data(n);
    const int m = static_cast<int>(dd.basis.size());
    Matrix<QPoly> M(m, m);
    for (const auto& [s, c] : x.terms()) {
        require(s.size() == n, "left multiplication needs a homogeneous element of matching degree");
        for (int t = 0; t < m; ++t) {
            int row = dd.index.at(s * dd.basis[t]);
            M(row, t) += c;
        }
    }
    return M;
}

PermComb truncate_above(const PermComb& x, int N) {
    PermComb r;
    for (const auto& [s, c] : x.terms())
        if (s.size() <= N) r.add(s, c);
    return r;
}

PermComb homogeneous_component(const PermComb& x, int n) {
    PermComb r;
    for (const auto& [s, c] : x.terms())
        if (s.size() == n) r.add(s, c);
    return r;
}

PermComb graded_series_inverse(const PermComb& x, int N) {
    require(N >= 0, "negative truncation order");
    require(x.coeff(Permutation()) == kOne, "series inverse needs unit constant term");
    std::vector<PermComb> xs(N + 1), ys(N + 1);
    for (int k = 0; k <= N; ++k) xs[k] = homogeneous_component(x, k);
    ys[0] = fq_unit();
    for (int d = 1; d <= N; ++d) {
        PermComb acc;
        for (int k = 1; k <= d; ++k) acc += product_F(xs[k], ys[d - k]);
        ys[d] = -acc;
    }
    PermComb r;
    for (int d = 0; d <= N; ++d) r += ys[d];
    return r;
}

PermComb h_series(int which, int N) {
    require(which >= 1 && which <= 3, "series index must be 1, 2 or 3");
    require(N >= 0, "negative truncation order");
    PermComb r = fq_unit();
    switch (which) {
        case 1:
            for (int n = 1; n <= N; ++n)
                for (const auto& I : all_compositions(n))
                    r.add(omega_of(I), I.length() % 2 == 0 ? kOne : QPoly() - kOne);
            break;
        case 2:
            for (int p = 1; 2 * p <= N; ++p) {
                Composition twos(std::vector<int>(p, 2));
                r.add(omega_of(twos), p % 2 == 0 ? kOne : QPoly() - kOne);
            }
            break;
        case 3:
            for (int m = 1; 2 * m <= N; ++m)
                for (const auto& I : all_compositions(m))
                    r.add(omega_of(I.doubled()), I.length() % 2 == 0 ? kOne : QPoly() - kOne);
            break;
    }
    return r;
}

PermComb h_series_conjectured_inverse(int which, int N) {
    require(which >= 1 && which <= 3, "series index must be 1, 2 or 3");
    require(N >= 0, "negative truncation order");
    PermComb r = fq_unit();
    switch (which) {
        case 1:
            for (int n = 1; n <= N; ++n)
                for (const auto& s : all_permutations(n)) add_hatted(r, s, false);
            break;
        case 2:
            for (int p = 1; 2 * p <= N; ++p) {
                Composition twos(std::vector<int>(p, 2));
                for (const auto& s : descent_class(twos)) add_hatted(r, s, true);
            }
            break;
        case 3:
            for (int p = 1; 2 * p <= N; ++p) {
                std::set<int> allowed;
                for (int d = 2; d <= 2 * p - 2; d += 2) allowed.insert(d);
                for (const auto& s : all_permutations(2 * p)) {
                    bool ok = true;
                    for (int d : s.descents()) ok = ok && allowed.count(d) > 0;
                    if (ok) add_hatted(r, s, true);
                }
            }
            break;
    }
    return r;
}

std::string fq_str(const FQElem& e) {
    const std::string name = basis_name(e.basis);
    return e.terms.str(
        [&](const Permutation& s) { return name + "[" + s.str() + "]"; },
        [](const QPoly& c) { return c.str(); });
}

} // namespace hopf
