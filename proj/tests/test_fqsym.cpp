// Free quasi-symmetric functions: product/coproduct/duality, multiplicative
// and primitive bases, the projector onto primitives, q-deformation,
// pseudo-convolution operators and their characteristic polynomials, and
// graded series identities. The coproduct is checked against an independent
// two-alphabet oracle; V against both its defining matrix inversion and the
// projector route; box products against the polynomial realization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hopf/enumerate.hpp"
#include "hopf/errors.hpp"
#include "hopf/fqsym.hpp"
#include "hopf/series.hpp"
#include "hopf/shuffle.hpp"
#include "hopf/word.hpp"

using namespace hopf;

namespace {

const QPoly one(Rat(1));
const QPoly q = QPoly::variable();

Permutation perm(const std::string& s) { return parse_permutation(s); }

PermComb F(const std::string& s) { return PermComb::single(perm(s), one); }

PermComb parse_F_comb(const std::vector<std::pair<int, std::string>>& terms) {
    PermComb r;
    for (const auto& [c, s] : terms) r.add(perm(s), QPoly(Rat(c)));
    return r;
}

// Multiply coefficient lists of polynomials in x whose coefficients are QPoly.
std::vector<QPoly> xpoly_mul(const std::vector<QPoly>& a, const std::vector<QPoly>& b) {
    std::vector<QPoly> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<QPoly> xpoly_pow(const std::vector<QPoly>& a, int e) {
    std::vector<QPoly> r{one};
    for (int i = 0; i < e; ++i) r = xpoly_mul(r, a);
    return r;
}

// x - c for a constant c.
std::vector<QPoly> xminus(int c) { return {QPoly(Rat(-c)), one}; }

PermComb evaluate_q(const PermComb& x, const Rat& q0) {
    PermComb r;
    for (const auto& [s, c] : x.terms()) r.add(s, QPoly(c.evaluate(q0)));
    return r;
}

} // namespace

TEST_CASE("product: shifted shuffle on the fundamental basis") {
    CHECK(product_F(F("1"), F("1")) == parse_F_comb({{1, "12"}, {1, "21"}}));
    CHECK(product_F(F("12"), F("1")) ==
          parse_F_comb({{1, "123"}, {1, "132"}, {1, "312"}}));
    CHECK(product_F(fq_unit(), F("312")) == F("312"));

    // Associativity on random-ish basis triples, total degree <= 6.
    for (const auto& a : all_permutations(2))
        for (const auto& b : all_permutations(2))
            for (const auto& c : all_permutations(2)) {
                PermComb fa = PermComb::single(a, one), fb = PermComb::single(b, one),
                         fc = PermComb::single(c, one);
                CHECK(product_F(product_F(fa, fb), fc) == product_F(fa, product_F(fb, fc)));
            }
}

TEST_CASE("coproduct: deconcatenate and standardize, with two-alphabet oracle") {
    PermTensor d1 = coproduct_F(F("1"));
    CHECK(d1.size() == 2);
    CHECK(d1.coeff({Permutation(), perm("1")}) == one);
    CHECK(d1.coeff({perm("1"), Permutation()}) == one);

    PermTensor d312 = coproduct_F(F("312"));
    CHECK(d312.size() == 4);
    CHECK(d312.coeff({Permutation(), perm("312")}) == one);
    CHECK(d312.coeff({perm("1"), perm("12")}) == one);
    CHECK(d312.coeff({perm("21"), perm("1")}) == one);
    CHECK(d312.coeff({perm("312"), Permutation()}) == one);

    // Oracle: realize F_s as the sum of words with Std(w) = s^{-1}, over a
    // doubled alphabet [1..m] + [m+1..2m] whose halves commute with each
    // other. An equivalence class is a pair (u, v) of subwords, and its
    // coefficient is the number of interleavings w of (u, v shifted) with
    // Std(w) = s^{-1}. That count must equal the coefficient of
    // (Std(u)^{-1}, Std(v)^{-1}) in the deconcatenation coproduct.
    for (int n = 3; n <= 4; ++n) {
        const int m = n;
        for (const auto& s : all_permutations(n)) {
            const Permutation target = s.inverse();
            PermTensor delta = coproduct_F(PermComb::single(s, one));
            for (int k = 0; k <= n; ++k) {
                std::vector<Word> us =
                    k == 0 ? std::vector<Word>{Word()} : all_words(k, m);
                std::vector<Word> vs =
                    k == n ? std::vector<Word>{Word()} : all_words(n - k, m);
                for (const auto& u : us)
                    for (const auto& v : vs) {
                        int count = 0;
                        for (unsigned mask = 0; mask < (1u << n); ++mask) {
                            if (__builtin_popcount(mask) != k) continue;
                            std::vector<int> w(n);
                            int iu = 0, iv = 0;
                            for (int p = 0; p < n; ++p)
                                w[p] = (mask >> p) & 1u ? u.letter(++iu)
                                                        : v.letter(++iv) + m;
                            if (standardize(Word(w)) == target) ++count;
                        }
                        QPoly c = delta.coeff(
                            {standardize(u).inverse(), standardize(v).inverse()});
                        CHECK(c == QPoly(Rat(count)));
                    }
            }
        }
    }

    // Coassociativity on every permutation through degree 5.
    for (int n = 0; n <= 5; ++n)
        for (const auto& s : all_permutations(n)) {
            std::map<std::tuple<Permutation, Permutation, Permutation>, QPoly> lhs, rhs;
            PermTensor d = coproduct_F(PermComb::single(s, one));
            for (const auto& [ab, c] : d.terms()) {
                PermTensor da = coproduct_F(PermComb::single(ab.first, one));
                for (const auto& [a12, c2] : da.terms())
                    lhs[{a12.first, a12.second, ab.second}] += c * c2;
                PermTensor db = coproduct_F(PermComb::single(ab.second, one));
                for (const auto& [b12, c2] : db.terms())
                    rhs[{ab.first, b12.first, b12.second}] += c * c2;
            }
            for (auto& [k, v] : lhs) CHECK(v == rhs[k]);
            for (auto& [k, v] : rhs) CHECK(v == lhs[k]);
        }

    // Bialgebra compatibility Delta(xy) = Delta(x)Delta(y), total degree <= 5.
    for (int na = 1; na <= 3; ++na)
        for (int nb = 1; nb + na <= 5 && nb <= 3; ++nb)
            for (const auto& a : all_permutations(na))
                for (const auto& b : all_permutations(nb)) {
                    PermComb fa = PermComb::single(a, one), fb = PermComb::single(b, one);
                    CHECK(coproduct_F(product_F(fa, fb)) ==
                          tensor_multiply(coproduct_F(fa), coproduct_F(fb)));
                }
}

TEST_CASE("duality pairing and self-duality") {
    CHECK(duality_pairing(F("312"), F("231")) == one);
    CHECK(duality_pairing(F("312"), F("312")) == QPoly());
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : all_permutations(n)) {
            FQElem g = fq_single(FQBasis::G, s);
            CHECK(duality_pairing(PermComb::single(s, one), to_F(g)) == one);
        }

    // <x tensor y, Delta z> = <xy, z> for all basis triples, |z| <= 4.
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& a : all_permutations(k))
                for (const auto& b : all_permutations(n - k)) {
                    PermComb fa = PermComb::single(a, one), fb = PermComb::single(b, one);
                    PermComb prod = product_F(fa, fb);
                    PermTensor t = PermTensor::single({a, b}, one);
                    for (const auto& z : all_permutations(n)) {
                        PermComb fz = PermComb::single(z, one);
                        CHECK(tensor_pairing(t, coproduct_F(fz)) ==
                              duality_pairing(prod, fz));
                    }
                }
}

TEST_CASE("multiplicative bases and round trips") {
    CHECK(to_F(fq_single(FQBasis::Fup, perm("312"))) == F("312"));
    CHECK(to_F(fq_single(FQBasis::Fup, perm("12"))) ==
          parse_F_comb({{1, "12"}, {1, "21"}}));
    CHECK(to_F(fq_single(FQBasis::G, perm("312"))) == F("231"));

    for (int n = 0; n <= 4; ++n)
        for (const auto& s : all_permutations(n))
            for (FQBasis b : {FQBasis::G, FQBasis::Fup, FQBasis::Gup, FQBasis::V}) {
                FQElem e = fq_single(b, s, one + q);
                FQElem back = from_F(to_F(e), b);
                CHECK(back.basis == b);
                CHECK(back.terms == e.terms);
            }

    // A mixed-degree element with polynomial coefficients survives the trip.
    PermComb x = parse_F_comb({{2, "1"}, {-3, "21"}, {1, "312"}}) + F("12") * q;
    for (FQBasis b : {FQBasis::G, FQBasis::Fup, FQBasis::Gup, FQBasis::V})
        CHECK(to_F(from_F(x, b)) == x);

    // One degree-5 spot check of the round trip.
    FQElem e5 = fq_single(FQBasis::V, perm("45312"));
    FQElem back5 = from_F(to_F(e5), FQBasis::V);
    CHECK(back5.terms == e5.terms);
}

TEST_CASE("primitive basis V: adjoint-definition matrix route") {
    CHECK(primitive_basis_V(perm("312")) == parse_F_comb({{1, "312"}, {-1, "213"}}));
    CHECK(primitive_basis_V(perm("231")) == parse_F_comb({{-1, "132"}, {1, "231"}}));
    CHECK(primitive_basis_V(perm("321")) ==
          parse_F_comb({{1, "123"}, {-1, "132"}, {-1, "213"}, {1, "321"}}));

    const std::vector<std::pair<std::string, std::vector<std::pair<int, std::string>>>>
        degree4 = {
            {"4123", {{1, "4123"}, {-1, "3124"}}},
            {"4132", {{1, "4132"}, {-1, "3124"}, {1, "2134"}, {-1, "2143"}}},
            {"3412", {{-1, "1423"}, {1, "1324"}, {1, "3412"}, {-1, "2314"}}},
            {"3142", {{1, "3142"}, {-1, "2143"}}},
            {"4312", {{-1, "1423"}, {1, "1324"}, {1, "4312"}, {-1, "3214"}}},
            {"2413", {{-1, "1423"}, {1, "1324"}, {1, "2413"}, {-1, "2314"}}},
            {"4213", {{1, "4213"}, {-1, "3214"}}},
            {"2431", {{-1, "1432"}, {1, "2431"}}},
            {"2341", {{-1, "1342"}, {1, "2341"}}},
            {"4231",
             {{1, "1243"}, {-1, "1342"}, {-1, "3124"}, {1, "2134"}, {-1, "2143"}, {1, "4231"}}},
            {"3421", {{1, "1324"}, {-1, "1432"}, {-1, "2314"}, {1, "3421"}}},
            {"3241", {{1, "1243"}, {-1, "1342"}, {-1, "2143"}, {1, "3241"}}},
            {"4321",
             {{-1, "1234"},
              {1, "1243"},
              {1, "1324"},
              {-1, "1432"},
              {1, "2134"},
              {-1, "2143"},
              {-1, "3214"},
              {1, "4321"}}},
        };
    int connected_count = 0;
    for (const auto& s : all_permutations(4))
        if (s.is_connected()) ++connected_count;
    CHECK(connected_count == static_cast<int>(degree4.size()));
    for (const auto& [label, expansion] : degree4)
        CHECK(primitive_basis_V(perm(label)) == parse_F_comb(expansion));

    // V of connected labels is primitive: the reduced coproduct vanishes.
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : all_permutations(n)) {
            if (!s.is_connected()) continue;
            PermComb v = primitive_basis_V(s);
            PermTensor red = coproduct_F(v);
            for (const auto& [t, c] : v.terms()) {
                red.add({Permutation(), t}, QPoly() - c);
                red.add({t, Permutation()}, QPoly() - c);
            }
            CHECK(red.is_zero());
        }
}

TEST_CASE("projector onto primitives agrees with the V basis") {
    CHECK(projector_pi(F("123")).is_zero());
    CHECK(projector_pi(F("12")).is_zero());
    CHECK(projector_pi(F("312")) == parse_F_comb({{1, "312"}, {-1, "213"}}));

    for (int n = 1; n <= 5; ++n)
        for (const auto& s : all_permutations(n)) {
            PermComb image = projector_pi(PermComb::single(s, one));
            if (s.is_connected())
                CHECK(image == primitive_basis_V(s));
            else
                CHECK(image.is_zero());
            // Idempotence.
            CHECK(projector_pi(image) == image);
        }
}

TEST_CASE("splitting projectors compose by joining compositions") {
    for (int n = 1; n <= 4; ++n) {
        auto comps = all_compositions(n);
        for (const auto& s : all_permutations(n)) {
            PermComb fs = PermComb::single(s, one);
            for (const auto& I : comps)
                for (const auto& J : comps)
                    CHECK(splitting_projector(I, splitting_projector(J, fs)) ==
                          splitting_projector(I.join(J), fs));
        }
    }
    // Mismatched weight annihilates.
    CHECK(splitting_projector(Composition({2}), F("312")).is_zero());
    CHECK(splitting_projector(Composition({2, 2}), F("312")).is_zero());
    // The full-weight projector with one part is the identity map.
    CHECK(splitting_projector(Composition({3}), F("312")) == F("312"));
}

TEST_CASE("primitive dimensions match connected permutation counts") {
    for (int n = 1; n <= 6; ++n)
        CHECK(Int(primitive_dimension(n)) == count_connected(n, ConnectedRoute::series));
}

TEST_CASE("q-deformed product") {
    PermComb p = q_product(F("1"), F("1"));
    CHECK(p.coeff(perm("12")) == one);
    CHECK(p.coeff(perm("21")) == q);

    for (int na = 1; na <= 3; ++na)
        for (int nb = 1; nb <= 3; ++nb)
            for (const auto& a : all_permutations(na))
                for (const auto& b : all_permutations(nb)) {
                    PermComb fa = PermComb::single(a, one), fb = PermComb::single(b, one);
                    PermComb qp = q_product(fa, fb);
                    // q = 1: the ordinary product.
                    CHECK(evaluate_q(qp, Rat(1)) == product_F(fa, fb));
                    // q = 0: shifted concatenation of the labels.
                    CHECK(evaluate_q(qp, Rat(0)) ==
                          PermComb::single(a.shifted_concat(b), one));
                }
}

TEST_CASE("q-multiplicative basis is unitriangular in lex order") {
    for (int n = 1; n <= 4; ++n) {
        auto basis = all_permutations(n);
        std::map<Permutation, int> idx;
        for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
        for (size_t i = 0; i < basis.size(); ++i) {
            PermComb acc = fq_unit();
            for (const auto& piece : basis[i].connected_factorization())
                acc = q_product(acc, PermComb::single(piece, one));
            CHECK(acc.coeff(basis[i]) == one);
            for (const auto& [t, c] : acc.terms())
                CHECK(idx[t] >= static_cast<int>(i));
        }
    }
}

TEST_CASE("morphism to quantum quasi-symmetric functions") {
    CHECK(phi_q(F("1234")) ==
          LinComb<Composition, QPoly>::single(Composition({4}), one));
    CHECK(phi_q(F("21")) ==
          LinComb<Composition, QPoly>::single(Composition({1, 1}), q));
    CHECK(phi_q(F("312")).coeff(Composition({1, 2})) == q * q);
}

TEST_CASE("pseudo-convolution: box operation and G-basis shuffle") {
    PermComb g11 = box_q(perm("1"), perm("1"));
    CHECK(evaluate_q(g11, Rat(1)) == parse_F_comb({{2, "12"}, {2, "21"}}));

    // The q-shuffle of G realizations matches the subset-splitting box.
    for (int na = 0; na <= 2; ++na)
        for (int nb = 0; nb <= 2; ++nb)
            for (const auto& a : all_permutations(na))
                for (const auto& b : all_permutations(nb))
                    CHECK(gbasis_q_shuffle(a, b) == box_q(a, b));
    CHECK(gbasis_q_shuffle(perm("21"), perm("312")) == box_q(perm("21"), perm("312")));
    CHECK(gbasis_q_shuffle(perm("132"), perm("21")) == box_q(perm("132"), perm("21")));

    // Total coefficient mass of the box at q = 1 is binom(k+l,k)^2 * binom... :
    // each of binom(n,k) splits contributes binom(n,k) shuffle terms.
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 4; ++l) {
            PermComb bx = box_q(Permutation::identity(k), Permutation::identity(l));
            Rat mass(0);
            for (const auto& [s, c] : bx.terms()) mass += c.evaluate(Rat(1));
            Rat expect = Rat(binomial(k + l, k)) * Rat(binomial(k + l, k));
            CHECK(mass == expect);
        }
}

TEST_CASE("pseudo-convolution elements T_n and their characteristic polynomials") {
    PermComb t2 = pseudo_convolution_T(2, false);
    CHECK(t2 == parse_F_comb({{4, "12"}, {2, "21"}}));

    PermComb t3 = pseudo_convolution_T(3, false);
    CHECK(t3 ==
          parse_F_comb({{8, "123"}, {4, "132"}, {4, "213"}, {2, "231"}, {2, "312"}}));

    // T_3(q) at q = 1 equals T_3.
    CHECK(evaluate_q(pseudo_convolution_T(3, true), Rat(1)) == t3);

    CHECK_THROWS_AS(pseudo_convolution_T(6, false), resource_error);
    CHECK_THROWS_AS(pseudo_convolution_T(0, false), domain_error);

    // charpoly(T_4) = (x-2)^6 (x-6)^4 (x-14)^3 (x-18)^3 (x-42)^3 (x-70)
    //                 (x^2-28x+84)^2, compared fully expanded.
    {
        Matrix<QPoly> M = left_mult_matrix(pseudo_convolution_T(4, false), 4);
        std::vector<QPoly> got = berkowitz_charpoly(M);
        std::vector<QPoly> expect{one};
        expect = xpoly_mul(expect, xpoly_pow(xminus(2), 6));
        expect = xpoly_mul(expect, xpoly_pow(xminus(6), 4));
        expect = xpoly_mul(expect, xpoly_pow(xminus(14), 3));
        expect = xpoly_mul(expect, xpoly_pow(xminus(18), 3));
        expect = xpoly_mul(expect, xpoly_pow(xminus(42), 3));
        expect = xpoly_mul(expect, xminus(70));
        std::vector<QPoly> quad{QPoly(Rat(84)), QPoly(Rat(-28)), one};
        expect = xpoly_mul(expect, xpoly_pow(quad, 2));
        REQUIRE(got.size() == expect.size());
        CHECK(got == expect);
    }

    // charpoly(T_3(q)) = (x-2)^2 (x-4-4q-2q^2)^2 (x-8-6q-6q^2) (x-4+2q-2q^2).
    {
        Matrix<QPoly> M = left_mult_matrix(pseudo_convolution_T(3, true), 3);
        std::vector<QPoly> got = berkowitz_charpoly(M);
        auto lin = [](int c0, int c1, int c2) {
            return std::vector<QPoly>{QPoly(std::vector<Rat>{Rat(c0), Rat(c1), Rat(c2)}),
                                      one};
        };
        std::vector<QPoly> expect{one};
        expect = xpoly_mul(expect, xpoly_pow(xminus(2), 2));
        expect = xpoly_mul(expect, xpoly_pow(lin(-4, -4, -2), 2));
        expect = xpoly_mul(expect, lin(-8, -6, -6));
        expect = xpoly_mul(expect, lin(-4, 2, -2));
        REQUIRE(got.size() == expect.size());
        CHECK(got == expect);
    }
}

TEST_CASE("graded series inversion and the omega-series identities") {
    // (1 + F_1)^{-1} = 1 - F_1 + (F_12 + F_21) - (all of S_3) + ...
    PermComb x = fq_unit() + F("1");
    PermComb inv = graded_series_inverse(x, 3);
    PermComb expect = fq_unit() - F("1") + parse_F_comb({{1, "12"}, {1, "21"}});
    for (const auto& s : all_permutations(3)) expect.add(s, QPoly(Rat(-1)));
    CHECK(inv == expect);
    CHECK(truncate_above(product_F(x, inv), 3) == fq_unit());
    CHECK_THROWS_AS(graded_series_inverse(F("1"), 3), domain_error);

    // The three alternating omega-series times their conjectured inverses.
    for (int which = 1; which <= 3; ++which) {
        PermComb h = h_series(which, 4);
        PermComb hinv = h_series_conjectured_inverse(which, 4);
        CHECK(truncate_above(product_F(h, hinv), 4) == fq_unit());
        CHECK(truncate_above(product_F(hinv, h), 4) == fq_unit());
        // And independently: the generic series inverse agrees with the
        // conjectured one.
        CHECK(graded_series_inverse(h, 4) == hinv);
    }

    // The two-blocks series identity extends to degree 6 (it has been
    // observed through degree 8).
    {
        PermComb h = h_series(2, 6);
        CHECK(graded_series_inverse(h, 6) == h_series_conjectured_inverse(2, 6));
    }

    // The doubled-composition conjecture holds through degree 5 but FAILS at
    // degree 6; freeze the negative result so convention changes get noticed.
    {
        PermComb h = h_series(3, 6);
        PermComb cand = h_series_conjectured_inverse(3, 6);
        PermComb truth = graded_series_inverse(h, 6);
        CHECK(truncate_above(truth, 5) == truncate_above(cand, 5));
        CHECK(truth != cand);
    }

    // Spot-check the series contents.
    PermComb h1 = h_series(1, 3);
    CHECK(h1.coeff(Permutation()) == one);
    CHECK(h1.coeff(perm("1")) == QPoly(Rat(-1)));              // I = (1)
    CHECK(h1.coeff(omega_of(Composition({2}))) == QPoly(Rat(-1)));
    CHECK(h1.coeff(omega_of(Composition({1, 1}))) == one);
    PermComb h2 = h_series(2, 4);
    CHECK(h2.size() == 3);
    CHECK(h2.coeff(perm("3412")) == one);  // omega((2,2))
}

TEST_CASE("connected-permutation generating series identities") {
    const int N = 13;
    const std::vector<long long> cn{0, 1,       1,        3,        13,
                                    71,         461,      3447,     29093,
                                    273343,     2829325,  31998903, 392743957};
    // c(t) = 1 - (sum n! t^n)^{-1}.
    Series fact(N);
    for (int n = 0; n < N; ++n) {
        Rat f(1);
        for (int k = 2; k <= n; ++k) f *= Rat(k);
        fact.set_coeff(n, f);
    }
    Series c = Series::one(N) - fact.inverse();
    for (int n = 1; n < N; ++n) CHECK(c.coeff(n) == Rat(cn[n]));
    for (int n = 1; n < N; ++n)
        CHECK(count_connected(n, ConnectedRoute::series) == Int(cn[n]));

    // Hilbert series of the enveloping algebra: prod (1-t^n)^{-c_n}.
    std::vector<Int> expo;
    for (int n = 1; n < N; ++n) expo.push_back(Int(cn[n]));
    Series env = product_one_minus(expo, -1, N);
    const std::vector<long long> envc{1,      1,       2,        5,        19,
                                      93,     574,     4134,     34012,    313231,
                                      3191402, 35635044, 432812643};
    for (int n = 0; n < N; ++n) CHECK(env.coeff(n) == Rat(envc[n]));

    // d(t) = 1 - prod (1-t^n)^{c_n}.
    Series d = Series::one(N) - product_one_minus(expo, +1, N);
    const std::vector<long long> dc{0,      1,       1,        2,        10,
                                    55,     377,     2892,     25007,    239286,
                                    2514113, 28781748, 356825354};
    for (int n = 0; n < N; ++n) CHECK(d.coeff(n) == Rat(dc[n]));
}

TEST_CASE("element rendering") {
    FQElem e{FQBasis::F, parse_F_comb({{1, "312"}, {-1, "213"}})};
    CHECK(fq_str(e) == "-F[213] + F[312]");
    FQElem g{FQBasis::G, PermComb::single(perm("21"), q * q)};
    CHECK(fq_str(g) == "q^2*G[21]");
    FQElem mixed{FQBasis::F, PermComb::single(perm("12"), one + q)};
    CHECK(fq_str(mixed) == "(1 + q)*F[12]");
    CHECK(fq_str(FQElem{FQBasis::V, {}}) == "0");
    CHECK(basis_name(FQBasis::Gup) == "G^");
}
