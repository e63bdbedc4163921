#include "hopf/fsym.hpp"

#include <map>
#include <set>

#include "hopf/enumerate.hpp"
#include "hopf/errors.hpp"
#include "hopf/shuffle.hpp"
#include "hopf/word.hpp"

namespace hopf {

FQElem free_schur(const Tableau& t) {
    require(t.is_standard(), "free Schur functions are labelled by standard tableaux");
    PermComb acc;
    for (const Permutation& s : all_permutations(t.size()))
        if (rsk(Word::from_permutation(s)).first == t) acc.add(s, QPoly(Rat(1)));
    return FQElem{FQBasis::F, acc};
}

FSymElem lr_product(const Tableau& a, const Tableau& b) {
    require(a.is_standard() && b.is_standard(), "tableau product needs standard tableaux");
    const int k = a.size();
    const Word u = a.row_word();
    TabComb acc;
    std::set<Tableau> seen;
    for (const Word& v : plactic_class(b.row_word().shifted(k))) {
        LinComb<Word, Rat> sh = shuffle(u, v);
        for (const auto& [w, c] : sh.terms()) {
            HOPF_CHECK(c == Rat(1), "shuffle of disjoint alphabets must be multiplicity free");
            // w contributes when it reads a standard tableau row by row.
            Tableau t = rsk(w).first;
            if (t.row_word() != w) continue;
            HOPF_CHECK(seen.insert(t).second, "tableau met twice in the shuffle rule");
            acc.add(t, Rat(1));
        }
    }
    return FSymElem{acc};
}

FSymElem lr_product_via_fqsym(const Tableau& a, const Tableau& b) {
    PermComb prod = product_F(to_F(free_schur(a)), to_F(free_schur(b)));
    // Regroup by insertion tableau and insist each class arrives whole.
    std::map<Tableau, PermComb> classes;
    for (const auto& [s, c] : prod.terms())
        classes[rsk(Word::from_permutation(s)).first].add(s, c);
    TabComb acc;
    for (const auto& [t, part] : classes) {
        PermComb whole = to_F(free_schur(t));
        HOPF_CHECK(part == whole,
                   "product of free Schur functions split an insertion class");
        acc.add(t, Rat(1));
    }
    return FSymElem{acc};
}

std::string fsym_str(const FSymElem& e) {
    return e.terms.str([](const Tableau& t) { return "S<" + t.str() + ">"; },
                       [](const Rat& c) { return to_string(c); });
}

} // namespace hopf
