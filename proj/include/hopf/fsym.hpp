#pragma once
// Free symmetric functions: the subalgebra of the permutation algebra spanned
// by the free Schur functions S_t (one per standard tableau t, summing F_sigma
// over the permutations inserting to t). Products expand multiplicity-free in
// free Schur functions; the structure constants are computed two independent
// ways, by tableau shuffles and by regrouping the permutation-algebra product.
#include <string>

#include "hopf/fqsym.hpp"
#include "hopf/lincomb.hpp"
#include "hopf/rational.hpp"
#include "hopf/tableau.hpp"

namespace hopf {

using TabComb = LinComb<Tableau, Rat>;

struct FSymElem {
    TabComb terms;  // labels must be standard tableaux

    bool operator==(const FSymElem& o) const { return terms == o.terms; }
    bool operator!=(const FSymElem& o) const { return !(*this == o); }
};

// S_t = sum of F_sigma over the permutations whose insertion tableau is t.
FQElem free_schur(const Tableau& t);

// Product rule on free Schur labels: S_a S_b = sum of S_t over the standard
// tableaux t whose row reading word appears in the shuffle of the row word of
// a with the plactic class of b shifted by |a|.
FSymElem lr_product(const Tableau& a, const Tableau& b);

// The same product computed independently: multiply the two free Schur
// functions in the permutation algebra and regroup the result by insertion
// tableau, checking that every class is complete with coefficient one.
FSymElem lr_product_via_fqsym(const Tableau& a, const Tableau& b);

std::string fsym_str(const FSymElem& e);  // "S<[1,2],[3]> + S<[1,2,3]>"

} // namespace hopf
