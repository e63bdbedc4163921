#pragma once
// Noncommutative symmetric functions on the complete (S^I) and ribbon (R_I)
// bases. Ribbons multiply by the two-term glueing rule, the algebra embeds
// into the permutation algebra by summing a descent class on the G basis,
// and the commutative image lands in the classical h basis.
#include <string>

#include "hopf/composition.hpp"
#include "hopf/fqsym.hpp"
#include "hopf/lincomb.hpp"
#include "hopf/qpoly.hpp"
#include "hopf/qsym.hpp"
#include "hopf/sym.hpp"

namespace hopf {

enum class NBasis { S, R };

struct NSymElem {
    NBasis basis = NBasis::R;
    CompComb terms;

    bool operator==(const NSymElem& o) const { return basis == o.basis && terms == o.terms; }
    bool operator!=(const NSymElem& o) const { return !(*this == o); }
};

NSymElem ns_single(NBasis basis, const Composition& I, const QPoly& c = QPoly(Rat(1)));

// Triangular change of basis along coarsening: S^I = sum of R_J over all J
// coarser than or equal to I, and R_I = sum of (-1)^{l(I)-l(J)} S^J over the
// same set.
NSymElem nsym_to_basis(const NSymElem& e, NBasis target);

// Product, computed on ribbons by R_I R_J = R_{I.J} + R_{I|>J} (concatenation
// and near-concatenation). Inputs in any basis; result on the R basis.
NSymElem nsym_product(const NSymElem& x, const NSymElem& y);

// Algebra embedding into the permutation algebra: R_I goes to the sum of
// G_sigma over the descent class C(sigma) = I.
FQElem embed_in_fqsym(const NSymElem& e);

// Commutative image: S^I maps to h of the sorted parts of I. Coefficients
// must not involve q.
SymElem nsym_commutative_image(const NSymElem& e);

std::string ns_str(const NSymElem& e);  // "R(3,1) + 2*S(1,1)"

} // namespace hopf
