#pragma once
// Quasi-symmetric functions on the monomial (M) and fundamental (F) bases,
// indexed by compositions, together with the q-deformed product that makes
// the fundamental basis multiply through the q-shuffle of descent-class
// representatives. Coefficients live in Q[q] so the classical algebra
// (q absent) and its deformation share one representation; the M <-> F
// change of basis is the same triangular relation in both.
#include <string>
#include <vector>

#include "hopf/composition.hpp"
#include "hopf/lincomb.hpp"
#include "hopf/qpoly.hpp"
#include "hopf/rational.hpp"

namespace hopf {

using CompComb = LinComb<Composition, QPoly>;

enum class QBasis { M, F };

struct QSymElem {
    QBasis basis = QBasis::F;
    CompComb terms;

    bool operator==(const QSymElem& o) const { return basis == o.basis && terms == o.terms; }
    bool operator!=(const QSymElem& o) const { return !(*this == o); }
};

QSymElem qs_single(QBasis basis, const Composition& I, const QPoly& c = QPoly(Rat(1)));

// Triangular change of basis along refinement: F_I = sum of M_J over all J
// refining I, and M_I = sum of (-1)^{l(J)-l(I)} F_J over the same set.
QSymElem qsym_to_basis(const QSymElem& e, QBasis target);

// Product on the fundamental basis: F_I F_J = sum over the shifted shuffle of
// one representative permutation per factor (the descent-class minimum) of
// F_{C(w)}. The result does not depend on the representatives chosen.
// Inputs in any basis; the result is on the F basis.
QSymElem qsym_product(const QSymElem& x, const QSymElem& y);

// Same with the shuffle replaced by the q-shuffle: each term earns q to the
// number of crossing inversions. Noncommutative for generic q; at q = 1 this
// is qsym_product again.
QSymElem qsym_q_product(const QSymElem& x, const QSymElem& y);

// Value at the finite argument list x (arguments beyond the list are zero).
// M_I sums x_{j_1}^{i_1}...x_{j_r}^{i_r} over strictly increasing j; F_I sums
// x_{j_1}...x_{j_n} over weakly increasing j that are strict across the
// descents of I. Coefficients must not involve q.
Rat qsym_evaluate(const QSymElem& e, const std::vector<Rat>& x);

std::string qs_str(const QSymElem& e);  // "F(2,1) + q*F(1,1,1)"

} // namespace hopf
