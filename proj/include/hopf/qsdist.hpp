#pragma once
// The quasi-symmetric probability distribution on symmetric groups: a
// finitely supported probability vector x assigns each permutation the
// probability obtained by evaluating the fundamental quasi-symmetric function
// of its inverse descent composition at x. The transition operator (the sum
// of all permutations weighted by their probabilities, acting on the regular
// representation) has the power sums p_lambda(x) as eigenvalues, with the
// multiplicity of p_lambda equal to n!/z_lambda; the report verifies this
// exactly, along with the equidistribution of inversions and major index.
#include <string>
#include <utility>
#include <vector>

#include "hopf/composition.hpp"
#include "hopf/matrix.hpp"
#include "hopf/permutation.hpp"
#include "hopf/qsym.hpp"
#include "hopf/rational.hpp"
#include "hopf/sym.hpp"

namespace hopf {

struct SpectrumLine {
    Composition lambda;  // partition of n
    Rat value;           // p_lambda(x)
    Int multiplicity;    // n!/z_lambda
};

struct QSDistReport {
    int n = 0;
    std::vector<Rat> x;                  // the probability vector, as given
    std::vector<Permutation> perms;      // S_n in lexicographic order
    std::vector<Rat> prob;               // aligned with perms
    Matrix<Rat> gamma;                   // left-multiplication matrix on the regular representation
    std::vector<SpectrumLine> spectrum;  // one line per partition of n
    bool spectrum_verified = false;      // eigenvalues and multiplicities certified exactly
    std::string spectrum_method;         // "charpoly" (n <= 4) or "annihilator+rank" (n = 5)
    bool invmaj_verified = false;        // inversion and major-index series agree for this n
};

// Requires x entrywise nonnegative with sum 1 (domain_error otherwise) and
// 1 <= n <= 5 (resource_error above the desk-scale bound).
QSDistReport qs_distribution(const std::vector<Rat>& x, int n);

// Both sides of the inversion/major-index identity as quasi-symmetric-valued
// q-polynomials: sum over S_n of q^{inv sigma} (left) resp. q^{maj sigma}
// (right) times F of the inverse descent composition.
std::pair<CompComb, CompComb> invmaj_sides(int n);

} // namespace hopf
