#pragma once
// Classical symmetric functions at desk scale: the complete homogeneous (h),
// Schur (s), and monomial (m) bases indexed by partitions (weakly decreasing
// compositions). Everything reduces to brute-force monomial expansion in
// k >= degree variables; basis changes solve the resulting triangular
// (Kostka-type) systems exactly over Q.
#include <string>
#include <vector>

#include "hopf/composition.hpp"
#include "hopf/lincomb.hpp"
#include "hopf/rational.hpp"

namespace hopf {

// Partitions reuse Composition with the weakly-decreasing invariant.
bool is_partition(const Composition& c);
Composition sorted_partition(std::vector<int> parts);  // sort descending, drop zeros

using PartComb = LinComb<Composition, Rat>;

enum class SymBasis { h, s, m };

struct SymElem {
    SymBasis basis = SymBasis::h;
    PartComb terms;  // labels must be partitions

    bool operator==(const SymElem& o) const { return basis == o.basis && terms == o.terms; }
    bool operator!=(const SymElem& o) const { return !(*this == o); }
};

SymElem sym_single(SymBasis basis, const Composition& lambda, const Rat& c = Rat(1));

// Polynomials in nvars commuting variables, stored as exponent vectors of
// fixed length nvars.
using MonoPoly = LinComb<std::vector<int>, Rat>;

MonoPoly mono_mul(const MonoPoly& a, const MonoPoly& b);

// Expand into nvars variables. Throws domain_error when nvars is smaller than
// the degree (the expansion would no longer determine the element).
MonoPoly monomial_expand(const SymElem& e, int nvars);

// Read a symmetric polynomial (exponent vectors of equal length k, symmetric,
// every homogeneous degree <= k) back into the Schur basis by peeling the
// triangular Kostka system from the lexicographically largest partition down.
SymElem schur_from_monomials(const MonoPoly& p);

SymElem to_schur(const SymElem& e);
SymElem sym_to_basis(const SymElem& e, SymBasis target);

// z_lambda = prod_i i^{m_i} m_i! for lambda with m_i parts equal to i.
Int z_of(const Composition& lambda);

// p_lambda(x) = prod_j (x_1^{lambda_j} + ... + x_k^{lambda_j}).
Rat power_sum_evaluate(const Composition& lambda, const std::vector<Rat>& x);

std::string sym_str(const SymElem& e);  // "s[2,1] + 2*s[1,1,1]"

} // namespace hopf
