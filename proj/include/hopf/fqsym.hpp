#pragma once
// The Hopf algebra of free quasi-symmetric functions on permutation bases:
// F (fundamental), G (its image under inversion), the multiplicative bases
// F^/G^ built from connected factorizations, and the primitive basis V dual
// to G^. Also: the q-deformed product, the polynomial-realization morphism
// to quantum quasi-symmetric functions, pseudo-convolution elements T_n and
// T_n(q) with their regular-representation matrices, and truncated series
// inversion for the product identities on omega-permutation series.
//
// Coefficients are always polynomials in q; plain rational computations use
// constant polynomials. All operations are pure; conversion matrices are
// memoized behind a mutex.
#include <string>
#include <utility>
#include <vector>

#include "hopf/composition.hpp"
#include "hopf/lincomb.hpp"
#include "hopf/matrix.hpp"
#include "hopf/permutation.hpp"
#include "hopf/qpoly.hpp"

namespace hopf {

using PermComb = LinComb<Permutation, QPoly>;
using PermTensor = LinComb<std::pair<Permutation, Permutation>, QPoly>;

enum class FQBasis { F, G, Fup, Gup, V };

std::string basis_name(FQBasis b);  // "F", "G", "F^", "G^", "V"

// A basis-tagged element. Arithmetic across bases goes through the F basis.
struct FQElem {
    FQBasis basis = FQBasis::F;
    PermComb terms;

    bool operator==(const FQElem& o) const { return basis == o.basis && terms == o.terms; }
};

FQElem fq_single(FQBasis basis, const Permutation& s, const QPoly& c = QPoly(Rat(1)));
PermComb fq_unit();  // the empty permutation with coefficient 1

// --- structure maps on F-basis coefficient combinations ---

// F_a F_b via the shifted shuffle (multiplicity free on basis elements).
PermComb product_F(const PermComb& x, const PermComb& y);
// q-deformed product via the shifted q-shuffle; q=1 gives product_F, q=0 the
// shifted-concatenation product.
PermComb q_product(const PermComb& x, const PermComb& y);
// Deconcatenation-standardization coproduct.
PermTensor coproduct_F(const PermComb& x);
// Componentwise product of tensors, (a x b)(c x d) = ac x bd.
PermTensor tensor_multiply(const PermTensor& x, const PermTensor& y);
// Duality pairing <F_s, F_t> = [s^{-1} = t], extended bilinearly.
QPoly duality_pairing(const PermComb& x, const PermComb& y);
// <a x b, c x d> = <a,c><b,d>.
QPoly tensor_pairing(const PermTensor& x, const PermTensor& y);

// --- basis conversions ---

// Expand a tagged element in the F basis.
PermComb to_F(const FQElem& e);
// Express an F-basis combination in the target basis (degreewise exact linear
// solve; degrees above 7 raise resource_error).
FQElem from_F(const PermComb& x, FQBasis target);
FQElem to_basis(const FQElem& e, FQBasis target);

// --- primitives ---

// V_s expanded in the F basis, from the adjoint-basis definition: invert the
// degreewise matrix expressing products of G over connected factors.
PermComb primitive_basis_V(const Permutation& s);
// The degreewise splitting projector attached to a composition:
// F_a -> F of (shifted concatenation of the blockwise standardization of a)
// when |a| = |I|, else 0.
PermComb splitting_projector(const Composition& I, const PermComb& x);
// Projector onto the primitive Lie algebra: alternating sum of the splitting
// projectors. Kills F_a for non-connected a, fixes V_a for connected a.
PermComb projector_pi(const PermComb& x);
// Dimension of the primitive component in degree n (kernel of the reduced
// coproduct). Exact rational rank for n <= 5; for n = 6 a two-sided
// certificate (independent primitives below, modular rank above) whose bounds
// are required to meet.
int primitive_dimension(int n);

// --- morphism to quantum quasi-symmetric functions ---

// F_s -> q^{l(s)} F_{C(s)} on the quasi-symmetric F basis.
LinComb<Composition, QPoly> phi_q(const PermComb& x);

// --- pseudo-convolution ---

// a box_q b: split the values [1, |a|+|b|] in all ways, permute the two value
// sets by a and b, and q-shuffle the resulting words.
PermComb box_q(const Permutation& a, const Permutation& b);
// Independent route: realize G_a and G_b as sums of words over |a|+|b|
// letters, q-shuffle the polynomials, and re-express in the G basis. The full
// expansion is checked before coefficients are extracted.
PermComb gbasis_q_shuffle(const Permutation& a, const Permutation& b);
// T_n = sum_k id_k box id_{n-k} (symbolic_q weights the k-th term by q^k and
// uses the q-shuffle). 1 <= n <= 5.
PermComb pseudo_convolution_T(int n, bool symbolic_q);
// Matrix of left multiplication by x on the span of S_n (lex basis order).
Matrix<QPoly> left_mult_matrix(const PermComb& x, int n);

// --- graded series ---

PermComb truncate_above(const PermComb& x, int N);
PermComb homogeneous_component(const PermComb& x, int n);
// Multiplicative inverse of a graded series with unit constant term,
// truncated above degree N.
PermComb graded_series_inverse(const PermComb& x, int N);
// The three alternating omega-series (which = 1, 2, 3) truncated at degree N:
//   1: sum over all compositions I of (-1)^{l(I)} F_{omega(I)}
//   2: sum over p of (-1)^p F_{omega((2,...,2) with p parts)}
//   3: sum over compositions I of (-1)^{l(I)} F_{omega(2I)}
PermComb h_series(int which, int N);
// Their conjectured inverses sum G over hatted permutations s -> s*alpha(C(s)),
// restricted per series (all permutations / shape (2,...,2) / descents in
// {2,4,...}). Returned in the F basis.
PermComb h_series_conjectured_inverse(int which, int N);

std::string fq_str(const FQElem& e);

} // namespace hopf
