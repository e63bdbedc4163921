#pragma once
// The 0-Hecke algebra of the symmetric group, in exact arithmetic.
//
// The algebra H_n(0) is generated by T_1..T_{n-1} with the braid relations
// and T_i^2 = -T_i, so {T_sigma} (products along reduced words) is a basis.
// Alongside T we support the idempotent-generator bases xi_sigma and
// eta_sigma built from xi_i = 1 + T_i and eta_i = -T_i, and the g basis:
//   epsilon_I = eta_{alpha(I)} xi_{alpha(conjugate(I))},
//   g_sigma   = eta_{sigma alpha(I)^{-1}} epsilon_I   for sigma in the
// descent class D_I = [alpha(I), omega(I)] (left weak order).  Expressing
// 1 = sum a_sigma g_sigma yields the complete orthogonal idempotent family
// e_I = sum over D_I of a_sigma g_sigma, one per composition of n.
//
// Modules are exact matrix representations (one matrix per generator T_i),
// optionally with a combinatorial action table when every generator maps
// each basis vector to 0 or +-(a basis vector).  On top of them we provide
// composition-factor counts (traces of the idempotents), characteristics
// with values in the permutation algebra or in quasi-symmetric functions,
// induction products along the parabolic embedding H_k x H_l -> H_{k+l},
// radical filtrations, the q-Cartan matrix, the quiver, minimal projective
// resolutions, and the resulting Ext generating series.
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopf/composition.hpp"
#include "hopf/fqsym.hpp"
#include "hopf/lincomb.hpp"
#include "hopf/matrix.hpp"
#include "hopf/nsym.hpp"
#include "hopf/permutation.hpp"
#include "hopf/qpoly.hpp"
#include "hopf/qsym.hpp"
#include "hopf/rational.hpp"

namespace hopf {

// ------------------------------------------------------------------ algebra

enum class HBasis { T, Xi, Eta, G };

using HComb = LinComb<Permutation, Rat>;
using HTensor = LinComb<std::pair<Permutation, Permutation>, Rat>;

struct HeckeElem {
    int n = 1;
    HBasis basis = HBasis::T;
    HComb terms;

    bool operator==(const HeckeElem& o) const {
        return n == o.n && basis == o.basis && terms == o.terms;
    }
    bool operator!=(const HeckeElem& o) const { return !(*this == o); }
};

// A reduced word i_1 .. i_l with s = s_{i_1} ... s_{i_l} (adjacent
// transpositions, s_i swapping i and i+1).
std::vector<int> reduced_word(const Permutation& s);

// The set of letters appearing in any reduced word of s (well-defined).
std::set<int> generator_support(const Permutation& s);

HeckeElem h_single(int n, HBasis basis, const Permutation& s, const Rat& c = Rat(1));
HeckeElem h_one(int n);  // multiplicative unit T_identity

// Exact product; inputs in any bases, result on the T basis.  n <= 7.
HeckeElem hecke_multiply(const HeckeElem& x, const HeckeElem& y);

// Exact change of basis.  Conversions involving the g basis, or from T
// into xi, need the triangular solve and require n <= 6.
HeckeElem hecke_to_basis(const HeckeElem& e, HBasis target);

// xi_sigma / eta_sigma / the form-dual basis zeta_sigma, on the T basis.
HComb xi_in_T(int n, const Permutation& s);
HComb eta_in_T(int n, const Permutation& s);
HComb zeta_in_T(int n, const Permutation& s);

// Norton structure for H_n(0) (n <= 6), built once per n and cached
// behind a mutex; the returned reference stays valid for the process.
struct NortonData {
    int n = 1;
    std::map<Composition, HComb> epsilon;     // epsilon_I on the T basis
    std::map<Permutation, HComb> g;           // g_sigma on the T basis
    std::map<Permutation, Rat> unit_coeffs;   // 1 = sum a_sigma g_sigma
    std::map<Composition, HComb> idempotent;  // e_I on the T basis
};
const NortonData& norton_data(int n);

// The symmetrizing form (x, y) = coefficient of T_{longest} in xy.
Rat frobenius_form(const HeckeElem& x, const HeckeElem& y);

// Outer product of two T-basis coordinate vectors inside H (x) H.
HTensor h_tensor(const HComb& x, const HComb& y);

std::string h_str(const HeckeElem& e);  // "T[312] - T[213]"

// ------------------------------------------------------------------ modules

// One entry of a combinatorial action table: T_i sends a basis vector to
// zero, to sign*(itself), or to sign*(basis vector `to`).
enum class ActKind : unsigned char { zero, stay, move };
struct ActEntry {
    ActKind kind = ActKind::zero;
    int to = -1;
    int sign = 1;
};

struct ModuleRep {
    int n = 1;
    int dim = 0;
    std::vector<Matrix<Rat>> gen;              // action of T_1 .. T_{n-1}
    std::vector<std::vector<ActEntry>> table;  // optional, [i-1][basis index]

    bool has_table() const { return !table.empty(); }
};

// Asserts the defining relations (T_i^2 = -T_i, commutation, braid) and,
// when a table is present, its agreement with the matrices.
void check_module(const ModuleRep& M);

// Matrix of the action of x (left-module convention: along a reduced word
// i_1..i_l, rho(T_sigma) = rho(T_{i_1}) ... rho(T_{i_l})).
Matrix<Rat> module_action(const ModuleRep& M, const HeckeElem& x);

// Multiplicity of each simple S_I as a composition factor: the trace of
// the idempotent e_I acting on M.  Multiplicities sum to dim M.
std::map<Composition, Int> composition_factors(const ModuleRep& M);

// Sum of multiplicity * F_I over the composition factors.
QSymElem quasisym_characteristic(const ModuleRep& M);

// A module together with its construction: basis labels (for the interval
// family, the permutation indexing each g) and, when labels exist, the
// generating function sum of G_{label} in the permutation algebra.
struct BuiltModule {
    std::string kind;
    ModuleRep rep;
    std::vector<Permutation> labels;
    FQElem free_ch{FQBasis::G, PermComb{}};
};

// P_I: basis {g_tau : tau in D_I}; eta_i fixes g_tau when i is a left
// descent of tau, moves it to g_{s_i tau} when that stays in D_I, and
// kills it otherwise.
BuiltModule projective_module(const Composition& I);
// S_I: one-dimensional, T_i = -1 for i in Des(I), 0 otherwise.
BuiltModule simple_module(const Composition& I);
// N_sigma: the submodule of P_{C(sigma)} on the labels [sigma, omega(I)].
BuiltModule interval_module(const Permutation& sigma);
// M_sigma = P_{C(sigma)} / N_sigma; requires sigma != alpha(C(sigma)).
BuiltModule quotient_interval_module(const Permutation& sigma);
// Specht specialization: N_sigma for sigma the hyperstandard reading of
// the (straight or connected-skew) shape.
BuiltModule specht_module(const std::vector<int>& outer, const std::vector<int>& inner = {});
// H_n(0) as a left module over itself, basis {T_sigma}.
BuiltModule regular_module(int n);

// Free characteristic sum of G_{label}; error when M carries no labels.
FQElem free_characteristic(const BuiltModule& M);

// ---------------------------------------------------------------- induction

// Induction product along H_k(0) x H_l(0) -> H_{k+l}(0): basis
// T_c (x) (x_j (x) y_j) over minimal coset representatives c; requires
// both factors to carry action tables; k + l <= 6.  When both factors
// carry labels, the product is labelled by c . (tau_1 x tau_2[k]).
BuiltModule induction_product(const BuiltModule& x, const BuiltModule& y);

// The two-step filtration 0 -> N_beta -> N_sigma (x)^ N_tau -> N_alpha -> 0:
// alpha is the shifted concatenation sigma * tau; beta is assembled from
// the words of the inverses (u k v and u'(k+1)v' give uu'(k+1)k vv').
// sub_indices lists the product basis positions spanning the N_beta part.
struct IntervalSplit {
    BuiltModule product;
    Permutation alpha;
    Permutation beta;
    std::vector<int> sub_indices;
};
IntervalSplit interval_induction_split(const Permutation& sigma, const Permutation& tau);

// ----------------------------------------------------- filtration machinery

// g_sigma for sigma != alpha(C(sigma)): a basis of rad H_n(0).
std::vector<HComb> radical_generators(int n);

struct RadicalSeries {
    std::vector<int> layer_dims;  // dim rad^k M / rad^{k+1} M, k = 0, 1, ...
    std::vector<std::map<Composition, Int>> layer_factors;
};
RadicalSeries radical_series(const ModuleRep& M);

// Sum over radical layers of q^k * (layer factors as F's).
QSymElem qgraded_characteristic(const ModuleRep& M);

// Compositions of n ordered by the numeric key sum of 2^{n-1-i} over the
// descent set: (n) first, (1^n) last; the order used for all
// composition-indexed matrices.
std::vector<Composition> cartan_order(int n);

struct QCartan {
    int n = 1;
    std::vector<Composition> order;
    Matrix<QPoly> mat;  // c_IJ(q) = sum_k q^k [rad^k P_I / rad^{k+1} P_I : S_J]
};
QCartan q_cartan(int n);

// The quiver on descent sets: vertices in cartan_order, arrow I -> J with
// multiplicity Ext^1(S_I, S_J).  Method "ext1" reads the q-coefficient of
// the Cartan matrix (n <= 5); method "theorem" applies the three
// subset-rewriting moves (replace i by i+-1; trade i for the pair
// i-1, i+1; trade the pair for i), n <= 6.
struct Quiver {
    int n = 1;
    std::vector<Composition> vertices;
    std::map<std::pair<int, int>, Int> arrows;  // (from, to) -> multiplicity

    Int arrow_count() const;
    int component_count() const;  // weakly connected components (blocks)
};
enum class QuiverMethod { ext1, theorem };
Quiver quiver(int n, QuiverMethod method);

// ---------------------------------------------------------------- syzygies

// Minimal projective resolution data for M over H_n(0), n <= 4:
// P^k -> Omega^k M (Omega^0 M = M) with P^k = direct sum of P_J^{m(k,J)}.
struct Resolution {
    int n = 1;
    std::vector<std::map<Composition, Int>> cover;  // m(k, J), k = 0..k_max
    std::vector<int> omega_dims;                    // dim Omega^k, k = 0..k_max
    std::vector<QSymElem> omega_qch;                // q-graded ch of Omega^k
    std::vector<QSymElem> cover_qch;                // q-graded ch of P^k
};
Resolution syzygy_resolution(const ModuleRep& M, int k_max = 8);

// P_q(M) = sum_k q^k ch(P^k) on the ribbon basis.
NSymElem resolution_p_series(const Resolution& r);

// Compares, for every pair (I, J), the cover multiplicities m(k, J) of the
// resolution of S_I against the q^k coefficient of a_IJ(-q), where
// A(q) = C_n(q)^{-1} is expanded as a matrix of power series.
struct ExtCheckReport {
    bool ok = false;
    int n = 1;
    int order = 0;  // coefficients checked for k < order
    std::string detail;
};
ExtCheckReport ext_poincare_check(int n, int order);

} // namespace hopf
