#pragma once
// Shared internals for the 0-Hecke sources: generator folds on T-basis
// coordinates, action-table walks, and an exact reduced-row-echelon
// subspace container used by the filtration machinery.
#include <optional>
#include <vector>

#include "hopf/hecke.hpp"

namespace hopf {
namespace hecke_detail {

// s with positions i, i+1 of its word exchanged (right product s * s_i).
Permutation swap_positions(const Permutation& s, int i);
// s with values i, i+1 exchanged (left product s_i * s).
Permutation swap_values(const Permutation& s, int i);

// x * T_i and T_i * x on T-basis coordinates.
HComb t_gen_right(const HComb& x, int i);
HComb t_gen_left(int i, const HComb& x);

// x * xi_i = x + x * T_i.
HComb xi_gen_right(const HComb& x, int i);

// T_s * x and x * T_s (folds along a reduced word of s).
HComb t_left_mul(const Permutation& s, const HComb& x);
HComb t_right_mul(const HComb& x, const Permutation& s);

// Express x in a basis {b_s} with b_s = c_s T_s + (strictly longer terms),
// c_s invertible: forward substitution in increasing length.  The basis is
// queried lazily through `basis_of`.  Throws internal_error if the
// triangularity assumption fails.
template <class F>
HComb express_triangular(const F& basis_of, HComb x) {
    HComb result;
    size_t guard = x.size();
    while (!x.is_zero()) {
        const Permutation* best = nullptr;
        for (const auto& [s, c] : x.terms())
            if (!best || s.length() < best->length()) best = &s;
        Permutation pivot = *best;
        HComb b = basis_of(pivot);
        Rat diag = b.coeff(pivot);
        HOPF_CHECK(!is_zero(diag), "triangular basis element misses its own diagonal");
        Rat coeff = x.coeff(pivot) / diag;
        result.add(pivot, coeff);
        x -= b * coeff;
        HOPF_CHECK(is_zero(x.coeff(pivot)), "triangular elimination failed to clear pivot");
        for (const auto& [s, c] : x.terms())
            HOPF_CHECK(s.length() >= pivot.length(), "basis is not length-triangular");
        HOPF_CHECK(++guard < (size_t)1 << 30, "triangular solve does not terminate");
    }
    return result;
}

// Image of basis vector j under T_i read off the action table:
// (sign, index), or nullopt when the image is zero.
std::optional<std::pair<int, int>> table_step(const ModuleRep& M, int i, int j);

// Image of basis vector j under T_s (table walk along a reduced word).
std::optional<std::pair<int, int>> table_walk(const ModuleRep& M, const std::vector<int>& word, int j);

// v |-> rho(T_i) v, by table when present, else by matrix.
std::vector<Rat> apply_gen(const ModuleRep& M, int i, const std::vector<Rat>& v);
// v |-> rho(x) v for x on the T basis.
std::vector<Rat> apply_comb(const ModuleRep& M, const HComb& x, const std::vector<Rat>& v);

// trace of rho(x) on the whole module, x on the T basis.
Rat module_trace(const ModuleRep& M, const HComb& x);

// Exact reduced row echelon container for a subspace of Q^cols.
class Echelon {
  public:
    explicit Echelon(int cols) : cols_(cols) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Remainder of v after subtracting its projection onto the span.
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    // Insert v; returns true when the dimension grew.
    bool add(std::vector<Rat> v);
    bool contains(const std::vector<Rat>& v) const;
    // Coordinates of v in the row basis (nullopt if v is outside the span).
    std::optional<std::vector<Rat>> coords(const std::vector<Rat>& v) const;

  private:
    int cols_ = 0;
    std::vector<std::vector<Rat>> rows_;
    std::vector<int> pivots_;
};

// Multiplicity vector [V : S_J] for the submodule spanned by `space`
// (must be invariant), indexed like norton_data(M.n): trace of each e_J.
std::map<Composition, Int> factors_on_subspace(const ModuleRep& M, const Echelon& space);

// The invariant subspace rad(H) * V inside V (V given by an echelon basis;
// pass the full space for rad M).
Echelon radical_subspace(const ModuleRep& M, const Echelon& V);
Echelon full_space(int dim);

// Matrices-only module obtained by restricting M to the invariant
// subspace `space` (coordinates = rows of the echelon basis).
ModuleRep restrict_module(const ModuleRep& M, const Echelon& space);

Int rat_to_int(const Rat& x);

} // namespace hecke_detail
} // namespace hopf
