#include "hopf/nsym.hpp"

#include <set>
#include <vector>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

// All compositions coarser than or equal to I: drop any subset of its inner
// descents.
std::vector<Composition> coarsenings(const Composition& I) {
    const std::set<int> ds = I.descent_set();
    std::vector<int> des(ds.begin(), ds.end());
    const int n = I.weight();
    std::vector<Composition> out;
    const size_t k = des.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        std::set<int> keep;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t{1} << i)) keep.insert(des[i]);
        out.push_back(Composition::from_descent_set(keep, n));
    }
    return out;
}

CompComb change_SR(const CompComb& x, bool signed_inverse) {
    CompComb r;
    for (const auto& [I, c] : x.terms()) {
        for (const Composition& J : coarsenings(I)) {
            bool flip = signed_inverse && (I.length() - J.length()) % 2 != 0;
            r.add(J, flip ? -c : c);
        }
    }
    return r;
}

CompComb ribbon_label_product(const Composition& I, const Composition& J) {
    CompComb r;
    if (I.length() == 0 || J.length() == 0) {
        r.add(I.concat(J), QPoly(Rat(1)));
        return r;
    }
    r.add(I.concat(J), QPoly(Rat(1)));
    r.add(I.near_concat(J), QPoly(Rat(1)));
    return r;
}

} // namespace

NSymElem ns_single(NBasis basis, const Composition& I, const QPoly& c) {
    return NSymElem{basis, CompComb::single(I, c)};
}

NSymElem nsym_to_basis(const NSymElem& e, NBasis target) {
    if (e.basis == target) return e;
    // S^I = sum over coarsenings of R; the inverse carries the sign
    // (-1)^{l(I) - l(J)} on the same index set.
    bool from_R = e.basis == NBasis::R;
    return NSymElem{target, change_SR(e.terms, /*signed_inverse=*/from_R)};
}

NSymElem nsym_product(const NSymElem& x, const NSymElem& y) {
    CompComb xr = nsym_to_basis(x, NBasis::R).terms;
    CompComb yr = nsym_to_basis(y, NBasis::R).terms;
    return NSymElem{NBasis::R, CompComb::bilinear(xr, yr, ribbon_label_product)};
}

FQElem embed_in_fqsym(const NSymElem& e) {
    CompComb r = nsym_to_basis(e, NBasis::R).terms;
    PermComb acc;
    for (const auto& [I, c] : r.terms())
        for (const Permutation& s : descent_class(I)) acc.add(s, c);
    return FQElem{FQBasis::G, acc};
}

SymElem nsym_commutative_image(const NSymElem& e) {
    CompComb s = nsym_to_basis(e, NBasis::S).terms;
    PartComb acc;
    for (const auto& [I, c] : s.terms()) {
        require(c.degree() <= 0, "commutative image needs q-free coefficients");
        acc.add(sorted_partition(I.parts()), c.coeff(0));
    }
    return SymElem{SymBasis::h, acc};
}

std::string ns_str(const NSymElem& e) {
    const std::string name = e.basis == NBasis::S ? "S" : "R";
    return e.terms.str([&](const Composition& I) { return name + I.str(); },
                       [](const QPoly& c) { return c.str(); });
}

} // namespace hopf
