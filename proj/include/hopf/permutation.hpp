#pragma once
// Permutations in one-line notation, their orders (Bruhat, weak), descent
// combinatorics, and descent classes D_I = [alpha(I), omega(I)].
// Conventions fixed here and used everywhere:
//   - word()[i] = sigma(i+1); products compose as functions: (s*t)(i) = s(t(i));
//   - right descents {i : sigma(i) > sigma(i+1)} define the descent composition;
//   - left weak order: s <= t iff l(t) = l(s) + l(t s^{-1}).
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopf/composition.hpp"
#include "hopf/errors.hpp"

namespace hopf {

class Permutation {
  public:
    Permutation() = default;  // the unique permutation of size 0
    explicit Permutation(std::vector<int> word);
    static Permutation identity(int n);
    static Permutation longest(int n);  // omega = n n-1 ... 1

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const {  // 1-based application
        require(i >= 1 && i <= size(), "permutation applied out of range");
        return w_[i - 1];
    }
    const std::vector<int>& word() const { return w_; }

    Permutation operator*(const Permutation& o) const;  // (s*o)(i) = s(o(i))
    Permutation inverse() const;

    int length() const;  // inversion count
    int maj() const;     // sum of descent positions
    std::vector<int> descents() const;  // 1-based i with s(i) > s(i+1)

    bool is_connected() const;
    std::vector<Permutation> connected_factorization() const;
    Permutation shifted_concat(const Permutation& o) const;  // this . o[size]

    bool operator==(const Permutation& o) const { return w_ == o.w_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const {
        return w_.size() != o.w_.size() ? w_.size() < o.w_.size() : w_ < o.w_;
    }

    std::string str() const;  // "312" when n <= 9, else "[10,3,...]"

  private:
    std::vector<int> w_;
};

Permutation parse_permutation(const std::string& s);

enum class PermOrder { bruhat, left_weak, right_weak };
bool order_leq(const Permutation& s, const Permutation& t, PermOrder which);

Composition descent_composition(const Permutation& s);

// Minimal / maximal permutations of the descent class D_I, and the class
// itself (in lexicographic order). D_I = {s : C(s) = I} = [alpha(I), omega(I)]
// in left weak order.
Permutation alpha_of(const Composition& I);
Permutation omega_of(const Composition& I);
std::vector<Permutation> descent_class(const Composition& I);

inline std::pair<Permutation, Permutation> descent_class_bounds(const Composition& I) {
    return {alpha_of(I), omega_of(I)};
}

} // namespace hopf
