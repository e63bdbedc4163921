#pragma once
// Compositions of n: ordered lists of positive parts. They index descent
// classes, ribbon bases, and quasi-symmetric bases. The canonical enumeration
// order (numeric lexicographic on the part lists) is frozen: golden outputs
// depend on it.
#include <set>
#include <string>
#include <vector>

#include "hopf/errors.hpp"

namespace hopf {

class Composition {
  public:
    Composition() = default;  // empty composition of 0
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) require(p >= 1, "composition parts must be >= 1");
    }
    static Composition from_descent_set(const std::set<int>& des, int n);

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_.at(i); }  // 0-based

    // Des(I) = {i_1, i_1+i_2, ...} without the final weight.
    std::set<int> descent_set() const;

    // Conjugate (ribbon transpose): Des(I~) = [n-1] \ Des(I).
    Composition conjugate() const;
    // Mirror: parts reversed.
    Composition mirror() const;
    // Each part doubled (shape 2I).
    Composition doubled() const;

    Composition concat(const Composition& o) const;       // I . J
    Composition near_concat(const Composition& o) const;  // I |> J : glue last+first
    // Composition of the same weight with descent set Des(I) u Des(J).
    Composition join(const Composition& o) const;
    // True if this refines coarser: Des(coarser) subset of Des(this).
    bool refines(const Composition& coarser) const;

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return !(*this == o); }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

    std::string str() const;  // "(2,1)"

  private:
    std::vector<int> parts_;
};

Composition parse_composition(const std::string& s);

} // namespace hopf
