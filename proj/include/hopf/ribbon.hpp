#pragma once
// Quasi-ribbon tableaux and the hypoplactic analogue of row insertion.
// A quasi-ribbon of shape I is the ribbon diagram of I (row 1 on top, each
// next row starting under the last cell of the one above) filled so that rows
// weakly increase left-to-right and columns strictly increase top-to-bottom.
// Two words are hypoplactically congruent iff they share the quasi-ribbon.
#include <string>
#include <vector>

#include "hopf/composition.hpp"
#include "hopf/errors.hpp"
#include "hopf/permutation.hpp"
#include "hopf/word.hpp"

namespace hopf {

class QuasiRibbon {
  public:
    QuasiRibbon() = default;
    explicit QuasiRibbon(std::vector<std::vector<int>> rows);  // rows top-first

    int size() const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Composition shape() const;  // row lengths, top row first

    bool operator==(const QuasiRibbon& o) const { return rows_ == o.rows_; }
    bool operator!=(const QuasiRibbon& o) const { return !(*this == o); }
    bool operator<(const QuasiRibbon& o) const;

    std::string str() const;  // "[1,1],[2,2]" top row first

  private:
    std::vector<std::vector<int>> rows_;
};

struct HypoplacticPair {
    QuasiRibbon Q;   // the sorted letters of w in the shape of R's descents
    Permutation R;   // Std(w)^{-1}, whose descent composition is the shape
};

HypoplacticPair hypoplactic_rsk(const Word& w);

} // namespace hopf
