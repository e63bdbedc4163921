#pragma once
// Young tableaux in French orientation: rows_[0] is the BOTTOM row, row
// lengths weakly decrease going up, rows weakly increase left-to-right,
// columns strictly increase bottom-to-top. Row insertion, inverse insertion,
// plactic (Knuth) classes, and shape/filling enumerations live here.
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/word.hpp"

namespace hopf {

class Tableau {
  public:
    Tableau() = default;  // empty tableau
    explicit Tableau(std::vector<std::vector<int>> rows);

    int size() const;  // number of cells
    int nrows() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::vector<int> shape() const;  // row lengths, bottom row first

    bool is_standard() const;  // entries are exactly 1..n

    // Reading word: top row first, each row left to right. Inserting the
    // row word reproduces the tableau.
    Word row_word() const;

    // For a standard tableau: {i : i+1 sits in a strictly higher row}.
    std::set<int> recoils() const;

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const Tableau& o) const { return !(*this == o); }
    bool operator<(const Tableau& o) const;

    std::string str() const;  // "[1,2,4,5],[3,6]" bottom row first

  private:
    std::vector<std::vector<int>> rows_;
};

Tableau parse_tableau(const std::string& s);

// Row-insertion correspondence w -> (P(w), Q(w)); P is semistandard, Q is
// standard and records the order in which cells appear. Bijective: the
// inverse recovers w from any such pair of the same shape.
std::pair<Tableau, Tableau> rsk(const Word& w);
Word inverse_rsk(const Tableau& P, const Tableau& Q);

// Partitions of n as weakly decreasing part lists, first part descending:
// (n), (n-1,1), ..., (1^n).
std::vector<std::vector<int>> partitions(int n);

// All standard (resp. semistandard with letters <= max_letter) tableaux of
// the given partition shape, in increasing operator< order.
std::vector<Tableau> standard_tableaux(const std::vector<int>& shape);
std::vector<Tableau> semistandard_tableaux(const std::vector<int>& shape, int max_letter);

// Knuth closure of w: every word with the same insertion tableau, sorted.
std::vector<Word> plactic_class(const Word& w);

// Row reading (top row first) of the tableau of the given straight or
// connected-skew shape whose columns, taken left to right and bottom to top,
// hold 1, 2, 3, ... consecutively. The inner shape must leave a connected
// skew diagram (empty inner = straight shape).
Permutation hyperstandard_reading(const std::vector<int>& outer,
                                  const std::vector<int>& inner = {});

} // namespace hopf
