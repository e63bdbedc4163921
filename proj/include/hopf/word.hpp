#pragma once
// Words over the ordered alphabet {1, 2, 3, ...}: shifts, concatenations,
// standardization, and the block-standardization operator sfact.
#include <optional>
#include <string>
#include <vector>

#include "hopf/composition.hpp"
#include "hopf/errors.hpp"
#include "hopf/permutation.hpp"

namespace hopf {

class Word {
  public:
    Word() = default;  // the empty word
    explicit Word(std::vector<int> letters);
    static Word from_permutation(const Permutation& s) { return Word(s.word()); }

    int size() const { return static_cast<int>(a_.size()); }
    int letter(int i) const {  // 1-based
        require(i >= 1 && i <= size(), "word letter index out of range");
        return a_[i - 1];
    }
    const std::vector<int>& letters() const { return a_; }
    int max_letter() const;  // 0 for the empty word

    Word shifted(int k) const;                     // w[k]: every letter + k
    Word concat(const Word& o) const;              // u . v
    Word shifted_concat(const Word& o) const;      // u . v[|u|]
    std::vector<int> evaluation(int max_letter = 0) const;  // counts of 1..max
    bool nondecreasing() const;
    Word permuted(const Permutation& s) const;     // result(i) = this(s(i))

    bool operator==(const Word& o) const { return a_ == o.a_; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const {
        return a_.size() != o.a_.size() ? a_.size() < o.a_.size() : a_ < o.a_;
    }

    std::string str() const;  // "w:3.1.2"

  private:
    std::vector<int> a_;
};

Word parse_word(const std::string& s);

// Std(w): stable ranking of the letters. Std(w)^{-1} is the unique
// minimal-length permutation s with w o s nondecreasing.
Permutation standardize(const Word& w);

// Split the positions of w into consecutive blocks of sizes I and standardize
// each block; empty result when |w| != |I|.
std::optional<std::vector<Permutation>> sfact(const Composition& I, const Word& w);

} // namespace hopf
