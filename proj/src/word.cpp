#include "hopf/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hopf {

Word::Word(std::vector<int> letters) : a_(std::move(letters)) {
    for (int v : a_) require(v >= 1, "word letters must be positive");
}

int Word::max_letter() const {
    int m = 0;
    for (int v : a_) m = std::max(m, v);
    return m;
}

Word Word::shifted(int k) const {
    require(k >= 0, "negative word shift");
    std::vector<int> b = a_;
    for (int& v : b) v += k;
    return Word(std::move(b));
}

Word Word::concat(const Word& o) const {
    std::vector<int> b = a_;
    b.insert(b.end(), o.a_.begin(), o.a_.end());
    return Word(std::move(b));
}

Word Word::shifted_concat(const Word& o) const { return concat(o.shifted(size())); }

std::vector<int> Word::evaluation(int max_letter_arg) const {
    int m = max_letter_arg > 0 ? max_letter_arg : max_letter();
    require(m >= max_letter(), "evaluation window smaller than largest letter");
    std::vector<int> ev(m, 0);
    for (int v : a_) ++ev[v - 1];
    return ev;
}

bool Word::nondecreasing() const { return std::is_sorted(a_.begin(), a_.end()); }

Word Word::permuted(const Permutation& s) const {
    require(s.size() == size(), "permuting word by wrong-size permutation");
    std::vector<int> b(a_.size());
    for (int i = 1; i <= size(); ++i) b[i - 1] = a_[s(i) - 1];
    return Word(std::move(b));
}

std::string Word::str() const {
    std::ostringstream out;
    out << "w:";
    for (int i = 0; i < size(); ++i) out << (i ? "." : "") << a_[i];
    return out.str();
}

Word parse_word(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.rfind("w:", 0) != 0) throw parse_error("word must start with 'w:'");
    std::string body = t.substr(2);
    std::vector<int> letters;
    if (!body.empty()) {
        std::istringstream in(body);
        std::string item;
        while (std::getline(in, item, '.')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                throw parse_error("bad word letter: '" + item + "'");
            letters.push_back(std::stoi(item));
        }
        if (body.back() == '.') throw parse_error("trailing '.' in word");
    }
    try {
        return Word(std::move(letters));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

Permutation standardize(const Word& w) {
    const int n = w.size();
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int i, int j) { return w.letters()[i] < w.letters()[j]; });
    std::vector<int> out(n);
    for (int rank = 0; rank < n; ++rank) out[idx[rank]] = rank + 1;
    return Permutation(std::move(out));
}

std::optional<std::vector<Permutation>> sfact(const Composition& I, const Word& w) {
    if (I.weight() != w.size()) return std::nullopt;
    std::vector<Permutation> out;
    out.reserve(I.length());
    int pos = 0;
    for (int i = 0; i < I.length(); ++i) {
        std::vector<int> block(w.letters().begin() + pos, w.letters().begin() + pos + I.part(i));
        out.push_back(standardize(Word(std::move(block))));
        pos += I.part(i);
    }
    return out;
}

} // namespace hopf
