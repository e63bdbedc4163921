#include "hopf/shuffle.hpp"

namespace hopf {

namespace {

// Recurse over suffixes u[i..], v[j..]; prefix is the word built so far.
void shuffle_rec(const std::vector<int>& u, const std::vector<int>& v, size_t i, size_t j,
                 std::vector<int>& prefix, const Rat& c, LinComb<Word, Rat>& out) {
    if (i == u.size() && j == v.size()) {
        out.add(Word(prefix), c);
        return;
    }
    if (i < u.size()) {
        prefix.push_back(u[i]);
        shuffle_rec(u, v, i + 1, j, prefix, c, out);
        prefix.pop_back();
    }
    if (j < v.size()) {
        prefix.push_back(v[j]);
        shuffle_rec(u, v, i, j + 1, prefix, c, out);
        prefix.pop_back();
    }
}

void q_shuffle_rec(const std::vector<int>& u, const std::vector<int>& v, size_t i, size_t j,
                   std::vector<int>& prefix, int qpow, LinComb<Word, QPoly>& out) {
    if (i == u.size() && j == v.size()) {
        out.add(Word(prefix), QPoly::monomial(Rat(1), qpow));
        return;
    }
    if (i < u.size()) {
        prefix.push_back(u[i]);
        q_shuffle_rec(u, v, i + 1, j, prefix, qpow, out);
        prefix.pop_back();
    }
    if (j < v.size()) {
        prefix.push_back(v[j]);
        q_shuffle_rec(u, v, i, j + 1, prefix, qpow + static_cast<int>(u.size() - i), out);
        prefix.pop_back();
    }
}

} // namespace

LinComb<Word, Rat> shuffle(const Word& u, const Word& v) {
    LinComb<Word, Rat> out;
    std::vector<int> prefix;
    prefix.reserve(u.size() + v.size());
    shuffle_rec(u.letters(), v.letters(), 0, 0, prefix, Rat(1), out);
    return out;
}

LinComb<Word, QPoly> q_shuffle(const Word& u, const Word& v) {
    LinComb<Word, QPoly> out;
    std::vector<int> prefix;
    prefix.reserve(u.size() + v.size());
    q_shuffle_rec(u.letters(), v.letters(), 0, 0, prefix, 0, out);
    return out;
}

LinComb<Word, Rat> shifted_shuffle(const Word& u, const Word& v) {
    return shuffle(u, v.shifted(u.size()));
}

LinComb<Word, QPoly> shifted_q_shuffle(const Word& u, const Word& v) {
    return q_shuffle(u, v.shifted(u.size()));
}

} // namespace hopf
