#pragma once
// Shuffle and q-shuffle products of words. The q-shuffle follows the
// recursion  au' shuffle_q bv' = a(u' shuffle_q bv') + q^{|au'|} b(au' shuffle_q v'),
// so each letter drawn from the right factor earns q to the power of the
// left letters still waiting.
#include "hopf/lincomb.hpp"
#include "hopf/qpoly.hpp"
#include "hopf/rational.hpp"
#include "hopf/word.hpp"

namespace hopf {

LinComb<Word, Rat> shuffle(const Word& u, const Word& v);
LinComb<Word, QPoly> q_shuffle(const Word& u, const Word& v);

// Shuffle u with v[|u|] (the letters of v raised above those of u).
LinComb<Word, Rat> shifted_shuffle(const Word& u, const Word& v);
LinComb<Word, QPoly> shifted_q_shuffle(const Word& u, const Word& v);

} // namespace hopf
