#pragma once
// Exhaustive enumerations in frozen canonical orders, plus the connected
// permutation counter. Golden outputs depend on these orders.
#include <vector>

#include "hopf/composition.hpp"
#include "hopf/permutation.hpp"
#include "hopf/rational.hpp"
#include "hopf/word.hpp"

namespace hopf {

// S_n in lexicographic order of one-line words; bound n <= 8.
std::vector<Permutation> all_permutations(int n);

// Compositions of n in lexicographic order of part vectors; bound n <= 20.
std::vector<Composition> all_compositions(int n);

// Words of length n over {1..max_letter} in lexicographic order;
// bound max_letter^n <= 2'000'000.
std::vector<Word> all_words(int n, int max_letter);

enum class ConnectedRoute { filter, series };

// c_n, the number of connected permutations of S_n. The filter route counts
// directly (n <= 10); the series route reads the coefficient of t^n in
// 1 - (sum_k k! t^k)^{-1}.
Int count_connected(int n, ConnectedRoute route = ConnectedRoute::series);

} // namespace hopf
