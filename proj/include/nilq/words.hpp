#pragma once

#include <vector>

#include "nilq/generators.hpp"
#include "nilq/rational.hpp"

namespace nilq {

// A word over generator indices 0..k-1.
using Word = std::vector<int>;

// Total order on words: by length, then lexicographic. All bases, matrices
// and reports are ordered by this, so downstream output is reproducible.
bool word_less(const Word& a, const Word& b);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

// w is Lyndon iff it is strictly smaller than each of its proper suffixes.
bool is_lyndon(const Word& w);

// All Lyndon words of exactly the given length over k letters, in
// lexicographic order (Duval's algorithm).
std::vector<Word> lyndon_words(int k, int length);

// Standard factorization of a Lyndon word of length >= 2: w = uv with v the
// lexicographically smallest (equivalently, longest Lyndon) proper suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

// Sum of generator weights over the letters of w.
int word_weight(const Word& w, const Alphabet& alphabet);

// Number of Lyndon words of length n over k letters:
// (1/n) * sum_{d | n} mu(d) * k^(n/d).
Int witt_dim(int num_generators, int degree);

}  // namespace nilq
