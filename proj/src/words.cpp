#include "nilq/words.hpp"

#include <algorithm>

namespace nilq {

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i) {
    // compare w with its suffix starting at i, pure lex
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
      return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int k, int length) {
  if (k < 1) throw InputError("alphabet size must be >= 1");
  if (length < 1) throw InputError("word length must be >= 1");
  std::vector<Word> out;
  Word w{0};
  while (true) {
    if (static_cast<int>(w.size()) == length) out.push_back(w);
    // extend periodically to the target length, then increment
    Word t;
    t.reserve(length);
    for (int i = 0; i < length; ++i) t.push_back(w[i % w.size()]);
    while (!t.empty() && t.back() == k - 1) t.pop_back();
    if (t.empty()) break;
    ++t.back();
    w = std::move(t);
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw Error("standard_factorization needs length >= 2");
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i) {
    if (std::lexicographical_compare(w.begin() + i, w.end(), w.begin() + best, w.end()))
      best = i;
  }
  return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

int word_weight(const Word& w, const Alphabet& alphabet) {
  int s = 0;
  for (int g : w) s += alphabet.at(g).weight;
  return s;
}

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

Int witt_dim(int num_generators, int degree) {
  if (num_generators < 1 || degree < 1)
    throw InputError("witt_dim arguments must be >= 1");
  Int sum = 0;
  for (int d = 1; d <= degree; ++d) {
    if (degree % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(num_generators),
                  static_cast<unsigned long>(degree / d));
    sum += mu * p;
  }
  return sum / degree;
}

}  // namespace nilq
