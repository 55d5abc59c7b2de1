#pragma once

#include <map>

#include "nilq/lie_element.hpp"

namespace nilq {

// An element of the free associative algebra on k letters, truncated at a
// word-length cap. Sparse: absent words have coefficient zero. The constant
// term is the coefficient of the empty word.
class TensorElement {
 public:
  TensorElement(int num_letters, int cap);

  int num_letters() const { return k_; }
  int cap() const { return cap_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rat coeff(const Word& w) const;
  const std::map<Word, Rat, WordLess>& terms() const { return coeffs_; }

  void add_term(const Word& w, const Rat& c);

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  TensorElement& operator*=(const Rat& scalar);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

  // Concatenation product, truncated at the cap.
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

  TensorElement commutator_with(const TensorElement& other) const;

 private:
  int k_;
  int cap_;
  std::map<Word, Rat, WordLess> coeffs_;
};

// exp of an element with zero constant term (finite sum under truncation).
TensorElement exp_truncated(const TensorElement& a);
// log of an element with constant term 1.
TensorElement log_truncated(const TensorElement& a);

// Expansion of a bracket word into the associative algebra, [a,b] -> ab - ba.
TensorElement expand_tree(const TreePtr& t, int num_letters, int cap);
// Expansion of a Lie element (each basis word via its standard bracketing).
TensorElement expand_lie(const LieElement& e);

// Writes a tensor element in the Lyndon basis by triangular extraction:
// repeatedly strip the smallest-support word, which for a Lie element is
// always Lyndon. Throws Error when the input is not a Lie element.
LieElement lie_project(const TensorElement& t, const Alphabet& alphabet, int class_cap);

}  // namespace nilq
