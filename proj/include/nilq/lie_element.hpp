#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilq/bracket.hpp"
#include "nilq/generators.hpp"
#include "nilq/rational.hpp"
#include "nilq/words.hpp"

namespace nilq {

// An exact-rational linear combination of Lyndon basis words, truncated at a
// class cap: words longer than the cap are discarded on construction and in
// every operation. Zero coefficients are never stored.
class LieElement {
 public:
  LieElement(Alphabet alphabet, int class_cap);

  static LieElement generator(const Alphabet& alphabet, int index, int class_cap);

  const Alphabet& alphabet() const { return alphabet_; }
  int class_cap() const { return class_cap_; }

  bool is_zero() const { return coeffs_.empty(); }
  int term_count() const { return static_cast<int>(coeffs_.size()); }
  Rat coeff(const Word& w) const;
  const std::map<Word, Rat, WordLess>& terms() const { return coeffs_; }

  // Adds c on the basis word w; w must be Lyndon. Longer-than-cap words drop.
  void add_term(const Word& w, const Rat& c);

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Rat& scalar);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rat& c, LieElement a) { return a *= c; }
  LieElement operator-() const;

  friend bool operator==(const LieElement& a, const LieElement& b);

  // Bracket lengths present, ascending, with multiplicity collapsed.
  std::vector<int> lengths() const;
  // Component of a single bracket length (same alphabet and cap).
  LieElement length_component(int length) const;
  // Generator-weight of a homogeneous element; throws if mixed.
  int homogeneous_weight() const;
  // Splits into weight-homogeneous components, ascending weight.
  std::vector<std::pair<int, LieElement>> weight_components() const;

  LieElement truncated(int new_cap) const;

  std::string to_string() const;

  // Throws InputError unless alphabets and caps agree.
  void require_compatible(const LieElement& other) const;

 private:
  Alphabet alphabet_;
  int class_cap_;
  std::map<Word, Rat, WordLess> coeffs_;
};

}  // namespace nilq
