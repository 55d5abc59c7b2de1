#pragma once

#include "nilq/free_lie.hpp"

namespace nilq {

// A finitely presented Lie algebra: weighted generators, a class cap, and a
// finite list of relations. Relations are stored normal-formed; degree-1
// components are rejected so quotient generators stay genuine.
class LiePresentation {
 public:
  LiePresentation(Alphabet alphabet, int class_cap, std::vector<LieElement> relations);

  const Alphabet& alphabet() const { return alphabet_; }
  int class_cap() const { return class_cap_; }
  const std::vector<LieElement>& relations() const { return relations_; }

  // Length-homogeneous components of the relations, in input order then
  // ascending length. Used by the ideal computations.
  const std::vector<LieElement>& homogeneous_relations() const { return homogeneous_; }
  // True when some relation mixed bracket lengths and had to be split.
  bool length_split_occurred() const { return split_occurred_; }

  // Same generators and relations under a different (larger or smaller) cap.
  LiePresentation with_class_cap(int new_cap) const;

 private:
  Alphabet alphabet_;
  int class_cap_;
  std::vector<LieElement> relations_;
  std::vector<LieElement> homogeneous_;
  bool split_occurred_ = false;
};

}  // namespace nilq
