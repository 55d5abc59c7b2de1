#pragma once

#include "nilq/matrix.hpp"
#include "nilq/presentation.hpp"

namespace nilq {

// Sparse coordinate vector: (flat basis index, coefficient) pairs, ascending.
using SparseVec = std::vector<std::pair<int, Rat>>;

// The graded quotient L(V)/(J + [length > c]) of a presentation: per-degree
// bases (classes of non-pivot Lyndon words), exact structure constants, and
// the reduction map. Immutable once built.
class GradedQuotient {
 public:
  struct BasisElt {
    int degree;
    Word word;
  };

  const Alphabet& alphabet() const { return alphabet_; }
  int class_cap() const { return class_cap_; }
  // Largest degree with a nonzero component (0 for the trivial algebra).
  int nilpotency_class() const { return nilpotency_class_; }
  const std::vector<int>& dims() const { return dims_; }  // degrees 1..c
  int total_dim() const { return static_cast<int>(basis_.size()); }

  const std::vector<BasisElt>& basis() const { return basis_; }
  const BasisElt& basis_elt(int flat) const { return basis_.at(static_cast<size_t>(flat)); }
  int degree_of(int flat) const { return basis_elt(flat).degree; }
  int weight_of(int flat) const { return word_weight(basis_elt(flat).word, alphabet_); }
  std::string basis_name(int flat) const;

  // Reduction of a LieElement modulo the ideal, in flat coordinates.
  QVec coords(const LieElement& e) const;
  // Normal-form representative of a coordinate vector.
  LieElement element(const QVec& coords) const;

  // Bracket in quotient coordinates via the structure constants.
  QVec bracket_coords(const QVec& a, const QVec& b) const;
  // Structure constants for basis pair (i, j).
  const SparseVec& structure(int i, int j) const;

  // Degree-n ideal subspace J_n in the Lyndon coordinates of that degree.
  const RowReducer& ideal_rows(int degree) const;
  const std::vector<Word>& free_words(int degree) const;

 private:
  friend GradedQuotient nilpotent_quotient(const LiePresentation&, int);

  Alphabet alphabet_;
  int class_cap_ = 1;
  int nilpotency_class_ = 0;
  std::vector<int> dims_;
  std::vector<BasisElt> basis_;
  // per degree 1..c
  std::vector<std::vector<Word>> free_words_;
  std::vector<RowReducer> ideal_;
  // flat index of a quotient basis word
  std::map<Word, int, WordLess> word_index_;
  // structure constants, row-major over (i, j) with i, j < total_dim
  std::vector<SparseVec> structure_;

  QVec reduce_degree(int degree, const QVec& free_coords) const;
};

// Degree-by-degree exact elimination: J_n is saturated by bracketing lower
// ideal rows with the degree-1 generators, then relation components of
// degree n are added; the quotient basis is the complement of the pivots.
GradedQuotient nilpotent_quotient(const LiePresentation& pres,
                                  int max_class = kDefaultMaxClass);

// Dimensions of the lower-central-series layers, computed from the structure
// constants (independent cross-check of the degree grading). Returned for
// n = 1..nilpotency_class.
std::vector<int> lcs_dims(const GradedQuotient& q);

// Degrees, with multiplicity, of a minimal homogeneous generating set of the
// relation ideal: in degree n the multiplicity is dim J_n - dim [F_1, J_{n-1}].
std::vector<int> minimal_relation_degrees(const LiePresentation& pres,
                                          int max_class = kDefaultMaxClass);

// Indices into pres.homogeneous_relations() of a minimal generating subset,
// chosen greedily by degree then input order.
std::vector<int> minimal_relation_subset(const LiePresentation& pres,
                                         int max_class = kDefaultMaxClass);

}  // namespace nilq
