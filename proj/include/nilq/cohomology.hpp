#pragma once

#include <optional>

#include "nilq/cup_data.hpp"
#include "nilq/quotient.hpp"

namespace nilq {

// Chevalley-Eilenberg complex of a finite-dimensional quotient with trivial
// coefficients. Cochain bases are sorted index tuples in lexicographic
// order. Sign convention, fixed once: (d xi)(a, b) = -xi([a, b]), and in
// general (d w)(x_0..x_p) = sum_{i<j} (-1)^{i+j} w([x_i, x_j], .. omitting i, j ..).
class CochainComplex {
 public:
  explicit CochainComplex(const GradedQuotient& q, int max_p = -1,
                          int dim_cap = kDefaultBettiDimCap);

  const GradedQuotient& quotient() const { return *q_; }
  int algebra_dim() const { return n_; }
  int max_p() const { return static_cast<int>(tuples_.size()) - 1; }

  int dim(int p) const;
  const std::vector<std::vector<int>>& tuples(int p) const;
  int tuple_index(int p, const std::vector<int>& tuple) const;
  // d_p as a matrix dim(p+1) x dim(p); the top differential is the zero map.
  const QMatrix& d(int p) const;

  // Bracket-length weight of a basis tuple (sum over its indices).
  int tuple_weight(int p, int index) const;

 private:
  const GradedQuotient* q_;
  int n_;
  std::vector<std::vector<std::vector<int>>> tuples_;
  std::vector<std::map<std::vector<int>, int>> index_;
  std::vector<QMatrix> d_;
};

// A cocycle representative in a fixed complex; equality of classes is
// equality modulo im d_{p-1}.
struct CohomologyClass {
  int degree = 0;
  QVec representative;                // coordinates in the Lambda^p basis
  std::optional<int> weight;          // set when the representative is homogeneous
};

// Validates closedness and tags the weight when homogeneous.
CohomologyClass make_class(const CochainComplex& cx, int p, QVec representative);

bool class_is_zero(const CochainComplex& cx, const CohomologyClass& c);
bool classes_equal(const CochainComplex& cx, const CohomologyClass& a,
                   const CohomologyClass& b);

struct BettiResult {
  int dim = 0;
  std::vector<QVec> representatives;  // deterministic cocycle basis of H^p
};

BettiResult betti(const CochainComplex& cx, int p);

// Dual basis class of a degree-1 quotient basis element.
CohomologyClass dual_class(const CochainComplex& cx, int flat_index);

// Wedge of two 1-cochains as a 2-cochain coordinate vector.
QVec wedge11(const CochainComplex& cx, const QVec& a, const QVec& b);

// Cup product of two degree-1 classes: the class of the wedge.
CohomologyClass cup(const CochainComplex& cx, const CohomologyClass& a,
                    const CohomologyClass& b);

enum class SolverOrder { Standard, Reversed };

struct MasseyResult {
  enum class Status { Undefined, Vanishing, NonVanishing };
  Status status = Status::Undefined;
  CohomologyClass value;               // set when defined
  std::vector<QVec> indeterminacy;     // wedge representatives a^H1 + H1^c
  int indeterminacy_dim = 0;           // its dimension inside H^2
};

// Massey triple product <a, b, c>; defined when a cup b = 0 and b cup c = 0.
// Cochains s, t with ds = -a^b, dt = -b^c are the deterministic least-index
// solutions; the value is [a^t + s^c] modulo a cup H1 + H1 cup c.
MasseyResult massey(const CochainComplex& cx, const CohomologyClass& a,
                    const CohomologyClass& b, const CohomologyClass& c,
                    SolverOrder order = SolverOrder::Standard);

struct ExtensionObstruction {
  bool vanishes = false;
  QMatrix obstruction;              // pullback cocycle, rows = Lambda^2(g), cols = V
  std::optional<QMatrix> correcting_cochain;  // lambda with d lambda = -pullback
};

// Obstruction [phi^* omega] in H^2(g, V) against lifting phi: g -> h to the
// central extension of h classified by omega. When it vanishes, produces the
// correcting 1-cochain and verifies the lift is a homomorphism.
ExtensionObstruction extension_lift_obstruction(const GradedQuotient& g,
                                                const GradedQuotient& h,
                                                const QMatrix& omega, int vdim,
                                                const QMatrix& phi);

// True iff v -> v cup (-) has zero kernel. Throws on non-antisymmetric input.
bool pairing_nondegenerate(const CupData& data);

}  // namespace nilq
