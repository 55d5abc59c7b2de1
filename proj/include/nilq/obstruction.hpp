#pragma once

#include <array>
#include <set>
#include <variant>

#include "nilq/cohomology.hpp"

namespace nilq {

struct WeightAssignment {
  std::vector<int> generator_weights;      // one per generator
  std::vector<int> relation_weights;       // induced multiset, ascending
};

// One violating relation component per rejected assignment.
struct WeightInfeasibility {
  struct Violation {
    std::vector<int> generator_weights;
    int relation_index;  // into the minimal relation list
    int component_weight;
  };
  std::vector<Violation> violations;
};

using WeightResult = std::variant<WeightAssignment, WeightInfeasibility>;

// Exhaustive search over generator-weight assignments from the allowed set,
// in lexicographic order. Feasible iff every weight-homogeneous component of
// every minimal relation lands in the allowed relation-weight set.
WeightResult weight_feasibility(const LiePresentation& pres,
                                const std::set<int>& allowed_gen_weights,
                                const std::set<int>& allowed_rel_weights,
                                long search_cap = kWeightSearchCap);

// Structured witnesses, re-verifiable by an independent harness.
struct DegreeWitness {
  std::vector<int> degrees;   // minimal relation degrees, ascending
  std::vector<int> offending; // entries outside the allowed set
  std::vector<int> allowed;
};

struct WeightWitness {
  std::vector<int> allowed_gen_weights;
  std::vector<int> allowed_rel_weights;
  WeightInfeasibility certificate;
};

struct MasseyWitness {
  std::array<int, 3> triple;  // generator indices of the dual classes
  QVec representative;        // in the Lambda^2 basis of the quotient complex
  int indeterminacy_dim = 0;
};

using WitnessData = std::variant<DegreeWitness, WeightWitness, MasseyWitness>;

struct CheckRun {
  std::string name;
  bool passed = false;
};

// Outcome of an obstruction battery. A consistent verdict is a
// necessary-condition pass, never a realizability proof.
struct Verdict {
  enum class Outcome { Consistent, Excluded };
  Outcome outcome = Outcome::Consistent;
  std::vector<CheckRun> checks_run;
  std::vector<WitnessData> witnesses;

  bool excluded() const { return outcome == Outcome::Excluded; }
};

inline constexpr const char* kVerdictCaveat =
    "consistent means the necessary conditions hold; it does not certify "
    "realizability as a fundamental group";

// Smooth-proper battery: minimal relation degrees within {2}, weight
// feasibility for generator weights {1} and relation weights {2}, and a
// Massey sweep over dual-generator triples, all of which must vanish.
// All checks run; the verdict is excluded on any failure.
Verdict check_smooth_proper(const LiePresentation& pres,
                            int max_class = kDefaultMaxClass);

// Smooth battery: minimal relation degrees within {2,3,4} and weight
// feasibility for generator weights {1,2}, relation weights {2,3,4}.
Verdict check_smooth(const LiePresentation& pres, int max_class = kDefaultMaxClass);

// The predicted presentation from abstract cup data: one weight-1 generator
// per H1 coordinate, one degree-2 relation per H2 coordinate, via the dual
// of the cup tensor.
LiePresentation presentation_from_cup(const CupData& data, int class_cap = 4);

}  // namespace nilq
