#pragma once

#include <optional>

#include "nilq/quotient.hpp"

namespace nilq {

// log(exp(a) exp(b)) truncated at the given class, computed in the truncated
// free associative algebra and projected back onto the Lyndon basis. The
// result is asserted to be a pure Lie element.
LieElement bch(const LieElement& a, const LieElement& b, int klass,
               int max_class = kDefaultMaxBchClass);

// The two-variable series bch(x, y) at the given class, on a fixed internal
// two-letter alphabet. Cached; the cache is mutex-guarded.
const LieElement& universal_bch(int klass, int max_class = kDefaultMaxBchClass);

// An element of the group exp(u) for a graded quotient u, stored as the
// coordinates of its logarithm.
struct GroupElement {
  const GradedQuotient* quotient = nullptr;
  QVec log_coords;

  LieElement log() const { return quotient->element(log_coords); }
};

GroupElement group_identity(const GradedQuotient& q);
GroupElement group_element(const GradedQuotient& q, const LieElement& log);
// Multiplication by the truncated BCH series evaluated through the
// structure constants. Exact: the series terminates at the quotient's class.
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
// Inverse is -log a, since bch(a, -a) = 0 at every class.
GroupElement group_inv(const GroupElement& a);

struct AutomorphismResult {
  bool ok = false;
  std::string reason;  // set when !ok
  // basis pair witnessing a broken bracket, when that is the failure
  std::optional<std::pair<int, int>> counterexample;
  QMatrix matrix;  // the induced linear map on the quotient basis
};

// Extends a generator assignment bracket-multiplicatively over the quotient
// basis and decides whether it is an invertible Lie endomorphism. For
// successes, BCH equivariance is additionally asserted on a fixed sample.
AutomorphismResult automorphism_check(const GradedQuotient& q,
                                      const std::vector<LieElement>& images);

struct LatticeSpec {
  std::vector<LieElement> basis;
};

struct LatticeResult {
  bool closed = true;
  // indices of the offending pair and the fractional coordinate, when open
  std::optional<std::pair<int, int>> offending_pair;
  int offending_coord = -1;
  Rat offending_value;
};

// True iff products and inverses of lattice basis elements have integral
// coordinates in the lattice basis. Exhaustive over basis pairs.
LatticeResult lattice_closed(const GradedQuotient& q, const LatticeSpec& lattice);

}  // namespace nilq
