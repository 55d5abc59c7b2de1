#pragma once

#include <vector>

#include "nilq/matrix.hpp"

namespace nilq {

// An abstract cup pairing H1 x H1 -> H2: one antisymmetric dim_h1 x dim_h1
// matrix per H2 coordinate.
struct CupData {
  int dim_h1 = 0;
  int dim_h2 = 0;
  std::vector<QMatrix> components;  // dim_h2 matrices

  void validate() const;
};

}  // namespace nilq
