#pragma once

#include "nilq/constants.hpp"
#include "nilq/lie_element.hpp"
#include "nilq/tensor.hpp"

namespace nilq {

// All basis words of exactly the given bracket length, ordered
// lexicographically on the underlying Lyndon words.
std::vector<TreePtr> lyndon_basis(const Alphabet& alphabet, int degree);

// Normal form of a formal bracket word, truncated at the class cap.
LieElement rewrite(const TreePtr& expr, const Alphabet& alphabet, int class_cap);

// Normal form of a rational combination of bracket words.
LieElement rewrite(const std::vector<std::pair<Rat, TreePtr>>& expr,
                   const Alphabet& alphabet, int class_cap);

// Lie bracket of two normal forms; bilinear, antisymmetric, truncated.
LieElement bracket(const LieElement& a, const LieElement& b);

// Applies the substitution generator i -> images[i] (a Lie algebra
// endomorphism of the free algebra) and renormalizes.
LieElement substitute(const LieElement& e, const std::vector<LieElement>& images);

}  // namespace nilq
