#pragma once

#include <memory>
#include <string>

#include "nilq/words.hpp"

namespace nilq {

struct BracketTree;
using TreePtr = std::shared_ptr<const BracketTree>;

// A formal bracket word: a single generator or an ordered pair of subtrees.
// Immutable; subtrees are shared.
struct BracketTree {
  int leaf = -1;  // generator index when >= 0
  TreePtr left;
  TreePtr right;

  bool is_leaf() const { return leaf >= 0; }
  int length() const;
  Word foliage() const;  // generator sequence, left to right
  int weight(const Alphabet& alphabet) const;
};

TreePtr make_leaf(int generator_index);
TreePtr make_node(TreePtr left, TreePtr right);

bool tree_equal(const TreePtr& a, const TreePtr& b);

// The canonical bracketing of a Lyndon word, recursing on the standard
// factorization. Single letters map to leaves.
TreePtr standard_bracketing(const Word& w);

// A tree is a basis word iff its foliage is Lyndon and the tree is the
// standard bracketing of that foliage.
bool is_basis_word(const TreePtr& t);

std::string tree_to_string(const TreePtr& t, const Alphabet& alphabet);

}  // namespace nilq
