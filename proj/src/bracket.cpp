#include "nilq/bracket.hpp"

namespace nilq {

int BracketTree::length() const {
  if (is_leaf()) return 1;
  return left->length() + right->length();
}

Word BracketTree::foliage() const {
  Word w;
  w.reserve(static_cast<size_t>(length()));
  auto walk = [&w](auto&& self, const BracketTree& t) -> void {
    if (t.is_leaf()) {
      w.push_back(t.leaf);
      return;
    }
    self(self, *t.left);
    self(self, *t.right);
  };
  walk(walk, *this);
  return w;
}

int BracketTree::weight(const Alphabet& alphabet) const {
  return word_weight(foliage(), alphabet);
}

TreePtr make_leaf(int generator_index) {
  if (generator_index < 0) throw Error("generator index must be >= 0");
  auto t = std::make_shared<BracketTree>();
  t->leaf = generator_index;
  return t;
}

TreePtr make_node(TreePtr left, TreePtr right) {
  if (!left || !right) throw Error("bracket of null subtree");
  auto t = std::make_shared<BracketTree>();
  t->left = std::move(left);
  t->right = std::move(right);
  return t;
}

bool tree_equal(const TreePtr& a, const TreePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->is_leaf() != b->is_leaf()) return false;
  if (a->is_leaf()) return a->leaf == b->leaf;
  return tree_equal(a->left, b->left) && tree_equal(a->right, b->right);
}

TreePtr standard_bracketing(const Word& w) {
  if (w.empty()) throw Error("standard_bracketing of empty word");
  if (!is_lyndon(w)) throw Error("standard_bracketing requires a Lyndon word");
  if (w.size() == 1) return make_leaf(w[0]);
  auto [u, v] = standard_factorization(w);
  return make_node(standard_bracketing(u), standard_bracketing(v));
}

bool is_basis_word(const TreePtr& t) {
  if (!t) return false;
  Word w = t->foliage();
  if (!is_lyndon(w)) return false;
  return tree_equal(t, standard_bracketing(w));
}

std::string tree_to_string(const TreePtr& t, const Alphabet& alphabet) {
  if (!t) return "<null>";
  if (t->is_leaf()) return alphabet.at(t->leaf).name;
  return "[" + tree_to_string(t->left, alphabet) + "," +
         tree_to_string(t->right, alphabet) + "]";
}

}  // namespace nilq
