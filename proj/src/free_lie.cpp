#include "nilq/free_lie.hpp"

namespace nilq {

std::vector<TreePtr> lyndon_basis(const Alphabet& alphabet, int degree) {
  if (degree < 1) throw InputError("degree must be >= 1");
  std::vector<TreePtr> out;
  for (const Word& w : lyndon_words(alphabet.size(), degree))
    out.push_back(standard_bracketing(w));
  return out;
}

LieElement rewrite(const TreePtr& expr, const Alphabet& alphabet, int class_cap) {
  if (class_cap < 1) throw InputError("class cap must be >= 1");
  Word w = expr->foliage();
  for (int g : w)
    if (g < 0 || g >= alphabet.size()) throw InputError("unknown generator index");
  TensorElement t = expand_tree(expr, alphabet.size(), class_cap);
  return lie_project(t, alphabet, class_cap);
}

LieElement rewrite(const std::vector<std::pair<Rat, TreePtr>>& expr,
                   const Alphabet& alphabet, int class_cap) {
  LieElement sum(alphabet, class_cap);
  for (const auto& [c, t] : expr) {
    LieElement e = rewrite(t, alphabet, class_cap);
    e *= c;
    sum += e;
  }
  return sum;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  a.require_compatible(b);
  TensorElement ta = expand_lie(a);
  TensorElement tb = expand_lie(b);
  return lie_project(ta.commutator_with(tb), a.alphabet(), a.class_cap());
}

LieElement substitute(const LieElement& e, const std::vector<LieElement>& images) {
  if (static_cast<int>(images.size()) != e.alphabet().size())
    throw InputError("substitute: one image per generator required");
  for (const auto& im : images) {
    if (im.alphabet() != images[0].alphabet() || im.class_cap() != images[0].class_cap())
      throw InputError("substitute: images must share alphabet and cap");
  }
  const Alphabet& target = images[0].alphabet();
  int cap = images[0].class_cap();
  LieElement out(target, cap);
  for (const auto& [w, c] : e.terms()) {
    // evaluate the standard bracketing with leaves replaced by images
    auto eval = [&images](auto&& self, const BracketTree& t) -> LieElement {
      if (t.is_leaf()) return images[static_cast<size_t>(t.leaf)];
      return bracket(self(self, *t.left), self(self, *t.right));
    };
    TreePtr tree = standard_bracketing(w);
    LieElement v = eval(eval, *tree);
    v *= c;
    out += v;
  }
  return out;
}

}  // namespace nilq
