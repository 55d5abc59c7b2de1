#include "nilq/tensor.hpp"

#include <mutex>

namespace nilq {

TensorElement::TensorElement(int num_letters, int cap) : k_(num_letters), cap_(cap) {
  if (k_ < 1) throw Error("tensor algebra needs at least one letter");
  if (cap_ < 0) throw Error("tensor cap must be >= 0");
}

Rat TensorElement::coeff(const Word& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void TensorElement::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(w.size()) > cap_) return;
  auto [it, inserted] = coeffs_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  for (const auto& [w, c] : other.coeffs_) add_term(w, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  for (const auto& [w, c] : other.coeffs_) add_term(w, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [w, c] : coeffs_) c *= scalar;
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement r(a.k_, std::min(a.cap_, b.cap_));
  for (const auto& [wa, ca] : a.coeffs_) {
    if (static_cast<int>(wa.size()) > r.cap_) continue;
    for (const auto& [wb, cb] : b.coeffs_) {
      if (static_cast<int>(wa.size() + wb.size()) > r.cap_) continue;
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Rat prod = ca * cb;
      r.add_term(w, prod);
    }
  }
  return r;
}

TensorElement TensorElement::commutator_with(const TensorElement& other) const {
  return (*this) * other - other * (*this);
}

TensorElement exp_truncated(const TensorElement& a) {
  if (a.coeff(Word{}) != 0) throw Error("exp needs zero constant term");
  TensorElement result(a.num_letters(), a.cap());
  result.add_term(Word{}, 1);
  TensorElement power(a.num_letters(), a.cap());
  power.add_term(Word{}, 1);
  Rat factorial = 1;
  for (int n = 1; n <= a.cap(); ++n) {
    power = power * a;
    if (power.is_zero()) break;
    factorial *= n;
    TensorElement term = power;
    Rat inv = Rat(1) / factorial;
    term *= inv;
    result += term;
  }
  return result;
}

TensorElement log_truncated(const TensorElement& a) {
  if (a.coeff(Word{}) != 1) throw Error("log needs constant term 1");
  TensorElement u = a;
  u.add_term(Word{}, -1);  // u = a - 1, no constant term
  TensorElement result(a.num_letters(), a.cap());
  TensorElement power(a.num_letters(), a.cap());
  power.add_term(Word{}, 1);
  for (int n = 1; n <= a.cap(); ++n) {
    power = power * u;
    if (power.is_zero()) break;
    TensorElement term = power;
    Rat c = Rat((n % 2 == 1) ? 1 : -1, n);
    c.canonicalize();
    term *= c;
    result += term;
  }
  return result;
}

TensorElement expand_tree(const TreePtr& t, int num_letters, int cap) {
  if (!t) throw Error("expand_tree of null tree");
  if (t->is_leaf()) {
    TensorElement e(num_letters, cap);
    e.add_term(Word{t->leaf}, 1);
    return e;
  }
  TensorElement l = expand_tree(t->left, num_letters, cap);
  TensorElement r = expand_tree(t->right, num_letters, cap);
  return l.commutator_with(r);
}

namespace {

// Cached expansions of standard bracketings, keyed per alphabet size.
struct ExpansionCache {
  std::mutex mu;
  std::map<std::pair<int, Word>, TensorElement> entries;
};

ExpansionCache& expansion_cache() {
  static ExpansionCache cache;
  return cache;
}

TensorElement expand_basis_word(const Word& w, int k) {
  auto& cache = expansion_cache();
  std::pair<int, Word> key{k, w};
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end() && it->second.cap() >= static_cast<int>(w.size()))
      return it->second;
  }
  // expansion of a homogeneous bracket word needs cap = its own length only
  TensorElement e = expand_tree(standard_bracketing(w), k, static_cast<int>(w.size()));
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.entries.insert_or_assign(key, e);
  }
  return e;
}

}  // namespace

TensorElement expand_lie(const LieElement& e) {
  TensorElement t(e.alphabet().size(), e.class_cap());
  for (const auto& [w, c] : e.terms()) {
    TensorElement ew = expand_basis_word(w, e.alphabet().size());
    ew *= c;
    t += ew;
  }
  return t;
}

LieElement lie_project(const TensorElement& t, const Alphabet& alphabet, int class_cap) {
  if (t.num_letters() != alphabet.size())
    throw Error("lie_project: alphabet size mismatch");
  LieElement out(alphabet, class_cap);
  TensorElement rest(t.num_letters(), t.cap());
  for (const auto& [w, c] : t.terms())
    if (!w.empty() && static_cast<int>(w.size()) <= class_cap) rest.add_term(w, c);
  // Words are ordered by (length, lex); within a fixed multidegree the
  // expansion of a basis word is the word itself plus lex-greater words, so
  // stripping the first term is strictly decreasing and terminates.
  while (!rest.is_zero()) {
    const auto& [w, c] = *rest.terms().begin();
    if (!is_lyndon(w))
      throw Error("tensor element is not a Lie element (non-Lyndon leading word)");
    Rat coeff = c;
    TensorElement ew = expand_basis_word(w, t.num_letters());
    ew *= coeff;
    rest -= ew;
    out.add_term(w, coeff);
  }
  return out;
}

}  // namespace nilq
