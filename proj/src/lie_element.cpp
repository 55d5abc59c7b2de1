#include "nilq/lie_element.hpp"

#include <set>
#include <sstream>

namespace nilq {

LieElement::LieElement(Alphabet alphabet, int class_cap)
    : alphabet_(std::move(alphabet)), class_cap_(class_cap) {
  if (class_cap_ < 1) throw InputError("class cap must be >= 1");
}

LieElement LieElement::generator(const Alphabet& alphabet, int index, int class_cap) {
  LieElement e(alphabet, class_cap);
  if (index < 0 || index >= alphabet.size())
    throw InputError("generator index out of range");
  e.add_term(Word{index}, 1);
  return e;
}

Rat LieElement::coeff(const Word& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void LieElement::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(w.size()) > class_cap_) return;
  if (!is_lyndon(w)) throw Error("LieElement keys must be Lyndon words");
  for (int g : w)
    if (g < 0 || g >= alphabet_.size()) throw Error("letter out of alphabet range");
  auto [it, inserted] = coeffs_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void LieElement::require_compatible(const LieElement& other) const {
  if (alphabet_ != other.alphabet_)
    throw InputError("mismatched generator sets");
  if (class_cap_ != other.class_cap_)
    throw InputError("mismatched class caps");
}

LieElement& LieElement::operator+=(const LieElement& other) {
  require_compatible(other);
  for (const auto& [w, c] : other.coeffs_) add_term(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  require_compatible(other);
  for (const auto& [w, c] : other.coeffs_) add_term(w, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [w, c] : coeffs_) c *= scalar;
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement r = *this;
  for (auto& [w, c] : r.coeffs_) c = -c;
  return r;
}

bool operator==(const LieElement& a, const LieElement& b) {
  return a.alphabet_ == b.alphabet_ && a.class_cap_ == b.class_cap_ &&
         a.coeffs_ == b.coeffs_;
}

std::vector<int> LieElement::lengths() const {
  std::set<int> ls;
  for (const auto& [w, c] : coeffs_) ls.insert(static_cast<int>(w.size()));
  return {ls.begin(), ls.end()};
}

LieElement LieElement::length_component(int length) const {
  LieElement r(alphabet_, class_cap_);
  for (const auto& [w, c] : coeffs_)
    if (static_cast<int>(w.size()) == length) r.add_term(w, c);
  return r;
}

int LieElement::homogeneous_weight() const {
  if (is_zero()) throw Error("weight of zero element");
  int weight = -1;
  for (const auto& [w, c] : coeffs_) {
    int ww = word_weight(w, alphabet_);
    if (weight == -1) weight = ww;
    else if (weight != ww) throw Error("element is not weight-homogeneous");
  }
  return weight;
}

std::vector<std::pair<int, LieElement>> LieElement::weight_components() const {
  std::map<int, LieElement> comps;
  for (const auto& [w, c] : coeffs_) {
    int ww = word_weight(w, alphabet_);
    auto it = comps.find(ww);
    if (it == comps.end())
      it = comps.emplace(ww, LieElement(alphabet_, class_cap_)).first;
    it->second.add_term(w, c);
  }
  std::vector<std::pair<int, LieElement>> out;
  for (auto& [ww, e] : comps) out.emplace_back(ww, std::move(e));
  return out;
}

LieElement LieElement::truncated(int new_cap) const {
  LieElement r(alphabet_, new_cap);
  for (const auto& [w, c] : coeffs_)
    if (static_cast<int>(w.size()) <= new_cap) r.add_term(w, c);
  return r;
}

std::string LieElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : coeffs_) {
    Rat a = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (a != 1) os << a.get_str() << "*";
    os << tree_to_string(standard_bracketing(w), alphabet_);
  }
  return os.str();
}

}  // namespace nilq
