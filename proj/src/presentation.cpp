#include "nilq/presentation.hpp"

namespace nilq {

LiePresentation::LiePresentation(Alphabet alphabet, int class_cap,
                                 std::vector<LieElement> relations)
    : alphabet_(std::move(alphabet)), class_cap_(class_cap), relations_(std::move(relations)) {
  if (class_cap_ < 1) throw InputError("class cap must be >= 1");
  for (size_t i = 0; i < relations_.size(); ++i) {
    const LieElement& r = relations_[i];
    if (r.alphabet() != alphabet_)
      throw InputError("relation uses a different generator set");
    if (r.class_cap() != class_cap_)
      throw InputError("relation class cap differs from the presentation's");
    if (r.is_zero())
      throw InputError("relation " + std::to_string(i + 1) + " is zero after normal-forming");
    std::vector<int> ls = r.lengths();
    if (ls.front() < 2)
      throw InputError("relation " + std::to_string(i + 1) +
                       " has a degree-1 component; quotient generators must be genuine");
    if (ls.size() > 1) split_occurred_ = true;
    for (int l : ls) homogeneous_.push_back(r.length_component(l));
  }
}

LiePresentation LiePresentation::with_class_cap(int new_cap) const {
  std::vector<LieElement> rels;
  rels.reserve(relations_.size());
  for (const auto& r : relations_) rels.push_back(r.truncated(new_cap));
  return LiePresentation(alphabet_, new_cap, std::move(rels));
}

}  // namespace nilq
