#include "nilq/generators.hpp"

#include <set>

namespace nilq {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw InputError("generator list must be nonempty");
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty()) throw InputError("generator name must be nonempty");
    if (g.weight < 1) throw InputError("generator weight must be >= 1: " + g.name);
    if (!seen.insert(g.name).second)
      throw InputError("duplicate generator name: " + g.name);
  }
}

int Alphabet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

}  // namespace nilq
