#pragma once

#include <string>
#include <vector>

#include "nilq/errors.hpp"

namespace nilq {

// A named generator with a positive weight (default 1). Weights record the
// extra grading used by the weight-feasibility checks; bracket length is the
// primary grading everywhere else.
struct Generator {
  std::string name;
  int weight = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// An ordered list of generators with pairwise distinct names.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& at(int i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const { return gens_; }

  // Index of a generator name, or -1.
  int index_of(const std::string& name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Generator> gens_;
};

}  // namespace nilq
