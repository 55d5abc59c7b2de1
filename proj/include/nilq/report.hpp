#pragma once

#include <nlohmann/json.hpp>

#include "nilq/obstruction.hpp"

namespace nilq {

using Json = nlohmann::ordered_json;

// The structured document behind `dims` and `check`. Rendered as aligned
// text or as JSON; the JSON form round-trips bit-for-bit.
struct Report {
  std::string input;
  int class_cap = 0;
  std::vector<int> dims;
  std::vector<int> lcs;
  std::vector<int> relation_degrees;
  bool inhomogeneous_split = false;
  int total_dim = 0;
  int nilpotency_class = 0;

  std::optional<std::string> mode;  // set for check reports
  std::optional<Verdict> verdict;
  bool full_battery = false;  // include details for passing checks

  std::string render_text(const GradedQuotient& q) const;
  Json render_json() const;

  int exit_code() const;
};

Json witness_json(const WitnessData& w, const GradedQuotient& q);
std::string witness_text(const WitnessData& w, const GradedQuotient& q);

// Names the Lambda^2 tuple basis of the quotient's complex, e.g. "x^[x,y]".
std::string tuple2_name(const GradedQuotient& q, int i, int j);

}  // namespace nilq
