#include "nilq/obstruction.hpp"

#include <algorithm>

namespace nilq {

namespace {

// Weight of a word under a trial assignment (not the alphabet's own weights).
int trial_weight(const Word& w, const std::vector<int>& weights) {
  int s = 0;
  for (int g : w) s += weights[static_cast<size_t>(g)];
  return s;
}

// Weights of the weight-homogeneous components of e, ascending.
std::vector<int> component_weights(const LieElement& e, const std::vector<int>& weights) {
  std::set<int> ws;
  for (const auto& [w, c] : e.terms()) ws.insert(trial_weight(w, weights));
  return {ws.begin(), ws.end()};
}

}  // namespace

WeightResult weight_feasibility(const LiePresentation& pres,
                                const std::set<int>& allowed_gen_weights,
                                const std::set<int>& allowed_rel_weights,
                                long search_cap) {
  if (allowed_gen_weights.empty() || allowed_rel_weights.empty())
    throw InputError("allowed weight sets must be nonempty");
  for (int w : allowed_gen_weights)
    if (w < 1) throw InputError("generator weights must be positive");
  for (int w : allowed_rel_weights)
    if (w < 1) throw InputError("relation weights must be positive");

  const int k = pres.alphabet().size();
  std::vector<int> choices(allowed_gen_weights.begin(), allowed_gen_weights.end());
  double space = 1;
  for (int i = 0; i < k; ++i) space *= static_cast<double>(choices.size());
  if (space > static_cast<double>(search_cap))
    throw CapExceeded("weight assignment search space exceeds cap");

  std::vector<int> minimal = minimal_relation_subset(pres);
  std::vector<const LieElement*> rels;
  for (int idx : minimal) rels.push_back(&pres.homogeneous_relations()[static_cast<size_t>(idx)]);

  WeightInfeasibility cert;
  std::vector<size_t> odo(static_cast<size_t>(k), 0);
  while (true) {
    std::vector<int> weights;
    weights.reserve(static_cast<size_t>(k));
    for (size_t i = 0; i < odo.size(); ++i) weights.push_back(choices[odo[i]]);

    bool ok = true;
    for (size_t ri = 0; ri < rels.size() && ok; ++ri) {
      for (int cw : component_weights(*rels[ri], weights)) {
        if (!allowed_rel_weights.count(cw)) {
          cert.violations.push_back({weights, static_cast<int>(ri), cw});
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      WeightAssignment out;
      out.generator_weights = weights;
      for (const LieElement* r : rels)
        for (int cw : component_weights(*r, weights)) out.relation_weights.push_back(cw);
      std::sort(out.relation_weights.begin(), out.relation_weights.end());
      return out;
    }

    // odometer, last index fastest
    int pos = k - 1;
    while (pos >= 0 && odo[static_cast<size_t>(pos)] + 1 == choices.size()) {
      odo[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++odo[static_cast<size_t>(pos)];
  }
  return cert;
}

namespace {

CheckRun degree_check(const LiePresentation& pres, const std::set<int>& allowed,
                      int max_class, std::vector<WitnessData>& witnesses) {
  std::vector<int> degrees = minimal_relation_degrees(pres, max_class);
  std::vector<int> offending;
  for (int d : degrees)
    if (!allowed.count(d)) offending.push_back(d);
  CheckRun run{"relation-degrees", offending.empty()};
  if (!run.passed)
    witnesses.push_back(DegreeWitness{degrees, offending,
                                      std::vector<int>(allowed.begin(), allowed.end())});
  return run;
}

CheckRun weight_check(const LiePresentation& pres, const std::set<int>& gen_w,
                      const std::set<int>& rel_w, std::vector<WitnessData>& witnesses) {
  WeightResult res = weight_feasibility(pres, gen_w, rel_w);
  CheckRun run{"weight-feasibility", std::holds_alternative<WeightAssignment>(res)};
  if (!run.passed)
    witnesses.push_back(WeightWitness{std::vector<int>(gen_w.begin(), gen_w.end()),
                                      std::vector<int>(rel_w.begin(), rel_w.end()),
                                      std::get<WeightInfeasibility>(res)});
  return run;
}

}  // namespace

Verdict check_smooth_proper(const LiePresentation& pres, int max_class) {
  Verdict v;
  v.checks_run.push_back(degree_check(pres, {2}, max_class, v.witnesses));
  v.checks_run.push_back(weight_check(pres, {1}, {2}, v.witnesses));

  // Massey sweep. The triple product on H^1 only sees degrees <= 3, so the
  // quotient is computed at class cap >= 3 to keep truncation relations out
  // of the picture for cap-2 inputs.
  {
    LiePresentation p3 = pres.class_cap() >= 3 ? pres : pres.with_class_cap(3);
    GradedQuotient q = nilpotent_quotient(p3, std::max(max_class, 3));
    CochainComplex cx(q, std::min(3, q.total_dim()));
    int h1 = q.dims().empty() ? 0 : q.dims()[0];
    CheckRun run{"massey-sweep", true};
    for (int i = 0; i < h1 && run.passed; ++i) {
      for (int j = 0; j < h1 && run.passed; ++j) {
        for (int k2 = 0; k2 < h1 && run.passed; ++k2) {
          MasseyResult m = massey(cx, dual_class(cx, i), dual_class(cx, j),
                                  dual_class(cx, k2));
          if (m.status == MasseyResult::Status::NonVanishing) {
            run.passed = false;
            v.witnesses.push_back(MasseyWitness{{i, j, k2}, m.value.representative,
                                                m.indeterminacy_dim});
          }
        }
      }
    }
    v.checks_run.push_back(run);
  }

  bool all = true;
  for (const CheckRun& r : v.checks_run) all = all && r.passed;
  v.outcome = all ? Verdict::Outcome::Consistent : Verdict::Outcome::Excluded;
  return v;
}

Verdict check_smooth(const LiePresentation& pres, int max_class) {
  Verdict v;
  v.checks_run.push_back(degree_check(pres, {2, 3, 4}, max_class, v.witnesses));
  v.checks_run.push_back(weight_check(pres, {1, 2}, {2, 3, 4}, v.witnesses));
  bool all = true;
  for (const CheckRun& r : v.checks_run) all = all && r.passed;
  v.outcome = all ? Verdict::Outcome::Consistent : Verdict::Outcome::Excluded;
  return v;
}

LiePresentation presentation_from_cup(const CupData& data, int class_cap) {
  data.validate();
  if (data.dim_h1 < 1) throw InputError("cup data needs dim_h1 >= 1");
  std::vector<Generator> gens;
  for (int i = 0; i < data.dim_h1; ++i)
    gens.push_back({"x" + std::to_string(i + 1), 1});
  Alphabet alphabet(std::move(gens));

  std::vector<LieElement> relations;
  for (int k = 0; k < data.dim_h2; ++k) {
    LieElement r(alphabet, class_cap);
    for (int i = 0; i < data.dim_h1; ++i)
      for (int j = i + 1; j < data.dim_h1; ++j)
        r.add_term(Word{i, j}, data.components[static_cast<size_t>(k)].at(i, j));
    if (!r.is_zero()) relations.push_back(std::move(r));
  }
  LiePresentation pres(alphabet, class_cap, std::move(relations));

  // structural sanity: a quadratic presentation by construction
  for (int d : minimal_relation_degrees(pres))
    if (d != 2) throw Error("internal: cup presentation has a non-quadratic relation");
  return pres;
}

}  // namespace nilq
