#include "nilq/report.hpp"

#include <sstream>

namespace nilq {

namespace {

Json int_list(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

std::string joined(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

}  // namespace

std::string tuple2_name(const GradedQuotient& q, int i, int j) {
  return q.basis_name(i) + "^" + q.basis_name(j);
}

Json witness_json(const WitnessData& w, const GradedQuotient& q) {
  Json out;
  if (const auto* d = std::get_if<DegreeWitness>(&w)) {
    out["check"] = "relation-degrees";
    out["degrees"] = int_list(d->degrees);
    out["offending"] = int_list(d->offending);
    out["allowed"] = int_list(d->allowed);
  } else if (const auto* ww = std::get_if<WeightWitness>(&w)) {
    out["check"] = "weight-feasibility";
    out["allowed_generator_weights"] = int_list(ww->allowed_gen_weights);
    out["allowed_relation_weights"] = int_list(ww->allowed_rel_weights);
    Json viol = Json::array();
    for (const auto& v : ww->certificate.violations) {
      Json jv;
      jv["generator_weights"] = int_list(v.generator_weights);
      jv["relation_index"] = v.relation_index;
      jv["component_weight"] = v.component_weight;
      viol.push_back(std::move(jv));
    }
    out["violations"] = std::move(viol);
  } else if (const auto* m = std::get_if<MasseyWitness>(&w)) {
    out["check"] = "massey-sweep";
    Json triple = Json::array();
    for (int i : m->triple) triple.push_back(q.alphabet().at(i).name);
    out["triple"] = std::move(triple);
    // representative in the Lambda^2 tuple basis of the sweep complex
    Json rep = Json::array();
    int idx = 0;
    const int n = q.total_dim();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++idx) {
        if (idx < static_cast<int>(m->representative.size()) &&
            m->representative[static_cast<size_t>(idx)] != 0) {
          Json term;
          term["coef"] = rat_str(m->representative[static_cast<size_t>(idx)]);
          term["tuple"] = tuple2_name(q, i, j);
          rep.push_back(std::move(term));
        }
      }
    }
    out["representative"] = std::move(rep);
    out["indeterminacy_dim"] = m->indeterminacy_dim;
  }
  return out;
}

std::string witness_text(const WitnessData& w, const GradedQuotient& q) {
  std::ostringstream os;
  if (const auto* d = std::get_if<DegreeWitness>(&w)) {
    os << "relation degrees {" << joined(d->degrees) << "} not within {"
       << joined(d->allowed) << "}; offending: {" << joined(d->offending) << "}";
  } else if (const auto* ww = std::get_if<WeightWitness>(&w)) {
    os << "no weight assignment from {" << joined(ww->allowed_gen_weights)
       << "} keeps relation weights within {" << joined(ww->allowed_rel_weights) << "}";
    if (!ww->certificate.violations.empty()) {
      const auto& v = ww->certificate.violations.front();
      os << " (e.g. weights (" << joined(v.generator_weights) << ") put relation "
         << v.relation_index + 1 << " at weight " << v.component_weight << ")";
    }
  } else if (const auto* m = std::get_if<MasseyWitness>(&w)) {
    os << "massey <" << q.alphabet().at(m->triple[0]).name << ","
       << q.alphabet().at(m->triple[1]).name << ","
       << q.alphabet().at(m->triple[2]).name << "> nonvanishing";
    os << " (indeterminacy dim " << m->indeterminacy_dim << ")";
  }
  return os.str();
}

int Report::exit_code() const {
  if (verdict && verdict->excluded()) return 2;
  return 0;
}

Json Report::render_json() const {
  Json j;
  j["schema"] = "nilq-report-v1";
  j["input"] = input;
  j["class"] = class_cap;
  j["dims"] = int_list(dims);
  j["lcs_dims"] = int_list(lcs);
  j["relation_degrees"] = int_list(relation_degrees);
  j["inhomogeneous_split"] = inhomogeneous_split;
  j["total_dim"] = total_dim;
  j["nilpotency_class"] = nilpotency_class;
  if (mode) {
    j["mode"] = *mode;
    j["verdict"] = verdict->excluded() ? "excluded" : "consistent";
    Json checks = Json::array();
    for (const CheckRun& c : verdict->checks_run) {
      Json jc;
      jc["name"] = c.name;
      jc["status"] = c.passed ? "pass" : "fail";
      checks.push_back(std::move(jc));
    }
    j["checks_run"] = std::move(checks);
    j["exit_code"] = exit_code();
  }
  j["caveat"] = kVerdictCaveat;
  return j;
}

std::string Report::render_text(const GradedQuotient& q) const {
  std::ostringstream os;
  os << "input:              " << input << "\n";
  os << "class cap:          " << class_cap << "\n";
  os << "dims by degree:     (" << joined(dims) << ")\n";
  os << "lcs dims:           (" << joined(lcs) << ")\n";
  os << "total dim:          " << total_dim << "\n";
  os << "nilpotency class:   " << nilpotency_class << "\n";
  os << "relation degrees:   {" << joined(relation_degrees) << "}\n";
  if (inhomogeneous_split)
    os << "note:               inhomogeneous relations were split into "
          "length-homogeneous components\n";
  if (mode) {
    os << "mode:               " << *mode << "\n";
    for (const CheckRun& c : verdict->checks_run)
      os << "check " << c.name << ": " << (c.passed ? "pass" : "fail") << "\n";
    os << "verdict:            "
       << (verdict->excluded() ? "excluded" : "consistent") << "\n";
    for (const WitnessData& w : verdict->witnesses)
      os << "witness:            " << witness_text(w, q) << "\n";
  }
  os << "caveat:             " << kVerdictCaveat << "\n";
  return os.str();
}

}  // namespace nilq
