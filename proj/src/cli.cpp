#include "nilq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nilq/bch.hpp"
#include "nilq/parse.hpp"
#include "nilq/report.hpp"

namespace nilq::cli {

namespace {

struct Ctx {
  std::ostringstream out;
  std::ostringstream err;
  bool json = false;
  bool full_battery = false;
  int max_class = kDefaultMaxClass;
  bool max_class_set = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LiePresentation load_presentation(Ctx& ctx, const std::string& path) {
  try {
    LiePresentation pres = parse_presentation(read_file(path));
    if (pres.class_cap() > ctx.max_class)
      throw CapExceeded("class " + std::to_string(pres.class_cap()) +
                        " exceeds the cap " + std::to_string(ctx.max_class) +
                        " (raise with --max-class)");
    return pres;
  } catch (const ParseError& e) {
    throw ParseError(e.line, e.col,
                     path + ":" + std::to_string(e.line) + ":" + std::to_string(e.col) +
                         ": " + e.what());
  }
}

void emit_json(Ctx& ctx, const Json& j) { ctx.out << j.dump(2) << "\n"; }

Json lie_terms_json(const LieElement& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms()) {
    Json t;
    t["coef"] = rat_str(c);
    t["word"] = tree_to_string(standard_bracketing(w), e.alphabet());
    terms.push_back(std::move(t));
  }
  return terms;
}

Report build_report(const std::string& path, const LiePresentation& pres,
                    const GradedQuotient& q) {
  Report r;
  r.input = path;
  r.class_cap = pres.class_cap();
  r.dims = q.dims();
  r.lcs = lcs_dims(q);
  r.relation_degrees = minimal_relation_degrees(pres);
  r.inhomogeneous_split = pres.length_split_occurred();
  r.total_dim = q.total_dim();
  r.nilpotency_class = q.nilpotency_class();
  return r;
}

int cmd_dims(Ctx& ctx, const std::string& path) {
  LiePresentation pres = load_presentation(ctx, path);
  GradedQuotient q = nilpotent_quotient(pres, ctx.max_class);
  Report r = build_report(path, pres, q);
  if (ctx.json) emit_json(ctx, r.render_json());
  else ctx.out << r.render_text(q);
  return kExitOk;
}

int check_one(Ctx& ctx, const std::string& path, const std::string& mode) {
  LiePresentation pres = load_presentation(ctx, path);
  GradedQuotient q = nilpotent_quotient(pres, ctx.max_class);
  Report r = build_report(path, pres, q);
  r.mode = mode;
  r.verdict = mode == "smooth" ? check_smooth(pres, ctx.max_class)
                               : check_smooth_proper(pres, ctx.max_class);
  r.full_battery = ctx.full_battery;

  // massey witnesses live in the sweep quotient (class cap raised to >= 3)
  GradedQuotient qw = pres.class_cap() >= 3
                          ? std::move(q)
                          : nilpotent_quotient(pres.with_class_cap(3),
                                               std::max(ctx.max_class, 3));
  if (ctx.json) {
    Json j = r.render_json();
    Json ws = Json::array();
    for (const WitnessData& w : r.verdict->witnesses) ws.push_back(witness_json(w, qw));
    j["witnesses"] = std::move(ws);
    if (ctx.full_battery) {
      // detail passing checks too
      Json detail;
      detail["minimal_relation_degrees"] = r.render_json()["relation_degrees"];
      j["full_battery"] = std::move(detail);
    }
    emit_json(ctx, j);
  } else {
    ctx.out << r.render_text(qw);
  }
  return r.exit_code();
}

int cmd_check(Ctx& ctx, const std::string& path, const std::string& mode,
              const std::string& all_dir) {
  if (!all_dir.empty()) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(all_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".lie")
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("no .lie files in " + all_dir);
    int worst = kExitOk;
    for (const auto& f : files) {
      int code = check_one(ctx, f, mode);
      worst = std::max(worst, code);
      ctx.out << "\n";
    }
    return worst;
  }
  if (path.empty()) throw InputError("check needs a presentation file or --all <dir>");
  return check_one(ctx, path, mode);
}

int cmd_bch(Ctx& ctx, int klass, const std::string& ea, const std::string& eb) {
  std::vector<std::string> names = scan_identifiers(ea + " " + eb);
  if (names.empty()) throw InputError("no generators found in the expressions");
  std::vector<Generator> gens;
  for (const auto& n : names) gens.push_back({n, 1});
  Alphabet alphabet(std::move(gens));
  int bch_cap = ctx.max_class_set ? ctx.max_class : kDefaultMaxBchClass;
  LieElement a = parse_expression(ea, alphabet, klass);
  LieElement b = parse_expression(eb, alphabet, klass);
  LieElement z = bch(a, b, klass, bch_cap);
  if (ctx.json) {
    Json j;
    j["schema"] = "nilq-bch-v1";
    j["class"] = klass;
    j["a"] = ea;
    j["b"] = eb;
    j["result"] = z.to_string();
    j["terms"] = lie_terms_json(z);
    emit_json(ctx, j);
  } else {
    ctx.out << z.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_cohomology(Ctx& ctx, const std::string& path, int degree) {
  LiePresentation pres = load_presentation(ctx, path);
  GradedQuotient q = nilpotent_quotient(pres, ctx.max_class);
  CochainComplex cx(q);
  int lo = degree >= 0 ? degree : 0;
  int hi = degree >= 0 ? degree : q.total_dim();
  std::vector<int> b;
  for (int p = lo; p <= hi; ++p) b.push_back(betti(cx, p).dim);
  if (ctx.json) {
    Json j;
    j["schema"] = "nilq-cohomology-v1";
    j["input"] = path;
    j["from_degree"] = lo;
    Json arr = Json::array();
    for (int x : b) arr.push_back(x);
    j["betti"] = std::move(arr);
    emit_json(ctx, j);
  } else {
    for (int p = lo; p <= hi; ++p)
      ctx.out << "b" << p << " = " << b[static_cast<size_t>(p - lo)] << "\n";
  }
  return kExitOk;
}

int require_degree1_dual(const GradedQuotient& q, const std::string& name) {
  int idx = q.alphabet().index_of(name);
  if (idx < 0) throw InputError("unknown generator: " + name);
  // degree-1 duals sit at the first dims[0] flat indices, in generator order
  const auto& words = q.basis();
  for (int i = 0; i < q.total_dim(); ++i)
    if (q.basis_elt(i).degree == 1 && q.basis_elt(i).word == Word{idx}) return i;
  throw InputError("generator " + name + " vanishes in the quotient");
}

std::string cochain2_string(const GradedQuotient& q, const CochainComplex& cx,
                            const QVec& v) {
  std::ostringstream os;
  bool first = true;
  for (size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    const auto& tuple = cx.tuples(2)[t];
    Rat a = abs(v[t]);
    bool neg = v[t] < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (a != 1) os << a.get_str() << "*";
    os << tuple2_name(q, tuple[0], tuple[1]);
  }
  if (first) os << "0";
  return os.str();
}

int cmd_cup(Ctx& ctx, const std::string& path, const std::string& g1,
            const std::string& g2) {
  LiePresentation pres = load_presentation(ctx, path);
  GradedQuotient q = nilpotent_quotient(pres, ctx.max_class);
  CochainComplex cx(q, std::min(3, q.total_dim()));
  CohomologyClass a = dual_class(cx, require_degree1_dual(q, g1));
  CohomologyClass b = dual_class(cx, require_degree1_dual(q, g2));
  CohomologyClass c = cup(cx, a, b);
  bool zero = class_is_zero(cx, c);
  if (ctx.json) {
    Json j;
    j["schema"] = "nilq-cup-v1";
    j["input"] = path;
    j["arguments"] = Json::array({g1, g2});
    j["zero_in_h2"] = zero;
    j["representative"] = cochain2_string(q, cx, c.representative);
    emit_json(ctx, j);
  } else {
    ctx.out << "cup(" << g1 << "~, " << g2 << "~) = " << cochain2_string(q, cx, c.representative)
            << (zero ? "  (zero in H2)" : "  (nonzero in H2)") << "\n";
  }
  return kExitOk;
}

int cmd_massey(Ctx& ctx, const std::string& path, const std::string& g1,
               const std::string& g2, const std::string& g3) {
  LiePresentation pres = load_presentation(ctx, path);
  GradedQuotient q = nilpotent_quotient(pres, ctx.max_class);
  CochainComplex cx(q, std::min(3, q.total_dim()));
  MasseyResult m = massey(cx, dual_class(cx, require_degree1_dual(q, g1)),
                          dual_class(cx, require_degree1_dual(q, g2)),
                          dual_class(cx, require_degree1_dual(q, g3)));
  std::string status = m.status == MasseyResult::Status::Undefined ? "undefined"
                       : m.status == MasseyResult::Status::Vanishing ? "vanishing"
                                                                     : "nonvanishing";
  if (ctx.json) {
    Json j;
    j["schema"] = "nilq-massey-v1";
    j["input"] = path;
    j["arguments"] = Json::array({g1, g2, g3});
    j["status"] = status;
    if (m.status != MasseyResult::Status::Undefined) {
      j["representative"] = cochain2_string(q, cx, m.value.representative);
      j["indeterminacy_dim"] = m.indeterminacy_dim;
    }
    emit_json(ctx, j);
  } else {
    ctx.out << "massey(" << g1 << "~, " << g2 << "~, " << g3 << "~): " << status << "\n";
    if (m.status != MasseyResult::Status::Undefined) {
      ctx.out << "representative:    " << cochain2_string(q, cx, m.value.representative)
              << "\n";
      ctx.out << "indeterminacy dim: " << m.indeterminacy_dim << "\n";
    }
  }
  return kExitOk;
}

CupData parse_cup_file(const std::string& text) {
  Json j = Json::parse(text, nullptr, true);
  CupData data;
  data.dim_h1 = j.at("dim_h1").get<int>();
  data.dim_h2 = j.at("dim_h2").get<int>();
  for (int k = 0; k < data.dim_h2; ++k)
    data.components.emplace_back(data.dim_h1, data.dim_h1);
  for (const auto& entry : j.at("cup")) {
    int i = entry.at("i").get<int>();
    int jj = entry.at("j").get<int>();
    int k = entry.at("k").get<int>();
    Rat c = rat_from_string(entry.at("c").get<std::string>());
    if (k < 0 || k >= data.dim_h2 || i < 0 || i >= data.dim_h1 || jj < 0 ||
        jj >= data.dim_h1)
      throw InputError("cup entry out of range");
    data.components[static_cast<size_t>(k)].at(i, jj) = c;
    data.components[static_cast<size_t>(k)].at(jj, i) = -c;
  }
  data.validate();
  return data;
}

int cmd_build_from_cup(Ctx& ctx, const std::string& path, int klass) {
  CupData data;
  try {
    data = parse_cup_file(read_file(path));
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad cup data: ") + e.what());
  }
  LiePresentation pres = presentation_from_cup(data, klass);
  std::string text = serialize_presentation(pres);
  if (ctx.json) {
    Json j;
    j["schema"] = "nilq-presentation-v1";
    j["input"] = path;
    j["class"] = klass;
    j["presentation"] = text;
    emit_json(ctx, j);
  } else {
    ctx.out << text;
  }
  return kExitOk;
}

int cmd_group(Ctx& ctx, const std::string& path, const std::string& op,
              const std::string& ea, const std::string& eb) {
  LiePresentation pres = load_presentation(ctx, path);
  GradedQuotient q = nilpotent_quotient(pres, ctx.max_class);
  LieElement a = parse_expression(ea, pres.alphabet(), pres.class_cap());
  GroupElement ga = group_element(q, a);
  GroupElement result = ga;
  if (op == "mul") {
    if (eb.empty()) throw InputError("group mul needs two elements");
    LieElement b = parse_expression(eb, pres.alphabet(), pres.class_cap());
    result = group_mul(ga, group_element(q, b));
  } else if (op == "inv") {
    result = group_inv(ga);
  } else {
    throw InputError("group op must be mul or inv");
  }
  LieElement log = result.log();
  if (ctx.json) {
    Json j;
    j["schema"] = "nilq-group-v1";
    j["input"] = path;
    j["op"] = op;
    j["log"] = log.to_string();
    j["terms"] = lie_terms_json(log);
    emit_json(ctx, j);
  } else {
    ctx.out << "log = " << log.to_string() << "\n";
  }
  return kExitOk;
}

}  // namespace

CliResult run(const std::vector<std::string>& argv) {
  Ctx ctx;
  CLI::App app{"exact engine for finitely presented nilpotent Lie algebras"};
  app.name("nilq");
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "machine-readable output");
  app.add_flag("--full-battery", ctx.full_battery,
               "include details for passing checks in reports");
  auto* mc = app.add_option("--max-class", ctx.max_class,
                            "override the class hard limit (default 10; 8 for bch)");

  if (const char* env = std::getenv("NILQ_MAX_CLASS")) {
    try {
      ctx.max_class = std::stoi(env);
      ctx.max_class_set = true;
    } catch (...) {
    }
  }

  std::string path, mode, all_dir, g1, g2, g3, expr_a, expr_b, op;
  int klass = 0, degree = -1;

  auto* dims = app.add_subcommand("dims", "graded quotient dimensions");
  dims->add_option("file", path)->required();

  auto* check = app.add_subcommand("check", "run an obstruction battery");
  check->add_option("file", path);
  check->add_option("--mode", mode, "smooth or smooth-proper")
      ->required()
      ->check(CLI::IsMember({"smooth", "smooth-proper"}));
  check->add_option("--all", all_dir, "check every .lie file in a directory");

  auto* bchc = app.add_subcommand("bch", "truncated BCH series of two elements");
  bchc->add_option("--class", klass, "truncation class")->required();
  bchc->add_option("a", expr_a)->required();
  bchc->add_option("b", expr_b)->required();

  auto* coh = app.add_subcommand("cohomology", "Betti numbers of the quotient");
  coh->add_option("file", path)->required();
  coh->add_option("--degree", degree, "single degree (default: all)");

  auto* cupc = app.add_subcommand("cup", "cup product of two generator duals");
  cupc->add_option("file", path)->required();
  cupc->add_option("g1", g1)->required();
  cupc->add_option("g2", g2)->required();

  auto* mas = app.add_subcommand("massey", "Massey triple product of generator duals");
  mas->add_option("file", path)->required();
  mas->add_option("g1", g1)->required();
  mas->add_option("g2", g2)->required();
  mas->add_option("g3", g3)->required();

  auto* build = app.add_subcommand("build-from-cup", "predicted presentation from cup data");
  build->add_option("file", path)->required();
  int build_class = 4;
  build->add_option("--class", build_class, "class cap of the output (default 4)");

  auto* grp = app.add_subcommand("group", "BCH group operations in the quotient");
  grp->add_option("file", path)->required();
  grp->add_option("op", op, "mul or inv")->required();
  grp->add_option("a", expr_a)->required();
  grp->add_option("b", expr_b);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
    if (!mc->empty()) ctx.max_class_set = true;
  } catch (const CLI::ParseError& e) {
    CliResult res;
    res.code = kExitUsage;
    std::ostringstream err;
    err << "error: usage: " << e.what() << "\n";
    res.err = err.str();
    return res;
  }

  int code = kExitOk;
  try {
    if (dims->parsed()) code = cmd_dims(ctx, path);
    else if (check->parsed()) code = cmd_check(ctx, path, mode, all_dir);
    else if (bchc->parsed()) code = cmd_bch(ctx, klass, expr_a, expr_b);
    else if (coh->parsed()) code = cmd_cohomology(ctx, path, degree);
    else if (cupc->parsed()) code = cmd_cup(ctx, path, g1, g2);
    else if (mas->parsed()) code = cmd_massey(ctx, path, g1, g2, g3);
    else if (build->parsed()) code = cmd_build_from_cup(ctx, path, build_class);
    else if (grp->parsed()) code = cmd_group(ctx, path, op, expr_a, expr_b);
  } catch (const ParseError& e) {
    ctx.err << "error: " << e.what() << "\n";
    code = kExitUsage;
  } catch (const CapExceeded& e) {
    ctx.err << "error: cap: " << e.what() << "\n";
    code = kExitCap;
  } catch (const InputError& e) {
    ctx.err << "error: " << e.what() << "\n";
    code = kExitUsage;
  }
  return {code, ctx.out.str(), ctx.err.str()};
}

}  // namespace nilq::cli
