// germkit: exact local-algebra jobs over Q and simple extensions.
// One job per invocation; canonical JSON in, canonical JSON out.
// Exit codes: 0 success, 1 input error, 2 mathematical failure (with a
// structured {"error": {...}} object on the output stream).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "germkit/descent.hpp"
#include "germkit/eisenstein.hpp"
#include "germkit/expr.hpp"
#include "germkit/json_io.hpp"
#include "germkit/tower.hpp"

using json = nlohmann::json;
using namespace germkit;

namespace {

struct Job {
  std::string command;
  std::string input_path;
  std::string output_path;
  int trunc = 12;
  bool trunc_set = false;
  int shear_bound = 16;
  bool shear_set = false;
  int out_degree = -1;
  int check_degree = -1;
  std::string field_spec;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Job& job, const std::string& text) {
  if (job.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(job.output_path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot open output file '" + job.output_path + "'");
  out << text;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

NumberField field_of(const Job& job, const json& input) {
  std::string spec;
  if (!job.field_spec.empty()) {
    spec = job.field_spec;
    if (!spec.empty() && spec.front() != '{') spec = read_file(spec);
  } else if (input.contains("field")) {
    spec = input.at("field").dump();
  } else {
    return NumberField();
  }
  return field_from_json(spec);
}

std::vector<std::string> names_of(const json& arr) {
  std::vector<std::string> names;
  for (const auto& v : arr) names.push_back(v.get<std::string>());
  return names;
}

Series series_or_expr(const json& j, const Ring& ring) {
  if (j.is_string()) return parse_expr(j.get<std::string>(), ring);
  return series_from_json(j.dump(), ring);
}

int effective_trunc(const Job& job, const json& input) {
  if (job.trunc_set) return job.trunc;
  if (input.contains("trunc")) return input.at("trunc").get<int>();
  return job.trunc;
}

int effective_shear(const Job& job, const json& input) {
  if (job.shear_set) return job.shear_bound;
  if (input.contains("shear_bound")) return input.at("shear_bound").get<int>();
  return job.shear_bound;
}

int var_index_of(const Ring& ring, const std::string& name) {
  auto idx = ring.var_index(name);
  if (!idx) fail(Errc::ParseError, "unknown variable '" + name + "'");
  return *idx;
}

// ---- command handlers ------------------------------------------------

std::string run_prepare(const Job& job, const json& input) {
  Ring ring(names_of(input.at("vars")), field_of(job, input));
  Series F = series_or_expr(input.at("F"), ring);
  int var = var_index_of(ring, input.at("dist_var").get<std::string>());
  PreparationResult res = prepare(F, var, effective_trunc(job, input));
  return preparation_to_json(res);
}

WeierstrassPoly monic_of(const json& input, const Ring& ring) {
  int var = var_index_of(ring, input.at("dist_var").get<std::string>());
  int p = input.at("degree").get<int>();
  WeierstrassPoly W{ring, var, p, {}};
  for (const auto& c : input.at("coeffs")) W.coeffs.push_back(series_or_expr(c, ring));
  if (static_cast<int>(W.coeffs.size()) != p)
    fail(Errc::ParseError, "expected one coefficient per degree step");
  for (const auto& c : W.coeffs)
    if (c.occurs(var))
      fail(Errc::ParseError, "coefficients must not involve the distinguished variable");
  return W;
}

std::string run_disc(const Job& job, const json& input) {
  Ring ring(names_of(input.at("vars")), field_of(job, input));
  WeierstrassPoly W = monic_of(input, ring);
  DiscriminantRecord rec = first_nonvanishing(W);
  json out;
  out["record"] = parse_json(disc_record_to_json(rec));
  json deltas = json::array();
  for (int j = 1; j <= rec.j; ++j)
    deltas.push_back(parse_json(series_to_json(gen_disc(W, j))));
  out["deltas"] = std::move(deltas);
  return canonical_json_text(out.dump());
}

InputGerm germ_of(const Job& job, const json& input, GermKind kind) {
  InputGerm germ;
  germ.kind = kind;
  germ.ring = Ring(names_of(input.at("vars")), field_of(job, input));
  germ.truncation = effective_trunc(job, input);
  germ.shear_bound = effective_shear(job, input);
  if (kind == GermKind::Set) {
    for (const auto& g : input.at("defining"))
      germ.defining.push_back(series_or_expr(g, germ.ring));
  } else {
    germ.defining.push_back(series_or_expr(input.at("g"), germ.ring));
    if (input.contains("constraints"))
      for (const auto& g : input.at("constraints"))
        germ.defining.push_back(series_or_expr(g, germ.ring));
  }
  return germ;
}

std::string run_tower(const Job& job, const json& input, GermKind kind) {
  InputGerm germ = germ_of(job, input, kind);
  Tower t = kind == GermKind::Set ? build_set_tower(germ) : build_function_tower(germ);
  return tower_to_json(t);
}

BranchSeed branch_seed_of(const Job& job, const json& input) {
  const json& vars = input.at("vars");
  std::vector<std::string> tvars = names_of(vars.at("t"));
  std::vector<std::string> xvars = names_of(vars.at("x"));
  std::string yvar = vars.at("y").get<std::string>();
  auto [work, tring] = make_eisenstein_rings(tvars, xvars, yvar, field_of(job, input));
  Series P = parse_expr(input.at("P").get<std::string>(), work);
  std::map<ExpVec, RationalFunction, GradedLexLess> seed;
  int seed_degree = 0;
  for (const auto& entry : input.at("seed")) {
    ExpVec alpha = entry.at("alpha").get<ExpVec>();
    Series num = parse_expr(entry.at("num").get<std::string>(), tring);
    Series den = entry.contains("den")
                     ? parse_expr(entry.at("den").get<std::string>(), tring)
                     : Series::constant(tring, tring.field().one());
    seed_degree = std::max(seed_degree, total_degree(alpha));
    seed.emplace(alpha, RationalFunction(num, den));
  }
  if (input.contains("seed_degree")) seed_degree = input.at("seed_degree").get<int>();
  return make_branch_seed(work, tring, static_cast<int>(tvars.size()),
                          static_cast<int>(xvars.size()), std::move(P),
                          std::move(seed), seed_degree);
}

std::string run_eisenstein(const Job& job, const json& input) {
  BranchSeed bs = branch_seed_of(job, input);
  int out_degree = job.out_degree >= 0 ? job.out_degree
                                       : input.at("out_degree").get<int>();
  EisensteinResult res = eisenstein_extract(bs, out_degree);
  return eisenstein_to_json(res);
}

std::string run_descent(const Job& job, const json& input) {
  Ring ring(names_of(input.at("vars")), field_of(job, input));
  Series f = series_or_expr(input.at("series"), ring);
  DescentResult res = basis_decompose(f);
  json out;
  json comps = json::array();
  for (const auto& c : res.components)
    comps.push_back(parse_json(series_to_json(c)));
  out["components"] = std::move(comps);
  auto ok = vandermonde_verify(res, f);
  out["vandermonde"] = ok.has_value() ? json(*ok) : json("unsupported");
  out["reassembles"] = (descent_reassemble(res, ring) == f);
  return canonical_json_text(out.dump());
}

std::string run_branch(const Job& job, const json& input) {
  std::vector<std::string> tvars = names_of(input.at("tvars"));
  std::string vvar = input.contains("vvar") ? input.at("vvar").get<std::string>() : "v";
  std::vector<std::string> names = tvars;
  names.push_back(vvar);
  Ring ring(names, NumberField());
  NumberField K = field_of(job, input);
  BranchPoint bp;
  bp.ring = ring;
  bp.num_t = static_cast<int>(tvars.size());
  bp.P = parse_expr(input.at("P").get<std::string>(), ring);
  for (const auto& q : input.at("q")) bp.q.push_back(rat_parse(q.get<std::string>()));
  bp.K = K;
  {
    // v0 in the same encoding as series coefficients
    json v0 = input.at("v0");
    std::string wrapped = json{{"trunc", "exact"},
                               {"terms", json::array({json{{"e", json::array()},
                                                           {"c", v0}}})}}
                              .dump();
    Ring scalar({}, K);
    Series s = series_from_json(wrapped, scalar);
    bp.v0 = s.constant_term();
  }
  bp.N = input.at("N").get<int>();
  Series w = branch_taylor(bp);
  json out;
  out["field"] = parse_json(field_to_json(K));
  out["vars"] = tvars;
  out["series"] = parse_json(series_to_json(w));
  return canonical_json_text(out.dump());
}

std::string run_verify(const Job& job, const json& input) {
  std::string kind = input.at("kind").get<std::string>();
  const json& original = input.at("input");
  const json& result = input.at("result");
  if (kind == "tower-set" || kind == "tower-fn") {
    GermKind gk = kind == "tower-set" ? GermKind::Set : GermKind::Function;
    InputGerm germ = germ_of(job, original, gk);
    Tower t = tower_from_json(result.dump(), germ.ring);
    TowerReport rep = verify_tower(t, germ);
    return tower_report_to_json(rep);
  }
  if (kind == "eisenstein") {
    Job j2 = job;
    BranchSeed bs = branch_seed_of(j2, original);
    std::vector<std::string> txnames;
    for (int i = 0; i < bs.num_t; ++i) txnames.push_back(bs.work.var_name(i));
    for (int i = 0; i < bs.num_x; ++i) txnames.push_back(bs.work.var_name(bs.x_var(i)));
    Ring txring(txnames, bs.tring.field());
    EisensteinResult res = eisenstein_from_json(result.dump(), bs.tring, txring);
    int check = job.check_degree >= 0 ? job.check_degree : res.out_degree;
    EisensteinReport rep = verify_eisenstein(res, bs, check);
    return eisenstein_report_to_json(rep);
  }
  fail(Errc::ParseError, "verify kind must be tower-set, tower-fn or eisenstein");
}

std::string run_roundtrip(const Job& job, bool& matched) {
  std::string original = read_file(job.input_path);
  std::string normalized = canonical_json_text(original);
  matched = (normalized == original);
  json out;
  out["roundtrip"] = matched;
  if (!job.output_path.empty()) {
    std::ofstream norm(job.output_path, std::ios::binary);
    norm << normalized;
  }
  return out.dump(2) + "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Weierstrass / discriminant-tower / denominator-extraction jobs"};
  app.require_subcommand(1);

  Job job;
  std::vector<std::string> commands = {"prepare", "disc",   "tower-set",
                                       "tower-fn", "eisenstein", "descent",
                                       "branch",  "verify", "roundtrip"};
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", job.input_path)->required();
    sub->add_option("--output", job.output_path);
    sub->add_option("--trunc", job.trunc)->check(CLI::PositiveNumber);
    sub->add_option("--shear-bound", job.shear_bound)->check(CLI::PositiveNumber);
    sub->add_option("--out-degree", job.out_degree);
    sub->add_option("--check-degree", job.check_degree);
    sub->add_option("--field", job.field_spec);
    sub->callback([&job, name] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  for (const auto& name : commands) {
    CLI::App* sub = app.get_subcommand(name);
    if (sub->parsed()) {
      job.trunc_set = sub->count("--trunc") > 0;
      job.shear_set = sub->count("--shear-bound") > 0;
    }
  }

  try {
    std::string out;
    if (job.command == "roundtrip") {
      bool matched = false;
      std::string text = run_roundtrip(job, matched);
      std::cout << text;
      return 0;
    }
    json input = parse_json(read_file(job.input_path));
    if (job.command == "prepare") out = run_prepare(job, input);
    else if (job.command == "disc") out = run_disc(job, input);
    else if (job.command == "tower-set") out = run_tower(job, input, GermKind::Set);
    else if (job.command == "tower-fn") out = run_tower(job, input, GermKind::Function);
    else if (job.command == "eisenstein") out = run_eisenstein(job, input);
    else if (job.command == "descent") out = run_descent(job, input);
    else if (job.command == "branch") out = run_branch(job, input);
    else if (job.command == "verify") out = run_verify(job, input);
    else fail(Errc::ParseError, "unknown command");
    write_output(job, out);
    return 0;
  } catch (const Error& e) {
    json err;
    err["error"] = {{"kind", errc_name(e.kind())}, {"detail", e.detail()}};
    std::string text = err.dump(2) + "\n";
    if (e.kind() == Errc::ParseError) {
      std::cerr << text;
      return 1;
    }
    try {
      write_output(job, text);
    } catch (...) {
      std::cerr << text;
    }
    return 2;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", {{"kind", "ParseError"}, {"detail", e.what()}}}}.dump(2)
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "Internal"}, {"detail", e.what()}}}}.dump(2)
              << "\n";
    return 2;
  }
}
