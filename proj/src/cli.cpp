#include "cusp/cli.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cusp/corpus.hpp"
#include "cusp/json_io.hpp"

namespace cusp::cli {

namespace {

using json_io::Json;

Json load_json(const std::string& source) {
  std::string text;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) fail(ErrorCode::InvalidInput, "cannot read '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

std::optional<Int> truncation_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return json_io::parse_int_list(text).at(0);
}

struct Options {
  std::string pair;
  std::string curve;
  std::string form;
  std::string basis;
  std::string truncation;
  std::string a_values;
  std::string batch;
  bool copair = false;
  bool no_delorme = false;
  bool all_semiroots = false;
  std::vector<Int> contains;
  std::vector<Int> represent;
  int i = -1;
  int j = -1;
  int random_count = 10;
  std::uint64_t seed = 20240917;
};

Json semigroup_command(const Options& o) {
  const PuiseuxPair pair = json_io::parse_pair(o.pair);
  const CuspSemigroup g(pair);
  Json out = Json::object();
  if (o.copair) out["copair"] = {copair(pair).b, copair(pair).d};
  if (!o.contains.empty()) {
    Json list = Json::object();
    for (Int p : o.contains) list[std::to_string(p)] = g.contains(p);
    out["contains"] = list;
  }
  if (!o.represent.empty()) {
    Json list = Json::object();
    for (Int p : o.represent) {
      const GammaRepresentation r = g.represent(p);
      list[std::to_string(p)] = {r.a, r.b};
    }
    out["represent"] = list;
  }
  if (out.empty()) out = {{"n", pair.n()}, {"m", pair.m()}, {"conductor", g.conductor()}};
  return out;
}

Json semimodule_command(const Options& o) {
  const PuiseuxPair pair = json_io::parse_pair(o.pair);
  const GammaSemimodule sm(CuspSemigroup(pair), json_io::parse_int_list(o.basis));
  Json out = json_io::semimodule(sm);
  Json tops = Json::array();
  for (int i = 0; i <= sm.s(); ++i) {
    const Tops t = sm.tops(i);
    tops.push_back({t.q1, t.q2, t.main_top});
  }
  out["tops"] = tops;
  return out;
}

PuiseuxCurve curve_option(const Options& o) {
  if (o.curve.empty()) fail(ErrorCode::InvalidInput, "--curve is required");
  return json_io::parse_curve(load_json(o.curve), truncation_option(o.truncation));
}

std::vector<Rational> a_values(const Options& o, const char* fallback) {
  return json_io::parse_rational_list(o.a_values.empty() ? fallback : o.a_values);
}

Json verify_curve(const PuiseuxCurve& c, const Options& o, bool& pass) {
  const ExtendedStandardBasis b = compute_extended_standard_basis(c);
  const GammaSemimodule orc = semimodule_oracle(c);
  Json out{{"lambda", b.lambda()}, {"t", b.critical_orders()}, {"oracle", orc.basis()}, {"curve", json_io::curve(c)}};
  out["oracle_agrees"] = orc == b.semimodule;
  pass = pass && orc == b.semimodule;
  std::vector<int> indices;
  if (o.i >= 0) {
    indices.push_back(o.i);
  } else if (o.all_semiroots) {
    for (int i = 1; i <= b.s() + 1; ++i) indices.push_back(i);
  }
  Json reports = Json::array();
  for (int i : indices) {
    for (const Rational& a : a_values(o, "1,2,-1,1/2")) {
      const SemirootReport r = verify_main_theorem(b, i, a);
      Json jr = json_io::semiroot_report(r);
      if (const Check* f = r.first_failure()) {
        jr["failure"] = f->name + ": " + f->detail;
        pass = false;
      }
      reports.push_back(std::move(jr));
    }
  }
  out["reports"] = reports;
  return out;
}

struct Outcome {
  Json json;
  bool pass = true;
};

Outcome verify_command(const Options& o) {
  std::vector<std::pair<std::string, Json>> inputs;
  if (!o.batch.empty()) {
    Json doc = load_json(o.batch);
    if (doc.is_object() && doc.contains("curves")) doc = doc["curves"];
    if (!doc.is_array()) fail(ErrorCode::InvalidInput, "batch file must be a list of curves or {\"curves\": [...]}");
    for (std::size_t k = 0; k < doc.size(); ++k) {
      const std::string name = doc[k].is_object() && doc[k].contains("name") && doc[k]["name"].is_string()
                                   ? doc[k]["name"].get<std::string>()
                                   : "curve_" + std::to_string(k);
      inputs.emplace_back(name, doc[k]);
    }
  } else {
    if (o.curve.empty()) fail(ErrorCode::InvalidInput, "--curve or --batch is required");
    inputs.emplace_back("curve", load_json(o.curve));
  }
  // Parse everything first so input errors surface before any work starts.
  std::vector<PuiseuxCurve> curves;
  for (const auto& in : inputs) curves.push_back(json_io::parse_curve(in.second, truncation_option(o.truncation)));

  std::vector<Json> results(curves.size());
  std::vector<char> passes(curves.size(), 1);
  std::vector<std::exception_ptr> errors(curves.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k; (k = next++) < curves.size();) {
      try {
        bool p = true;
        results[k] = verify_curve(curves[k], o, p);
        results[k]["name"] = inputs[k].first;
        passes[k] = p;
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(curves.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Outcome out;
  out.json = {{"curves", Json::array()}};
  for (std::size_t k = 0; k < curves.size(); ++k) {
    out.json["curves"].push_back(results[k]);
    out.pass = out.pass && passes[k];
  }
  out.json["pass"] = out.pass;
  return out;
}

Json semiroots_command(const Options& o) {
  Json list = Json::array();
  if (!o.form.empty()) {
    if (o.pair.empty()) fail(ErrorCode::InvalidInput, "--form needs --pair");
    const PuiseuxPair pair = json_io::parse_pair(o.pair);
    require_singular(pair);
    const OneForm w = json_io::parse_form(load_json(o.form));
    const Int T = truncation_option(o.truncation).value_or(default_truncation(pair));
    for (const Rational& a : a_values(o, "1")) {
      const PuiseuxCurve c = solve_invariant_branch(w, a, pair, T);
      Json entry{{"a", to_string(a)}, {"parametrization", json_io::curve(c)}};
      const auto z = zariski_invariant(c);
      entry["zariski_invariant"] = z ? Json(*z) : Json("quasi-homogeneous");
      list.push_back(entry);
    }
    return {{"semiroots", list}};
  }
  const PuiseuxCurve c = curve_option(o);
  const ExtendedStandardBasis b = compute_extended_standard_basis(c);
  std::vector<int> indices;
  if (o.i >= 0) {
    indices.push_back(o.i);
  } else {
    for (int i = 1; i <= b.s() + 1; ++i) indices.push_back(i);
  }
  for (int i : indices) {
    if (i < 1 || i > b.s() + 1) fail(ErrorCode::IndexOutOfRange, "semiroot index must satisfy 1 <= i <= s + 1");
    for (const Rational& a : a_values(o, "1")) {
      const PuiseuxCurve r = solve_invariant_branch(b.form(i), a, c.pair(), semiroot_truncation(c.pair()));
      list.push_back({{"i", i}, {"a", to_string(a)}, {"parametrization", json_io::curve(r)}});
    }
  }
  return {{"lambda", b.lambda()}, {"semiroots", list}};
}

Json corpus_json(const Options& o) {
  Json list = Json::array();
  for (const auto& nc : seed_corpus(o.random_count, o.seed)) {
    Json y = Json::array();
    for (const auto& [k, q] : nc.curve.y_terms()) y.push_back({k, to_string(q)});
    list.push_back({{"name", nc.name}, {"n", nc.curve.pair().n()}, {"y", y}});
  }
  return {{"curves", list}};
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::VerificationFailure:
    case ErrorCode::InternalDisagreement:
    case ErrorCode::TruncationExhausted:
    case ErrorCode::Internal:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analytic invariants of plane cusps"};
  app.name("cusp");
  app.require_subcommand(0, 1);
  Options o;
  bool seed_flag = false;
  std::string output;
  app.add_flag("--seed-corpus", seed_flag, "Print the bundled test corpus and exit");
  app.add_option("-o,--output", output, "Write the JSON report to this file instead of stdout");
  app.fallthrough();

  auto* sg = app.add_subcommand("semigroup", "Semigroup <n,m>: conductor, co-pair, membership");
  sg->add_option("--pair", o.pair, "n,m")->required();
  sg->add_flag("--copair", o.copair, "Print the co-pair (b,d)");
  sg->add_option("--contains", o.contains, "Membership queries");
  sg->add_option("--represent", o.represent, "Unique representations a n + b m");

  auto* sm = app.add_subcommand("semimodule", "Axes, limits, tops and conductor of a semimodule");
  sm->add_option("--pair", o.pair, "n,m")->required();
  sm->add_option("--basis", o.basis, "Minimal basis, comma separated")->required();

  auto add_curve = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--curve", o.curve, "Curve JSON file or inline JSON");
    if (required) opt->required();
    c->add_option("--truncation", o.truncation, "Truncation T (at least the default)");
  };

  auto* sb = app.add_subcommand("standard-basis", "Extended standard basis with Delorme decompositions");
  add_curve(sb, true);
  sb->add_flag("--no-delorme", o.no_delorme, "Skip the Delorme decompositions");

  auto* de = app.add_subcommand("delorme", "Delorme decompositions");
  add_curve(de, true);
  de->add_option("--i", o.i, "Index i (default: all)");
  de->add_option("--j", o.j, "Index j (default: all)");

  auto* dc = app.add_subcommand("dicritical-check", "Total dicriticalness of a form");
  dc->add_option("--form", o.form, "Form JSON file or inline JSON")->required();
  dc->add_option("--pair", o.pair, "n,m")->required();

  auto* sr = app.add_subcommand("semiroots", "Analytic semiroots of a curve, or invariant branches of a form");
  add_curve(sr, false);
  sr->add_option("--form", o.form, "Form JSON (with --pair) instead of a curve");
  sr->add_option("--pair", o.pair, "n,m");
  sr->add_option("--i", o.i, "Basis index (default: all)");
  sr->add_option("--a", o.a_values, "Free-point parameters, comma separated (default 1)");

  auto* ve = app.add_subcommand("verify", "Check the semiroot theorem on a curve or a batch");
  add_curve(ve, false);
  ve->add_option("--batch", o.batch, "JSON list of curves");
  ve->add_flag("--all-semiroots", o.all_semiroots, "Every index 1 <= i <= s + 1");
  ve->add_option("--i", o.i, "Single index");
  ve->add_option("--a", o.a_values, "Parameters (default 1,2,-1,1/2)");

  auto* sc = app.add_subcommand("seed-corpus", "Print the bundled test corpus");
  sc->add_option("--random", o.random_count, "Number of random curves");
  sc->add_option("--seed", o.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Json result;
    int status = 0;
    if (seed_flag || sc->parsed()) {
      result = corpus_json(o);
    } else if (sg->parsed()) {
      result = semigroup_command(o);
    } else if (sm->parsed()) {
      result = semimodule_command(o);
    } else if (sb->parsed()) {
      result = json_io::basis(compute_extended_standard_basis(curve_option(o)), !o.no_delorme);
    } else if (de->parsed()) {
      const ExtendedStandardBasis b = compute_extended_standard_basis(curve_option(o));
      Json list = Json::array();
      for (int i = 0; i <= b.s(); ++i) {
        if (o.i >= 0 && i != o.i) continue;
        for (int j = 0; j <= i; ++j) {
          if (o.j >= 0 && j != o.j) continue;
          list.push_back(json_io::delorme(delorme_decompose(b, i, j)));
        }
      }
      if (list.empty()) fail(ErrorCode::IndexOutOfRange, "no decomposition with 0 <= j <= i <= s matches");
      result = {{"delorme", list}};
    } else if (dc->parsed()) {
      const PuiseuxPair pair = json_io::parse_pair(o.pair);
      const OneForm w = json_io::parse_form(load_json(o.form));
      result = json_io::dicritical(w, pair, is_totally_dicritical(w, pair));
    } else if (sr->parsed()) {
      result = semiroots_command(o);
    } else if (ve->parsed()) {
      Outcome v = verify_command(o);
      result = std::move(v.json);
      status = v.pass ? 0 : 2;
    } else {
      out << app.help();
      return 1;
    }
    if (output.empty()) {
      out << json_io::dump(result);
    } else {
      std::ofstream file(output);
      if (!file) fail(ErrorCode::InvalidInput, "cannot write '" + output + "'");
      file << json_io::dump(result);
    }
    return status;
  } catch (const Error& e) {
    err << json_io::dump({{"error", error_name(e.code())}, {"message", e.what()}});
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << json_io::dump({{"error", "Internal"}, {"message", e.what()}});
    return 2;
  }
}

}  // namespace cusp::cli
