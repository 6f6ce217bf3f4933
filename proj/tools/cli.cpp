#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "refchoice/axioms.hpp"
#include "refchoice/errors.hpp"
#include "refchoice/extensions.hpp"
#include "refchoice/fixtures.hpp"
#include "refchoice/json_io.hpp"
#include "refchoice/recovery.hpp"

namespace refchoice::cli {

namespace {

/// Raised for bad invocations that CLI11 cannot catch itself.
struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

struct Input {
  ChoiceDataset data;
  std::string source;  // "dataset" or the model kind
};

/// Datasets are read directly; model files are simulated first.
Input load_dataset(const std::string& path, bool allow_partial) {
  const Json j = parse_json(read_file(path));
  if (j.is_object() && j.contains("kind")) {
    const AttentionModel model = model_from_json(j);
    return {simulate_dataset(model), kind_name(model)};
  }
  ChoiceDataset data = make_dataset(raw_dataset_from_json(j));
  if (!allow_partial && !data.is_complete()) {
    throw UsageError("dataset is partial (" + std::to_string(data.problem_count()) + " of " +
                     std::to_string(data.expected_count()) + " problems); pass --allow-partial to check it anyway");
  }
  return {std::move(data), "dataset"};
}

CheckOptions options_for(const std::string& mode, bool strict, bool values) {
  CheckOptions o;
  o.mode = mode == "full" ? CheckMode::Full : CheckMode::Reduced;
  o.strict = strict;
  o.record_values = values;
  if (const char* cap = std::getenv("REFCHOICE_MAX_X")) {
    try {
      o.full_mode_cap = std::stoi(cap);
    } catch (const std::exception&) {
      throw UsageError(std::string("REFCHOICE_MAX_X must be an integer, got '") + cap + "'");
    }
  }
  return o;
}

std::string problem_list(const std::vector<ChoiceProblem>& problems, const Universe& u) {
  std::string out;
  for (const auto& p : problems) {
    if (!out.empty()) out += " ";
    out += "(" + u.describe(p.menu) + ", " + u.label(p.reference) + ")";
  }
  return out;
}

void verdict_text(std::ostream& os, const Verdict& v, const Universe& u) {
  std::string name = v.axiom;
  name.resize(std::max<std::size_t>(name.size(), 17), ' ');
  os << "  " << name << to_string(v.status) << "\n";
  if (v.witness) {
    os << "      " << v.witness->message << "\n";
    if (!v.witness->problems.empty()) os << "      problems: " << problem_list(v.witness->problems, u) << "\n";
    if (!v.witness->collection.empty()) {
      os << "      collection:";
      for (Menu m : v.witness->collection) os << " " << u.describe(m);
      os << "\n";
    }
  }
  if (v.status == Status::Undetermined) os << "      missing: " << problem_list(v.missing, u) << "\n";
  for (const auto& nv : v.values) os << "      " << nv.name << " = " << format_rational(nv.value) << "\n";
}

void header_text(std::ostream& os, const Input& in, const CheckOptions& o) {
  os << "refchoice " << kVersion << "\n";
  os << "input    " << in.source << ", " << in.data.n() << " alternatives, " << in.data.problem_count() << " problems"
     << (in.data.is_complete() ? ", complete" : ", partial") << "\n";
  os << "digest   " << dataset_digest(in.data) << "\n";
  os << "mode     " << (o.mode == CheckMode::Full ? "full" : "reduced") << "\n";
}

Json header_json(const Input& in, const CheckOptions& o) {
  return {{"tool", "refchoice"},
          {"version", kVersion},
          {"input", in.source},
          {"digest", dataset_digest(in.data)},
          {"alternatives", in.data.universe().labels()},
          {"complete", in.data.is_complete()},
          {"mode", o.mode == CheckMode::Full ? "full" : "reduced"}};
}

struct CheckArgs {
  std::string path, axiom = "all", mode = "reduced", out;
  bool strict = false, partial = false, json = false, values = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const Input in = load_dataset(a.path, a.partial);
  const CheckOptions o = options_for(a.mode, a.strict, a.values);
  std::vector<std::string_view> names;
  if (a.axiom == "all") {
    names = characterization_axioms();
  } else {
    names.push_back(a.axiom);
  }
  std::vector<Verdict> verdicts;
  for (auto name : names) verdicts.push_back(check_axiom(in.data, name, o));
  const bool ok = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed(); });
  std::ostringstream os;
  if (a.json) {
    Json report = header_json(in, o);
    report["strict"] = a.strict;
    Json list = Json::array();
    for (const auto& v : verdicts) list.push_back(verdict_to_json(v, in.data.universe()));
    report["verdicts"] = std::move(list);
    report["passed"] = ok;
    os << dump_json(report);
  } else {
    header_text(os, in, o);
    os << "verdicts\n";
    for (const auto& v : verdicts) verdict_text(os, v, in.data.universe());
    os << "result   " << (ok ? "pass" : "fail") << "\n";
  }
  emit(os.str(), a.out, out);
  return ok ? 0 : 1;
}

struct ClassifyArgs {
  std::string path, mode = "reduced", out;
  bool partial = false, json = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const Input in = load_dataset(a.path, a.partial);
  const CheckOptions o = options_for(a.mode, false, false);
  const Classification c = classify(in.data, o);
  std::ostringstream os;
  const std::pair<const char*, bool> flags[] = {{"RD-RAM", c.rdram}, {"IRA", c.ira}, {"LRA", c.lra}, {"CRA", c.cra}};
  if (a.json) {
    Json report = header_json(in, o);
    Json verdicts = Json::array();
    for (const Verdict* v : c.verdicts()) verdicts.push_back(verdict_to_json(*v, in.data.universe()));
    report["verdicts"] = std::move(verdicts);
    Json membership = Json::object();
    for (const auto& [name, flag] : flags) membership[name] = flag;
    report["membership"] = std::move(membership);
    report["consistent"] = c.consistent();
    os << dump_json(report);
  } else {
    header_text(os, in, o);
    os << "verdicts\n";
    for (const Verdict* v : c.verdicts()) verdict_text(os, *v, in.data.universe());
    os << "membership\n";
    for (const auto& [name, flag] : flags) os << "  " << name << std::string(8 - std::string(name).size(), ' ') << (flag ? "yes" : "no") << "\n";
    os << "consistent " << (c.consistent() ? "yes" : "no (IRA must equal LRA and CRA)") << "\n";
  }
  emit(os.str(), a.out, out);
  return c.consistent() ? 0 : 1;
}

struct RecoverArgs {
  std::string path, model_class, out, audit;
  bool partial = false;
};

int cmd_recover(const RecoverArgs& a, std::ostream& out, std::ostream& err) {
  const Input in = load_dataset(a.path, a.partial);
  const Universe& u = in.data.universe();
  Json model;
  std::optional<Json> audit;
  try {
    if (a.model_class == "rdram") {
      model = model_to_json(build_rdram(in.data));
    } else if (a.model_class == "ira") {
      auto r = build_ira(in.data);
      model = model_to_json(r.model);
      audit = mobius_table_to_json(r.table, u);
    } else if (a.model_class == "lra") {
      auto r = build_lra(in.data);
      model = model_to_json(r.model);
      audit = mobius_table_to_json(r.table, u);
    } else {
      auto r = build_cra(in.data);
      model = model_to_json(r.model);
      audit = mobius_table_to_json(r.table, u);
    }
  } catch (const AxiomViolation& e) {
    err << "recovery failed: " << e.what() << "\n";
    if (e.verdict().witness) err << dump_json(verdict_to_json(e.verdict(), u));
    return 1;
  } catch (const RecoveryError& e) {
    err << "recovery failed: " << e.what() << "\n";
    return 1;
  }
  if (!a.audit.empty()) emit(dump_json(audit ? *audit : Json{{"references", Json::object()}}), a.audit, out);
  emit(dump_json(model), a.out, out);
  err << "round trip verified: the recovered " << a.model_class << " model reproduces all "
      << in.data.problem_count() << " problems\n";
  return 0;
}

struct SimulateArgs {
  std::string path, out;
  bool exact = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const AttentionModel model = model_from_json(parse_json(read_file(a.path)));
  const ChoiceDataset data = simulate_dataset(model);
  if (a.exact || !a.samples) {
    if (!a.exact && !a.samples) throw UsageError("simulate needs --exact or --samples (with --seed)");
    emit(dump_json(dataset_to_json(data)), a.out, out);
    return 0;
  }
  if (!a.seed) throw UsageError("sampling needs an explicit --seed");
  const Universe& u = data.universe();
  Json problems = Json::array();
  std::uint64_t stream = *a.seed;
  for (const auto& problem : data.problems()) {
    // Each problem draws from its own stream: seed, seed+1, ...
    const auto counts = sample_counts(model, problem, stream++, *a.samples);
    Json c = Json::object(), f = Json::object(), e = Json::object();
    for (Alt x : problem.menu) {
      const auto i = static_cast<std::size_t>(x);
      c[u.label(x)] = counts[i];
      Rational freq(mpz_class(std::to_string(counts[i])), mpz_class(std::to_string(*a.samples)));
      freq.canonicalize();
      f[u.label(x)] = format_rational(freq);
      e[u.label(x)] = format_rational(data.p(problem.reference, x, problem.menu));
    }
    problems.push_back({{"menu", Json::array()}, {"reference", u.label(problem.reference)}});
    for (Alt x : problem.menu) problems.back()["menu"].push_back(u.label(x));
    problems.back()["counts"] = std::move(c);
    problems.back()["frequency"] = std::move(f);
    problems.back()["exact"] = std::move(e);
  }
  Json report{{"alternatives", u.labels()},
              {"seed", *a.seed},
              {"samples", *a.samples},
              {"generator", "mt19937_64, one stream per problem seeded seed + problem index"},
              {"problems", std::move(problems)}};
  emit(dump_json(report), a.out, out);
  return 0;
}

int cmd_fixtures(const std::string& name, bool list, const std::string& path, std::ostream& out, std::ostream& err) {
  auto catalog_text = [] {
    std::string text;
    for (const auto& info : fixture_catalog()) text += "  " + info.name + "  " + info.summary + "\n";
    return text;
  };
  if (list || name.empty()) {
    out << catalog_text();
    return 0;
  }
  Fixture f;
  try {
    f = make_fixture(name);
  } catch (const std::out_of_range&) {
    err << "unknown fixture '" << name << "'; available:\n" << catalog_text();
    return 2;
  }
  const Json j = std::holds_alternative<AttentionModel>(f) ? model_to_json(std::get<AttentionModel>(f))
                                                           : dataset_to_json(std::get<ChoiceDataset>(f));
  emit(dump_json(j), path, out);
  return 0;
}

int cmd_rdrum(const std::string& path, const std::string& out_path, std::ostream& out) {
  const AttentionModel model = model_from_json(parse_json(read_file(path)));
  const auto* cra = std::get_if<CraModel>(&model);
  if (cra == nullptr) throw UsageError("rdrum needs a constant-attention (cra) model");
  emit(dump_json(rdrum_to_json(cra_to_rdrum(*cra))), out_path, out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reference-dependent random attention: axiom checks, model recovery, simulation", "refchoice"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "test behavioral axioms on a dataset or model file");
  c->add_option("path", check.path, "dataset or model JSON")->required();
  std::vector<std::string> axiom_choices{"all"};
  for (auto n : all_axiom_names()) axiom_choices.emplace_back(n);
  c->add_option("--axiom", check.axiom, "axiom name, or 'all' for the seven characterization axioms")
      ->check(CLI::IsMember(axiom_choices));
  c->add_option("--mode", check.mode, "full or reduced difference checks")->check(CLI::IsMember({"full", "reduced"}));
  c->add_flag("--strict", check.strict, "strict status quo monotonicity");
  c->add_flag("--allow-partial", check.partial, "accept datasets that omit problems");
  c->add_flag("--json", check.json, "machine-readable report");
  c->add_flag("--values", check.values, "include every intermediate value in the report");
  c->add_option("--out", check.out, "write the report here instead of stdout");

  ClassifyArgs cls;
  auto* k = app.add_subcommand("classify", "place a dataset in the RD-RAM / IRA / LRA / CRA lattice");
  k->add_option("path", cls.path, "dataset or model JSON")->required();
  k->add_option("--mode", cls.mode, "full or reduced difference checks")->check(CLI::IsMember({"full", "reduced"}));
  k->add_flag("--allow-partial", cls.partial, "accept datasets that omit problems");
  k->add_flag("--json", cls.json, "machine-readable report");
  k->add_option("--out", cls.out, "write the report here instead of stdout");

  RecoverArgs rec;
  auto* r = app.add_subcommand("recover", "reconstruct a representation and verify it reproduces the data");
  r->add_option("path", rec.path, "dataset or model JSON")->required();
  r->add_option("--class", rec.model_class, "rdram, ira, lra or cra")
      ->required()
      ->check(CLI::IsMember({"rdram", "ira", "lra", "cra"}));
  r->add_option("--out", rec.out, "write the model here instead of stdout");
  r->add_option("--audit", rec.audit, "also write the intermediate Mobius table here");
  r->add_flag("--allow-partial", rec.partial, "accept datasets that omit problems");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "evaluate a model exactly or by seeded sampling");
  s->add_option("path", sim.path, "model JSON")->required();
  s->add_flag("--exact", sim.exact, "write the exact dataset");
  s->add_option("--seed", sim.seed, "generator seed for sampling");
  s->add_option("--samples", sim.samples, "draws per choice problem")->excludes(s->get_option("--exact"));
  s->add_option("--out", sim.out, "write the output here instead of stdout");

  std::string fixture_name, fixture_out;
  bool fixture_list = false;
  auto* f = app.add_subcommand("fixtures", "print a bundled example model or dataset");
  f->add_option("name", fixture_name, "fixture name");
  f->add_flag("--list", fixture_list, "list the bundled fixtures");
  f->add_option("--out", fixture_out, "write the fixture here instead of stdout");

  std::string rdrum_path, rdrum_out;
  auto* u = app.add_subcommand("rdrum", "convert a constant-attention model into a random utility model");
  u->add_option("path", rdrum_path, "cra model JSON")->required();
  u->add_option("--out", rdrum_out, "write the model here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run 'refchoice --help' for usage\n";
    return 2;
  }

  try {
    if (c->parsed()) return cmd_check(check, out);
    if (k->parsed()) return cmd_classify(cls, out);
    if (r->parsed()) return cmd_recover(rec, out, err);
    if (s->parsed()) return cmd_simulate(sim, out);
    if (f->parsed()) return cmd_fixtures(fixture_name, fixture_list, fixture_out, out, err);
    if (u->parsed()) return cmd_rdrum(rdrum_path, rdrum_out, out);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"refchoice"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace refchoice::cli
