#include "refchoice/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <type_traits>

#include "refchoice/errors.hpp"

namespace refchoice {

namespace {

std::size_t idx(Alt a) { return static_cast<std::size_t>(a); }
std::size_t idx(Menu m) { return static_cast<std::size_t>(m.bits()); }

// Equality used for duplicate keys: strings that both read as rationals are
// compared by value, everything else structurally.
bool same_value(const Json& a, const Json& b) {
  if (a.is_string() && b.is_string()) {
    const auto& sa = a.get_ref<const std::string&>();
    const auto& sb = b.get_ref<const std::string&>();
    if (sa == sb) return true;
    try {
      return parse_rational(sa) == parse_rational(sb);
    } catch (const ParseError&) {
      return false;
    }
  }
  if (a.is_object() && b.is_object()) {
    if (a.size() != b.size()) return false;
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key()) || !same_value(it.value(), b.at(it.key()))) return false;
    }
    return true;
  }
  if (a.is_array() && b.is_array()) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!same_value(a[i], b[i])) return false;
    }
    return true;
  }
  return a == b;
}

class DuplicateAwareBuilder {
 public:
  using number_integer_t = Json::number_integer_t;
  using number_unsigned_t = Json::number_unsigned_t;
  using number_float_t = Json::number_float_t;
  using string_t = Json::string_t;
  using binary_t = Json::binary_t;

  Json result;

  bool null() { return scalar(Json(nullptr)); }
  bool boolean(bool v) { return scalar(Json(v)); }
  bool number_integer(number_integer_t v) { return scalar(Json(v)); }
  bool number_unsigned(number_unsigned_t v) { return scalar(Json(v)); }
  bool number_float(number_float_t v, const string_t&) { return scalar(Json(v)); }
  bool string(string_t& v) { return scalar(Json(v)); }
  bool binary(binary_t&) { throw ParseError("binary JSON values are not supported"); }

  bool start_object(std::size_t) { return open(Json::object()); }
  bool start_array(std::size_t) { return open(Json::array()); }
  bool end_object() { return close(); }
  bool end_array() { return close(); }

  bool key(string_t& k) {
    Frame& f = *frames_.back();
    f.key = k;
    f.duplicate = f.node->contains(k);
    return true;
  }

  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& e) {
    throw ParseError("invalid JSON at byte " + std::to_string(position) + ": " + e.what());
  }

 private:
  struct Frame {
    Json* node;
    std::string key;
    bool duplicate = false;
    std::unique_ptr<Json> scratch;
  };

  Json* place(Json value) {
    if (frames_.empty()) {
      result = std::move(value);
      return &result;
    }
    Frame& f = *frames_.back();
    if (f.node->is_array()) {
      f.node->push_back(std::move(value));
      return &f.node->back();
    }
    if (f.duplicate) {
      f.scratch = std::make_unique<Json>(std::move(value));
      return f.scratch.get();
    }
    Json& slot = (*f.node)[f.key];
    slot = std::move(value);
    return &slot;
  }

  void settle() {
    if (frames_.empty()) return;
    Frame& f = *frames_.back();
    if (!f.duplicate || !f.scratch) return;
    if (!same_value(f.node->at(f.key), *f.scratch)) {
      throw ParseError("duplicate key \"" + f.key + "\" with conflicting values");
    }
    f.scratch.reset();
    f.duplicate = false;
  }

  bool scalar(Json value) {
    place(std::move(value));
    settle();
    return true;
  }

  bool open(Json container) {
    Json* node = place(std::move(container));
    frames_.push_back(std::make_unique<Frame>(Frame{node, {}, false, nullptr}));
    return true;
  }

  bool close() {
    frames_.pop_back();
    settle();
    return true;
  }

  std::vector<std::unique_ptr<Frame>> frames_;
};

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::string text_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational rational_of(const Json& j) {
  if (j.is_string()) return parse_rational(j.get_ref<const std::string&>());
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
  throw ParseError("probabilities must be \"p/q\" strings or integers, got " + j.dump());
}

Json rational_json(const Rational& q) { return format_rational(q); }

Universe universe_of_json(const Json& labels) {
  if (!labels.is_array()) throw ParseError("\"alternatives\" must be an array of labels");
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(text_of(l, "alternative label"));
  return Universe(std::move(out));
}

Menu menu_of(const Json& j, const Universe& u) {
  if (!j.is_array()) throw ParseError("menus must be arrays of labels");
  Menu m;
  for (const auto& l : j) {
    const Alt a = u.index_of(text_of(l, "menu member"));
    if (m.contains(a)) throw ParseError("label \"" + u.label(a) + "\" repeated in a menu");
    m = m.with(a);
  }
  return m;
}

Json menu_json(Menu m, const Universe& u) {
  Json out = Json::array();
  for (Alt a : m) out.push_back(u.label(a));
  return out;
}

LinearOrder order_of(const Json& j, const Universe& u) {
  if (!j.is_array()) throw ParseError("\"preference\" must be an array of labels, best first");
  std::vector<Alt> ranking;
  for (const auto& l : j) ranking.push_back(u.index_of(text_of(l, "preference entry")));
  if (ranking.size() != static_cast<std::size_t>(u.size())) throw ValidationError("preference must rank every alternative");
  return LinearOrder(std::move(ranking));
}

Json order_json(const LinearOrder& order, const Universe& u) {
  Json out = Json::array();
  for (Alt a : order.ranking()) out.push_back(u.label(a));
  return out;
}

// Universe from "alternatives", or from "preference" when absent.
Universe model_universe(const Json& j) {
  if (j.contains("alternatives")) return universe_of_json(j.at("alternatives"));
  return universe_of_json(field(j, "preference"));
}

std::vector<Rational> weight_table(const Json& list, const Universe& u, const char* what) {
  if (!list.is_array()) throw ParseError(std::string(what) + " must be an array of {\"set\", \"weight\"} entries");
  std::vector<Rational> out(std::size_t{1} << u.size());
  std::vector<bool> seen(out.size(), false);
  for (const auto& entry : list) {
    const Menu d = menu_of(field(entry, "set"), u);
    const Rational w = rational_of(field(entry, "weight"));
    if (seen[idx(d)]) throw ParseError(std::string("set ") + u.describe(d) + " listed twice in " + what);
    seen[idx(d)] = true;
    out[idx(d)] = w;
  }
  return out;
}

Json weight_table_json(const std::vector<Rational>& w, const Universe& u) {
  Json out = Json::array();
  for (std::size_t bits = 1; bits < w.size(); ++bits) {
    if (sgn(w[bits]) == 0) continue;
    out.push_back({{"set", menu_json(Menu(static_cast<Menu::Bits>(bits)), u)}, {"weight", rational_json(w[bits])}});
  }
  return out;
}

Json problem_json(const ChoiceProblem& p, const Universe& u) {
  return {{"menu", menu_json(p.menu, u)}, {"reference", u.label(p.reference)}};
}

}  // namespace

Json parse_json(std::string_view text) {
  DuplicateAwareBuilder builder;
  Json::sax_parse(text.begin(), text.end(), &builder);
  return std::move(builder.result);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

RawDataset raw_dataset_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("dataset must be a JSON object");
  RawDataset raw;
  raw.universe = universe_of_json(field(j, "alternatives"));
  if (j.contains("complete")) {
    if (!j.at("complete").is_boolean()) throw ParseError("\"complete\" must be a boolean");
    raw.complete = j.at("complete").get<bool>();
  }
  const Json& problems = field(j, "problems");
  if (!problems.is_array()) throw ParseError("\"problems\" must be an array");
  for (const auto& p : problems) {
    RawEntry entry;
    entry.menu = menu_of(field(p, "menu"), raw.universe);
    entry.reference = raw.universe.index_of(text_of(field(p, "reference"), "reference"));
    const Json& choice = field(p, "choice");
    if (!choice.is_object()) throw ParseError("\"choice\" must map labels to probabilities");
    for (auto it = choice.begin(); it != choice.end(); ++it) {
      entry.choice.emplace_back(raw.universe.index_of(it.key()), rational_of(it.value()));
    }
    raw.entries.push_back(std::move(entry));
  }
  return raw;
}

Json dataset_to_json(const ChoiceDataset& data) {
  const Universe& u = data.universe();
  Json problems = Json::array();
  for (const auto& problem : data.problems()) {
    Json choice = Json::object();
    const auto& row = *data.row(problem.menu, problem.reference);
    for (Alt x : problem.menu) choice[u.label(x)] = rational_json(row[idx(x)]);
    Json entry = problem_json(problem, u);
    entry["choice"] = std::move(choice);
    problems.push_back(std::move(entry));
  }
  return {{"alternatives", u.labels()}, {"complete", data.is_complete()}, {"problems", std::move(problems)}};
}

AttentionModel model_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("model must be a JSON object");
  const std::string kind = text_of(field(j, "kind"), "\"kind\"");
  const Universe u = model_universe(j);
  const LinearOrder pref = order_of(field(j, "preference"), u);
  const auto n = static_cast<std::size_t>(u.size());
  AttentionModel model;
  if (kind == "ira") {
    std::vector<std::vector<Rational>> gamma(n, std::vector<Rational>(n));
    for (Alt r = 0; r < u.size(); ++r) gamma[idx(r)][idx(r)] = 1;
    const Json& g = field(j, "gamma");
    if (!g.is_object()) throw ParseError("\"gamma\" must map references to attention maps");
    for (auto it = g.begin(); it != g.end(); ++it) {
      const Alt r = u.index_of(it.key());
      if (!it.value().is_object()) throw ParseError("gamma entries must be objects");
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
        gamma[idx(r)][idx(u.index_of(jt.key()))] = rational_of(jt.value());
      }
    }
    model = IraModel{u, pref, std::move(gamma)};
  } else if (kind == "lra" || kind == "cra") {
    const char* key = kind == "lra" ? "pi" : "pi_prime";
    const Json& w = field(j, key);
    if (!w.is_object()) throw ParseError(std::string("\"") + key + "\" must map references to weight lists");
    std::vector<std::vector<Rational>> weights(n, std::vector<Rational>(std::size_t{1} << n));
    for (auto it = w.begin(); it != w.end(); ++it) weights[idx(u.index_of(it.key()))] = weight_table(it.value(), u, key);
    if (kind == "lra") {
      model = LraModel{u, pref, std::move(weights)};
    } else {
      model = CraModel{u, pref, std::move(weights)};
    }
  } else if (kind == "ri-ira") {
    std::vector<Rational> gamma(n);
    const Json& g = field(j, "gamma");
    if (!g.is_object()) throw ParseError("\"gamma\" must map alternatives to probabilities");
    for (auto it = g.begin(); it != g.end(); ++it) gamma[idx(u.index_of(it.key()))] = rational_of(it.value());
    model = RefIndependentModel{RefIndependentKind::Ira, u, pref, std::move(gamma), {}};
  } else if (kind == "ri-lra" || kind == "ri-cra") {
    model = RefIndependentModel{kind == "ri-lra" ? RefIndependentKind::Lra : RefIndependentKind::Cra, u, pref, {},
                                weight_table(field(j, "pi"), u, "pi")};
  } else if (kind == "general") {
    GeneralAttention g{u, pref, {}, true};
    if (j.contains("full_support")) g.full_support = j.at("full_support").get<bool>();
    for (const auto& entry : field(j, "attention")) {
      const ChoiceProblem p{menu_of(field(entry, "menu"), u), u.index_of(text_of(field(entry, "reference"), "reference"))};
      auto& sets = g.mu[p];
      for (const auto& s : field(entry, "sets")) sets.emplace_back(menu_of(field(s, "set"), u), rational_of(field(s, "prob")));
      std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 1; i < sets.size(); ++i) {
        if (sets[i].first == sets[i - 1].first) throw ParseError("consideration set listed twice");
      }
    }
    model = std::move(g);
  } else {
    throw ParseError("unknown model kind \"" + kind + "\"");
  }
  validate_model(model);
  return model;
}

Json model_to_json(const AttentionModel& model) {
  const Universe& u = universe_of(model);
  Json out{{"kind", kind_name(model)}, {"alternatives", u.labels()}, {"preference", order_json(preference_of(model), u)}};
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IraModel>) {
          Json gamma = Json::object();
          for (Alt r = 0; r < u.size(); ++r) {
            Json row = Json::object();
            for (Alt x = 0; x < u.size(); ++x) {
              if (x != r) row[u.label(x)] = rational_json(m.gamma[idx(r)][idx(x)]);
            }
            gamma[u.label(r)] = std::move(row);
          }
          out["gamma"] = std::move(gamma);
        } else if constexpr (std::is_same_v<T, LraModel> || std::is_same_v<T, CraModel>) {
          Json weights = Json::object();
          for (Alt r = 0; r < u.size(); ++r) weights[u.label(r)] = weight_table_json(m.weights[idx(r)], u);
          out[std::is_same_v<T, LraModel> ? "pi" : "pi_prime"] = std::move(weights);
        } else if constexpr (std::is_same_v<T, RefIndependentModel>) {
          if (m.kind == RefIndependentKind::Ira) {
            Json gamma = Json::object();
            for (Alt x = 0; x < u.size(); ++x) gamma[u.label(x)] = rational_json(m.gamma[idx(x)]);
            out["gamma"] = std::move(gamma);
          } else {
            out["pi"] = weight_table_json(m.weights, u);
          }
        } else {
          out["full_support"] = m.full_support;
          Json attention = Json::array();
          for (const auto& [problem, sets] : m.mu) {
            Json entry = problem_json(problem, u);
            Json list = Json::array();
            for (const auto& [d, prob] : sets) list.push_back({{"set", menu_json(d, u)}, {"prob", rational_json(prob)}});
            entry["sets"] = std::move(list);
            attention.push_back(std::move(entry));
          }
          out["attention"] = std::move(attention);
        }
      },
      model);
  return out;
}

Json rdrum_to_json(const RdRumModel& model) {
  const Universe& u = model.universe;
  Json orders = Json::object();
  for (Alt r = 0; r < u.size(); ++r) {
    Json list = Json::array();
    for (const auto& [order, weight] : model.orders[idx(r)]) {
      list.push_back({{"order", order_json(order, u)}, {"weight", rational_json(weight)}});
    }
    orders[u.label(r)] = std::move(list);
  }
  return {{"kind", "rdrum"}, {"alternatives", u.labels()}, {"orders", std::move(orders)}};
}

ConstraintPopulation population_from_json(const Json& j) {
  ConstraintPopulation pop{universe_of_json(field(j, "alternatives")), {}};
  const Universe& u = pop.universe;
  for (const auto& t : field(j, "types")) {
    ConstraintType type{rational_of(field(t, "weight")), std::vector<Menu>(static_cast<std::size_t>(u.size()))};
    const Json& constraints = field(t, "constraints");
    for (Alt r = 0; r < u.size(); ++r) type.constraint[idx(r)] = menu_of(field(constraints, u.label(r).c_str()), u);
    pop.types.push_back(std::move(type));
  }
  validate_population(pop);
  return pop;
}

Json population_to_json(const ConstraintPopulation& pop) {
  const Universe& u = pop.universe;
  Json types = Json::array();
  for (const auto& type : pop.types) {
    Json constraints = Json::object();
    for (Alt r = 0; r < u.size(); ++r) constraints[u.label(r)] = menu_json(type.constraint[idx(r)], u);
    types.push_back({{"weight", rational_json(type.weight)}, {"constraints", std::move(constraints)}});
  }
  return {{"alternatives", u.labels()}, {"types", std::move(types)}};
}

StochasticChoiceRule choice_rule_from_json(const Json& j) {
  StochasticChoiceRule rule{universe_of_json(field(j, "alternatives")), {}};
  const Universe& u = rule.universe;
  for (const auto& entry : field(j, "menus")) {
    const Menu s = menu_of(field(entry, "menu"), u);
    std::vector<Rational> row(static_cast<std::size_t>(u.size()));
    const Json& choice = field(entry, "choice");
    for (auto it = choice.begin(); it != choice.end(); ++it) row[idx(u.index_of(it.key()))] = rational_of(it.value());
    if (!rule.rows.emplace(s, std::move(row)).second) throw ParseError("menu " + u.describe(s) + " listed twice");
  }
  validate_choice_rule(rule);
  return rule;
}

Json verdict_to_json(const Verdict& v, const Universe& u) {
  auto values_json = [](const std::vector<NamedValue>& values) {
    Json out = Json::array();
    for (const auto& nv : values) out.push_back({{"name", nv.name}, {"value", rational_json(nv.value)}});
    return out;
  };
  Json out{{"axiom", v.axiom}, {"status", std::string(to_string(v.status))}};
  if (v.witness) {
    const Witness& w = *v.witness;
    Json problems = Json::array();
    for (const auto& p : w.problems) problems.push_back(problem_json(p, u));
    Json alternatives = Json::array();
    for (Alt a : w.alternatives) alternatives.push_back(u.label(a));
    Json collection = Json::array();
    for (Menu m : w.collection) collection.push_back(menu_json(m, u));
    out["witness"] = {{"condition", w.condition},       {"message", w.message},
                      {"problems", std::move(problems)}, {"alternatives", std::move(alternatives)},
                      {"collection", std::move(collection)}, {"values", values_json(w.values)}};
  }
  if (!v.missing.empty()) {
    Json missing = Json::array();
    for (const auto& p : v.missing) missing.push_back(problem_json(p, u));
    out["missing"] = std::move(missing);
  }
  if (!v.values.empty()) out["values"] = values_json(v.values);
  return out;
}

Json mobius_table_to_json(const MobiusTable& table, const Universe& u) {
  Json refs = Json::object();
  for (Alt r = 0; r < static_cast<Alt>(table.references.size()); ++r) {
    const auto& t = table.references[idx(r)];
    Json lambda = Json::array();
    for (const auto& [s, v] : t.lambda) lambda.push_back({{"set", menu_json(s, u)}, {"value", rational_json(v)}});
    auto pair_table = [&](const std::map<std::pair<Menu, Menu>, Rational>& m) {
      Json out = Json::array();
      for (const auto& [key, v] : m) {
        out.push_back({{"T", menu_json(key.first, u)}, {"S", menu_json(key.second, u)}, {"value", rational_json(v)}});
      }
      return out;
    };
    Json kappa = Json::array();
    for (const auto& [key, v] : t.kappa) {
      kappa.push_back({{"menu", menu_json(key.first, u)}, {"dominant", u.label(key.second)}, {"value", rational_json(v)}});
    }
    Json slack = Json::array();
    for (const auto& [set, bound] : t.slack) {
      slack.push_back({{"set", menu_json(set, u)},
                       {"lower_bound", rational_json(bound)},
                       {"rule", "twice the larger of the lower bound and 1"}});
    }
    refs[u.label(r)] = {{"dominators", menu_json(t.dominators, u)},
                        {"lambda", std::move(lambda)},
                        {"lambda_t", pair_table(t.lambda_t)},
                        {"alpha_t", pair_table(t.alpha_t)},
                        {"kappa", std::move(kappa)},
                        {"free_choices", std::move(slack)}};
  }
  return {{"references", std::move(refs)}};
}

std::string dataset_digest(const ChoiceDataset& data) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : dump_json(dataset_to_json(data))) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace refchoice
