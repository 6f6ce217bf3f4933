// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "refchoice/axioms.hpp"
#include "refchoice/extensions.hpp"
#include "refchoice/fixtures.hpp"
#include "refchoice/models.hpp"
#include "refchoice/oracle.hpp"
#include "refchoice/recovery.hpp"

using namespace refchoice;
using oracle::ModelClass;

namespace {

constexpr int kInstances = 500;
constexpr int kEmbedInstances = 200;
constexpr int kSizes[] = {3, 4, 5};

/// Collects the first few failures of a criterion; any failure fails it.
class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  void note(std::string text) { note_ = std::move(text); }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_) + " checks";
    if (!note_.empty()) s += ", " + note_;
    if (failures_ > 0) s += ", " + std::to_string(failures_) + " failed; first: " + first_;
    return s;
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
  std::string note_;
};

std::string tag(ModelClass c, int size, std::uint64_t seed) {
  return std::string(oracle::class_name(c)) + " |X|=" + std::to_string(size) + " seed=" + std::to_string(seed);
}

AttentionModel model(ModelClass c, int size, std::uint64_t seed) {
  return oracle::gen_model({size, c, seed, 8});
}

bool passes(const ChoiceDataset& d, std::initializer_list<std::string_view> names, const CheckOptions& o = {}) {
  for (auto name : names) {
    if (!check_axiom(d, name, o).passed()) return false;
  }
  return true;
}

bool same(const ChoiceDataset& a, const ChoiceDataset& b) { return oracle::diff_datasets(a, b).empty(); }

const Rational& p(const ChoiceDataset& d, std::string_view ref, std::string_view x, std::vector<std::string> menu) {
  const Universe& u = d.universe();
  Menu s;
  for (const auto& label : menu) s = s.with(u.index_of(label));
  return d.p(u.index_of(ref), u.index_of(x), s);
}

Rational q(long num, long den) {
  Rational v(num, den);
  v.canonicalize();
  return v;
}

bool witness_value(const Verdict& v, const Rational& expected) {
  if (!v.failed() || !v.witness) return false;
  for (const auto& nv : v.witness->values) {
    if (nv.value == expected) return true;
  }
  return false;
}

// AC1: necessity of each characterization.
void necessity(Criterion& c) {
  const std::pair<ModelClass, std::vector<std::string_view>> suites[] = {
      {ModelClass::Ira, {"ncc", "sqa", "nre", "ida", "rida", "dora", "dpcra"}},
      {ModelClass::Lra, {"ncc", "sqa", "nre", "rida", "dora"}},
      {ModelClass::Cra, {"ncc", "sqa", "nre", "ida", "dpcra"}},
  };
  int lra_without_ida = 0, cra_without_rida = 0;
  for (const auto& [cls, axioms] : suites) {
    for (int size : kSizes) {
      for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
        const ChoiceDataset d = simulate_dataset(model(cls, size, seed));
        for (auto name : axioms) {
          c.check(check_axiom(d, name).passed(), tag(cls, size, seed) + " fails " + std::string(name));
        }
        if (cls == ModelClass::Lra) lra_without_ida += check_ida(d).failed();
        if (cls == ModelClass::Cra) cra_without_rida += check_rida(d).failed();
      }
    }
  }
  c.note("LRA failing IDA: " + std::to_string(lra_without_ida) + ", CRA failing RIDA: " +
         std::to_string(cra_without_rida));
}

// AC2: recovery reproduces the data and the preference.
void round_trip(Criterion& c) {
  for (int size : kSizes) {
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
      {
        const auto m = std::get<IraModel>(model(ModelClass::Ira, size, seed));
        const ChoiceDataset d = simulate_dataset(m);
        const auto rec = build_ira(d);
        const std::string t = tag(ModelClass::Ira, size, seed);
        c.check(same(simulate_dataset(rec.model), d), t + " ira round trip");
        c.check(reveal_preference(d) == m.preference, t + " preference");
        for (Alt r = 0; r < size; ++r) {
          for (Alt x = 0; x < size; ++x) {
            if (m.preference.prefers(x, r)) {
              c.check(rec.model.gamma[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)] ==
                          m.gamma[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)],
                      t + " gamma on upper contour");
            }
          }
        }
        c.check(same(simulate_dataset(build_rdram(d)), d), t + " rdram round trip");
      }
      for (ModelClass cls : {ModelClass::Lra, ModelClass::Cra}) {
        const AttentionModel m = model(cls, size, seed);
        const ChoiceDataset d = simulate_dataset(m);
        const std::string t = tag(cls, size, seed);
        const AttentionModel rec = cls == ModelClass::Lra ? AttentionModel(build_lra(d).model)
                                                          : AttentionModel(build_cra(d).model);
        c.check(same(simulate_dataset(rec), d), t + " round trip");
        c.check(reveal_preference(d) == preference_of(m), t + " preference");
        c.check(same(simulate_dataset(build_rdram(d)), d), t + " rdram round trip");
      }
    }
  }
}

// AC3: LRA ∩ CRA = IRA.
void lattice(Criterion& c) {
  const ModelClass classes[] = {ModelClass::Ira, ModelClass::Lra, ModelClass::Cra, ModelClass::ProductLra,
                                ModelClass::ProductCra, ModelClass::General};
  for (ModelClass cls : classes) {
    for (int size : kSizes) {
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const AttentionModel m = model(cls, size, seed);
        const ChoiceDataset d = simulate_dataset(m);
        const Classification k = classify(d);
        const std::string t = tag(cls, size, seed);
        c.check(k.consistent(), t + " classification reports LRA and CRA without IRA");
        if (k.lra && k.cra) c.check(k.ira, t + " not IRA");
        if (cls == ModelClass::Ira || cls == ModelClass::ProductLra || cls == ModelClass::ProductCra) {
          c.check(k.lra && k.cra && k.ira, t + " IRA instance misclassified");
          const GeneralAttention mu = attention_table(m);
          const auto rec = ira_from_lra_cra(mu);
          const GeneralAttention back = attention_table(rec.model);
          c.check(back.mu == mu.mu, t + " ira_from_lra_cra mu-table");
        }
      }
    }
  }
  for (int size : kSizes) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      for (const auto& gen : {oracle::gen_signed_lra_dataset, oracle::gen_signed_cra_dataset}) {
        const auto d = gen({size, ModelClass::General, seed, 8});
        if (!d) continue;
        c.check(classify(*d).consistent(), "signed dataset |X|=" + std::to_string(size) + " seed=" +
                                               std::to_string(seed) + " inconsistent");
      }
    }
  }
}

// AC4: implications between the axioms and the strictness fixtures.
void implications(Criterion& c) {
  for (int size : kSizes) {
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
      const ChoiceDataset d = simulate_dataset(model(ModelClass::Ira, size, seed));
      c.check(passes(d, {"ida", "rida"}), tag(ModelClass::Ira, size, seed) + " IDA/RIDA");
      c.check(passes(d, {"dora", "dpcra"}), tag(ModelClass::Ira, size, seed) + " DORA/DPCRA");
    }
  }
  {
    const ChoiceDataset d = fixture_dataset("ida-violation-lra");
    const Classification k = classify(d);
    c.check(k.lra && !k.ida.passed() && confirm_witness(d, *k.ida.witness), "ida-violation-lra");
  }
  {
    const ChoiceDataset d = fixture_dataset("rida-violation-cra");
    const Classification k = classify(d);
    c.check(k.cra && !k.rida.passed() && confirm_witness(d, *k.rida.witness), "rida-violation-cra");
  }
  {
    const ChoiceDataset d = fixture_dataset("insufficiency-rida");
    const Verdict dora = check_dora(d);
    c.check(check_rida(d).passed() && passes(d, {"ncc", "sqa", "nre"}), "insufficiency-rida satisfies RIDA");
    c.check(witness_value(dora, q(-1, 2)), "insufficiency-rida alpha = -1/2");
    c.check(dora.failed() && confirm_witness(d, *dora.witness), "insufficiency-rida witness");
  }
  {
    const ChoiceDataset d = fixture_dataset("insufficiency-ida");
    const Verdict dpcra = check_dpcra(d);
    c.check(check_ida(d).passed() && passes(d, {"ncc", "sqa", "nre"}), "insufficiency-ida satisfies IDA");
    c.check(witness_value(dpcra, q(-1, 10)), "insufficiency-ida lambda = -1/10");
    c.check(dpcra.failed() && confirm_witness(d, *dpcra.witness), "insufficiency-ida witness");
  }
}

// AC5: frequency reversal, choice overload, regularity.
void phenomena(Criterion& c) {
  {
    const ChoiceDataset d = fixture_dataset("category-bias");
    const std::vector<std::string> all{"m", "m'", "v", "v'"};
    c.check(p(d, "m'", "m", all) > p(d, "m'", "v", all), "category-bias p_m'(m,X) > p_m'(v,X)");
    c.check(p(d, "v'", "m", all) < p(d, "v'", "v", all), "category-bias reversal under v'");
  }
  {
    const ChoiceDataset d = fixture_dataset("overload-lra");
    c.check(p(d, "y", "y", {"x", "y", "z"}) == q(1, 2), "overload p_y(y,X) = 1/2");
    c.check(p(d, "y", "y", {"x", "y"}) == q(1, 5), "overload p_y(y,{x,y}) = 1/5");
    c.check(check_regularity(d).failed(), "overload fails regularity");
  }
  for (ModelClass cls : {ModelClass::Ira, ModelClass::Cra}) {
    for (int size : kSizes) {
      for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
        const ChoiceDataset d = simulate_dataset(model(cls, size, seed));
        c.check(check_regularity(d).passed(), tag(cls, size, seed) + " regularity");
      }
    }
  }
}

// AC6: status quo monotonicity.
void status_quo(Criterion& c) {
  {
    const ChoiceDataset d = fixture_dataset("sqm-violation-ira");
    const std::vector<std::string> all{"x", "y", "z"};
    c.check(p(d, "y", "y", all) == q(1, 10), "sqm fixture p_y(y,X) = 1/10");
    c.check(p(d, "z", "y", all) == q(9, 20), "sqm fixture p_z(y,X) = 9/20");
    const Verdict v = check_sqm(d);
    c.check(v.failed() && confirm_witness(d, *v.witness), "sqm fixture fails sqm");
  }
  CheckOptions strict;
  strict.strict = true;
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const int size = kSizes[seed % 3];
    const ChoiceDataset d = simulate_dataset(model(ModelClass::RefIndependentCra, size, seed));
    c.check(check_sqm(d, strict).passed(), tag(ModelClass::RefIndependentCra, size, seed) + " strict sqm");
  }
  {
    const ChoiceDataset d = fixture_dataset("ri-lra-sqm-violation");
    const Verdict v = check_sqm(d);
    c.check(v.failed() && confirm_witness(d, *v.witness), "ri-lra-sqm-violation fails sqm");
  }
}

// AC7: random references and random utility.
void embeddings(Criterion& c) {
  for (std::uint64_t seed = 0; seed < kEmbedInstances; ++seed) {
    const int size = kSizes[seed % 3];
    const StochasticChoiceRule rule = oracle::gen_choice_rule(size, seed);
    const RandomReferenceRule rr = random_reference_embed(rule);
    for (const auto& [s, row] : rule.rows) {
      for (Alt x : s) {
        c.check(random_reference_choice_prob(rr, x, s) == row[static_cast<std::size_t>(x)],
                "embed seed=" + std::to_string(seed));
      }
    }
  }
  for (std::uint64_t seed = 0; seed < kEmbedInstances; ++seed) {
    const int size = kSizes[seed % 3];
    const auto m = std::get<CraModel>(model(ModelClass::Cra, size, seed));
    const RdRumModel rum = cra_to_rdrum(m);
    const std::string t = tag(ModelClass::Cra, size, seed);
    for (Alt r = 0; r < size; ++r) {
      std::vector<std::pair<std::vector<Alt>, Rational>> brute;
      if (size <= 4) brute = oracle::brute_order_weights(m, r);
      for_each_subset_between(Menu::singleton(r), m.universe.all(), [&](Menu s) {
        for (Alt x : s) {
          const Rational expected = choice_prob(m, x, s, r);
          c.check(rdrum_choice_prob(rum, x, s, r) == expected, t + " rdrum");
          if (size <= 4) c.check(oracle::brute_order_choice_prob(brute, x, s) == expected, t + " brute orders");
        }
      });
    }
  }
}

// AC8: oracle agreement and Full/Reduced agreement.
void oracle_agreement(Criterion& c) {
  const ModelClass classes[] = {ModelClass::Ira,
                                ModelClass::Lra,
                                ModelClass::Cra,
                                ModelClass::RefIndependentIra,
                                ModelClass::RefIndependentLra,
                                ModelClass::RefIndependentCra,
                                ModelClass::ProductLra,
                                ModelClass::ProductCra,
                                ModelClass::General};
  for (ModelClass cls : classes) {
    for (int size : kSizes) {
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const AttentionModel m = model(cls, size, seed);
        c.check(same(oracle::brute_dataset(m), simulate_dataset(m)), tag(cls, size, seed) + " brute choice");
      }
    }
  }
  CheckOptions full;
  full.mode = CheckMode::Full;
  int dora_fails = 0, dpcra_fails = 0;
  auto compare = [&](const ChoiceDataset& d, const std::string& t) {
    if (!passes(d, {"ncc", "sqa", "nre"})) return;
    if (check_rida(d).passed()) {
      const Status reduced = check_dora(d).status;
      c.check(reduced == check_dora(d, full).status, t + " dora full vs reduced");
      dora_fails += reduced == Status::Fail;
    }
    if (check_ida(d).passed()) {
      const Status reduced = check_dpcra(d).status;
      c.check(reduced == check_dpcra(d, full).status, t + " dpcra full vs reduced");
      dpcra_fails += reduced == Status::Fail;
    }
  };
  for (int size : kSizes) {
    const std::uint64_t count = size == 5 ? 40 : 200;
    for (ModelClass cls : {ModelClass::Ira, ModelClass::Lra, ModelClass::Cra, ModelClass::General}) {
      for (std::uint64_t seed = 0; seed < count; ++seed) {
        compare(simulate_dataset(model(cls, size, seed)), tag(cls, size, seed));
      }
    }
    for (std::uint64_t seed = 0; seed < count * 4; ++seed) {
      const std::string t = "|X|=" + std::to_string(size) + " seed=" + std::to_string(seed);
      if (auto d = oracle::gen_signed_lra_dataset({size, ModelClass::General, seed, 8})) compare(*d, "signed lra " + t);
      if (auto d = oracle::gen_signed_cra_dataset({size, ModelClass::General, seed, 8})) compare(*d, "signed cra " + t);
    }
  }
  for (const char* name : {"insufficiency-rida", "insufficiency-ida"}) compare(fixture_dataset(name), name);
  c.note("agreeing failures: " + std::to_string(dora_fails) + " dora, " + std::to_string(dpcra_fails) + " dpcra");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Criterion&)>> criteria[] = {
      {"AC1 necessity: generated IRA/LRA/CRA data pass their axiom sets", necessity},
      {"AC2 sufficiency: recovery round-trips data and preference", round_trip},
      {"AC3 lattice: LRA and CRA together imply IRA", lattice},
      {"AC4 implications: IRA data satisfy all four, fixtures separate the classes", implications},
      {"AC5 phenomena: frequency reversal, choice overload, regularity", phenomena},
      {"AC6 status quo monotonicity", status_quo},
      {"AC7 embeddings: random reference and random utility", embeddings},
      {"AC8 oracle agreement: brute-force choice, full vs reduced checks", oracle_agreement},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %s  (%s, %.1fs)\n", c.ok() ? "PASS" : "FAIL", name, c.summary().c_str(), secs);
    if (!c.ok()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
