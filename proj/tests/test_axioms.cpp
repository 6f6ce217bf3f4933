#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "refchoice/axioms.hpp"
#include "refchoice/errors.hpp"
#include "refchoice/fixtures.hpp"
#include "refchoice/models.hpp"
#include "refchoice/oracle.hpp"
#include "support.hpp"

using namespace refchoice;
using refchoice::testing::DatasetBuilder;
using refchoice::testing::q;
using oracle::ModelClass;

namespace {

ChoiceDataset generated(ModelClass cls, int size, std::uint64_t seed) {
  return simulate_dataset(oracle::gen_model({size, cls, seed, 8}));
}

bool has_value(const Verdict& v, const Rational& value) {
  return std::any_of(v.values.begin(), v.values.end(), [&](const NamedValue& nv) { return nv.value == value; }) ||
         (v.witness && std::any_of(v.witness->values.begin(), v.witness->values.end(),
                                   [&](const NamedValue& nv) { return nv.value == value; }));
}

// Binary choices with reference r: each reference keeps itself unless noted.
DatasetBuilder two_cities(const Rational& x_over_y, const Rational& y_over_x) {
  DatasetBuilder b({"x", "y"});
  b.singletons()
      .add({"x", "y"}, "y", {{"x", x_over_y}, {"y", 1 - x_over_y}})
      .add({"x", "y"}, "x", {{"y", y_over_x}, {"x", 1 - y_over_x}});
  return b;
}

// x > y > z, but removing x lowers the chance of y under reference z.
ChoiceDataset non_monotone() {
  DatasetBuilder b({"x", "y", "z"});
  b.singletons()
      .add({"x", "y"}, "x", {{"x", q(1)}})
      .add({"x", "y"}, "y", {{"x", q(1, 2)}, {"y", q(1, 2)}})
      .add({"x", "z"}, "x", {{"x", q(1)}})
      .add({"x", "z"}, "z", {{"x", q(1, 2)}, {"z", q(1, 2)}})
      .add({"y", "z"}, "y", {{"y", q(1)}})
      .add({"y", "z"}, "z", {{"y", q(1, 4)}, {"z", q(3, 4)}})
      .add({"x", "y", "z"}, "x", {{"x", q(1)}})
      .add({"x", "y", "z"}, "y", {{"x", q(1, 2)}, {"y", q(1, 2)}})
      .add({"x", "y", "z"}, "z", {{"x", q(1, 4)}, {"y", q(1, 2)}, {"z", q(1, 4)}});
  return b.build(true);
}

}  // namespace

TEST(Ncc, TwoCycleFailsWithConfirmedWitness) {
  const ChoiceDataset d = two_cities(q(1, 2), q(1, 2)).build(true);
  const Verdict v = check_ncc(d);
  ASSERT_TRUE(v.failed());
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->condition, "ncc");
  EXPECT_EQ(v.witness->alternatives.size(), 2U);
  EXPECT_TRUE(confirm_witness(d, *v.witness));
}

TEST(Ncc, SingletonUniversePasses) {
  DatasetBuilder b({"x"});
  EXPECT_TRUE(check_ncc(b.singletons().build(true)).passed());
}

TEST(Ncc, ThreeCycleIsFound) {
  // x beats y, y beats z, z beats x through the references.
  DatasetBuilder b({"x", "y", "z"});
  b.add({"x", "y"}, "y", {{"x", q(1, 2)}, {"y", q(1, 2)}})
      .add({"y", "z"}, "z", {{"y", q(1, 2)}, {"z", q(1, 2)}})
      .add({"x", "z"}, "x", {{"z", q(1, 2)}, {"x", q(1, 2)}});
  const ChoiceDataset d = b.build();
  const Verdict v = check_ncc(d);
  ASSERT_TRUE(v.failed());
  EXPECT_EQ(v.witness->alternatives.size(), 3U);
  EXPECT_TRUE(confirm_witness(d, *v.witness));
}

TEST(Sqa, MutualRefusalFails) {
  const ChoiceDataset d = two_cities(q(0), q(0)).build(true);
  const Verdict v = check_sqa(d);
  ASSERT_TRUE(v.failed());
  EXPECT_TRUE(confirm_witness(d, *v.witness));
}

TEST(Sqa, OneSidedRefusalPasses) {
  EXPECT_TRUE(check_sqa(two_cities(q(1, 2), q(0)).build(true)).passed());
}

TEST(Sqa, MissingCounterpartIsUndetermined) {
  DatasetBuilder b({"x", "y"});
  b.add({"x", "y"}, "y", {{"y", q(1)}});
  const Verdict v = check_sqa(b.build());
  EXPECT_EQ(v.status, Status::Undetermined);
  ASSERT_EQ(v.missing.size(), 1U);
  EXPECT_EQ(v.missing[0], (ChoiceProblem{Menu::full(2), 0}));
}

TEST(Sqa, FailureOutranksMissingData) {
  DatasetBuilder b({"x", "y", "z"});
  b.add({"x", "y"}, "y", {{"y", q(1)}}).add({"y", "z"}, "z", {{"z", q(1)}}).add({"y", "z"}, "y", {{"y", q(1)}});
  EXPECT_TRUE(check_sqa(b.build()).failed());
}

TEST(Nre, ReferenceNeverChosenFails) {
  const ChoiceDataset d = two_cities(q(1), q(0)).build(true);
  const Verdict v = check_nre(d);
  ASSERT_TRUE(v.failed());
  EXPECT_TRUE(confirm_witness(d, *v.witness));
}

TEST(Nre, SingletonsAlwaysPass) {
  DatasetBuilder b({"x", "y", "z"});
  EXPECT_TRUE(check_nre(b.singletons().build()).passed());
}

TEST(Ida, IraDataSatisfyIda) {
  const ChoiceDataset d = fixture_dataset("ira-uniform");
  EXPECT_EQ(d.p(2, 0, Menu::full(3)), q(1, 2));
  EXPECT_EQ(d.p(2, 0, Menu::of({0, 2})), q(1, 2));
  EXPECT_TRUE(check_ida(d).passed());
}

TEST(Ida, LuceFixtureFails) {
  const ChoiceDataset d = fixture_dataset("ida-violation-lra");
  EXPECT_EQ(d.p(1, 1, Menu::full(3)), q(2, 3));
  EXPECT_EQ(d.p(1, 1, Menu::of({0, 1})), q(1, 2));
  const Verdict v = check_ida(d);
  ASSERT_TRUE(v.failed());
  EXPECT_TRUE(confirm_witness(d, *v.witness));
}

TEST(Ida, NoDominanceIsVacuous) {
  DatasetBuilder b({"x", "y"});
  b.singletons().add({"x", "y"}, "x", {{"x", q(1)}}).add({"x", "y"}, "y", {{"y", q(1)}});
  EXPECT_TRUE(check_ida(b.build(true)).passed());
}

TEST(Rida, ConstantAttentionFixtureFails) {
  const ChoiceDataset d = fixture_dataset("rida-violation-cra");
  const Verdict v = check_rida(d);
  ASSERT_TRUE(v.failed());
  EXPECT_TRUE(confirm_witness(d, *v.witness));
}

TEST(Rida, IraDataPass) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) EXPECT_TRUE(check_rida(generated(ModelClass::Ira, 4, seed)).passed());
}

TEST(Rida, NoDominantAlternativeIsVacuous) {
  DatasetBuilder b({"x", "y"});
  b.singletons().add({"x", "y"}, "x", {{"x", q(1, 2)}, {"y", q(1, 2)}}).add({"x", "y"}, "y", {{"y", q(1)}});
  EXPECT_TRUE(check_rida(b.build(true)).passed());
}

TEST(Dora, InsufficiencyOfRidaGivesMinusOneHalf) {
  const ChoiceDataset d = fixture_dataset("insufficiency-rida");
  EXPECT_TRUE(check_rida(d).passed());
  CheckOptions o;
  o.record_values = true;
  const Verdict v = check_dora(d, o);
  ASSERT_TRUE(v.failed());
  EXPECT_TRUE(has_value(v, q(-1, 2)));
  EXPECT_TRUE(confirm_witness(d, *v.witness));
  // The same value appears as the single-collection difference in Full mode.
  o.mode = CheckMode::Full;
  const Verdict full = check_dora(d, o);
  EXPECT_TRUE(full.failed());
  EXPECT_TRUE(confirm_witness(d, *full.witness));
}

TEST(Dora, AlphaMatchesHandExpansion) {
  const ChoiceDataset d = fixture_dataset("insufficiency-rida");
  // α_z^{z}(X) = 1/p(X) − 1/p({x,z}) − 1/p({y,z}) + 1/p({z}) = 5/2 − 2 − 2 + 1
  EXPECT_EQ(reference_alpha(d, 2, Menu::of({2}), Menu::full(3)), q(-1, 2));
  const std::vector<Menu> both{Menu::of({0}), Menu::of({1})};
  EXPECT_EQ(odds_delta(d, 2, Menu::full(3), both), q(-1, 2));
}

TEST(Dora, LuceDataPassInBothModes) {
  CheckOptions full;
  full.mode = CheckMode::Full;
  for (int size : {3, 4}) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const ChoiceDataset d = generated(ModelClass::Lra, size, seed);
      EXPECT_TRUE(check_dora(d).passed());
      EXPECT_TRUE(check_dora(d, full).passed());
    }
  }
}

TEST(Dora, ReferenceAtTheTopIsVacuous) {
  DatasetBuilder b({"x", "y"});
  b.singletons().add({"x", "y"}, "x", {{"x", q(1)}}).add({"x", "y"}, "y", {{"y", q(1)}});
  CheckOptions full;
  full.mode = CheckMode::Full;
  EXPECT_TRUE(check_dora(b.build(true)).passed());
  EXPECT_TRUE(check_dora(b.build(true), full).passed());
}

TEST(Dpcra, InsufficiencyOfIdaGivesMinusOneTenth) {
  const ChoiceDataset d = fixture_dataset("insufficiency-ida");
  EXPECT_TRUE(check_ida(d).passed());
  EXPECT_EQ(d.p(2, 2, Menu::of({1, 2})), q(2, 5));
  EXPECT_EQ(d.p(2, 2, Menu::of({0, 2})), q(3, 4));
  EXPECT_EQ(d.p(2, 2, Menu::full(3)), q(1, 2));
  EXPECT_EQ(reference_lambda(d, 2, Menu::of({2}), Menu::of({0, 2})), q(-1, 10));
  const Verdict v = check_dpcra(d);
  ASSERT_TRUE(v.failed());
  EXPECT_TRUE(has_value(v, q(-1, 10)));
  EXPECT_TRUE(confirm_witness(d, *v.witness));
}

TEST(Dpcra, ConstantAttentionDataPass) {
  CheckOptions full;
  full.mode = CheckMode::Full;
  for (int size : {3, 4}) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const ChoiceDataset d = generated(ModelClass::Cra, size, seed);
      EXPECT_TRUE(check_dpcra(d).passed());
      EXPECT_TRUE(check_dpcra(d, full).passed());
    }
  }
}

TEST(Deltas, EmptyCollectionIsTheBaseValue) {
  const ChoiceDataset d = fixture_dataset("ira-uniform");
  EXPECT_EQ(odds_delta(d, 2, Menu::full(3), {}), reference_odds(d, 2, Menu::full(3)));
  EXPECT_EQ(reference_odds(d, 2, Menu::full(3)), 3);
  EXPECT_EQ(choice_delta(d, 2, Menu::full(3), {}), q(1, 4));
  const std::vector<Menu> x{Menu::of({0})};
  EXPECT_EQ(choice_delta(d, 2, Menu::full(3), x), d.p(2, 2, Menu::of({1, 2})) - d.p(2, 2, Menu::full(3)));
}

TEST(Deltas, ZeroReferenceProbabilityIsADomainError) {
  const ChoiceDataset d = two_cities(q(1), q(0)).build(true);
  EXPECT_THROW(reference_odds(d, 1, Menu::full(2)), std::domain_error);
  EXPECT_TRUE(check_dora(d).failed());
}

TEST(Deltas, OrderOfTheCollectionDoesNotMatter) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ChoiceDataset d = generated(ModelClass::General, 4, seed);
    std::vector<Menu> family{Menu::of({0}), Menu::of({1, 2}), Menu::of({0, 1})};
    const Rational odds = odds_delta(d, 3, Menu::full(4), family);
    const Rational choice = choice_delta(d, 3, Menu::full(4), family);
    std::sort(family.begin(), family.end());
    do {
      EXPECT_EQ(odds_delta(d, 3, Menu::full(4), family), odds);
      EXPECT_EQ(choice_delta(d, 3, Menu::full(4), family), choice);
    } while (std::next_permutation(family.begin(), family.end()));
  }
}

TEST(FullMode, CapIsEnforced) {
  const ChoiceDataset d = generated(ModelClass::Ira, 6, 1);
  CheckOptions full;
  full.mode = CheckMode::Full;
  EXPECT_THROW(check_dora(d, full), CapacityError);
  EXPECT_THROW(check_dpcra(d, full), CapacityError);
  EXPECT_TRUE(check_dora(d).passed());
}

TEST(WeakRegularity, IraAndLuceDataPass) {
  for (auto cls : {ModelClass::Ira, ModelClass::Lra}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_TRUE(check_weak_regularity(generated(cls, 4, seed)).passed());
  }
}

TEST(WeakRegularity, NonMonotoneAttentionFails) {
  const ChoiceDataset d = non_monotone();
  EXPECT_TRUE(check_ncc(d).passed());
  const Verdict v = check_weak_regularity(d);
  ASSERT_TRUE(v.failed());
  EXPECT_TRUE(confirm_witness(d, *v.witness));
}

TEST(WeakRegularity, NoDominanceIsVacuous) {
  DatasetBuilder b({"x", "y"});
  b.singletons().add({"x", "y"}, "x", {{"x", q(1)}}).add({"x", "y"}, "y", {{"y", q(1)}});
  EXPECT_TRUE(check_weak_regularity(b.build(true)).passed());
}

TEST(Regularity, OverloadFixtureFails) {
  const ChoiceDataset d = fixture_dataset("overload-lra");
  const Verdict v = check_regularity(d);
  ASSERT_TRUE(v.failed());
  EXPECT_TRUE(confirm_witness(d, *v.witness));
}

TEST(Regularity, ConstantAttentionPasses) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_TRUE(check_regularity(generated(ModelClass::Cra, 4, seed)).passed());
}

TEST(Regularity, SingletonsOnlyPass) {
  DatasetBuilder b({"x", "y", "z"});
  EXPECT_TRUE(check_regularity(b.singletons().build()).passed());
}

TEST(Sqm, ViolationFixtureFails) {
  const ChoiceDataset d = fixture_dataset("sqm-violation-ira");
  const Verdict v = check_sqm(d);
  ASSERT_TRUE(v.failed());
  EXPECT_EQ(v.witness->condition, "sqm");
  EXPECT_TRUE(confirm_witness(d, *v.witness));
}

TEST(Sqm, ReferenceIndependentConstantAttentionIsStrict) {
  CheckOptions strict;
  strict.strict = true;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    EXPECT_TRUE(check_sqm(generated(ModelClass::RefIndependentCra, 4, seed), strict).passed());
  }
}

TEST(Sqm, StrictModeRejectsTies) {
  // With only the reference choosing itself, p_x(x,S) = 1 > 0 = p_r(x,S) strictly.
  DatasetBuilder b({"x", "y"});
  b.singletons().add({"x", "y"}, "x", {{"x", q(1)}}).add({"x", "y"}, "y", {{"y", q(1)}});
  CheckOptions strict;
  strict.strict = true;
  EXPECT_TRUE(check_sqm(b.build(true), strict).passed());
  // p_y(x,{x,y}) = 1 ties p_x(x,{x,y}) = 1: weak passes, strict fails.
  DatasetBuilder tie({"x", "y"});
  tie.singletons().add({"x", "y"}, "x", {{"x", q(1)}}).add({"x", "y"}, "y", {{"x", q(1)}});
  const ChoiceDataset d = tie.build(true);
  EXPECT_TRUE(check_sqm(d).passed());
  const Verdict v = check_sqm(d, strict);
  ASSERT_TRUE(v.failed());
  EXPECT_EQ(v.witness->condition, "sqm-strict");
  EXPECT_TRUE(confirm_witness(d, *v.witness));
}

TEST(CheckAxiom, DispatchesByName) {
  const ChoiceDataset d = fixture_dataset("overload-lra");
  for (auto name : all_axiom_names()) EXPECT_EQ(check_axiom(d, name).axiom, name);
  EXPECT_THROW(check_axiom(d, "bogus"), std::invalid_argument);
  EXPECT_EQ(characterization_axioms().size(), 7U);
}

TEST(Classify, IraDataAreEverywhere) {
  const Classification c = classify(fixture_dataset("ira-uniform"));
  EXPECT_TRUE(c.rdram && c.ira && c.lra && c.cra);
}

TEST(Classify, OverloadIsOnlyLuce) {
  const Classification c = classify(fixture_dataset("overload-lra"));
  EXPECT_TRUE(c.rdram);
  EXPECT_TRUE(c.lra);
  EXPECT_FALSE(c.cra);
  EXPECT_FALSE(c.ira);
}

TEST(Classify, NccFailureExcludesEverything) {
  const Classification c = classify(fixture_dataset("ncc-cycle"));
  EXPECT_FALSE(c.rdram || c.ira || c.lra || c.cra);
  EXPECT_TRUE(c.consistent());
}

TEST(Witnesses, EveryFailureReproduces) {
  CheckOptions full;
  full.mode = CheckMode::Full;
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::vector<ChoiceDataset> sets{generated(ModelClass::Lra, 3, seed), generated(ModelClass::Cra, 4, seed),
                                    generated(ModelClass::General, 3, seed)};
    if (auto d = oracle::gen_signed_lra_dataset({3, ModelClass::General, seed, 8})) sets.push_back(*d);
    if (auto d = oracle::gen_signed_cra_dataset({4, ModelClass::General, seed, 8})) sets.push_back(*d);
    for (const auto& d : sets) {
      for (auto name : all_axiom_names()) {
        for (const CheckOptions& o : {CheckOptions{}, full}) {
          const Verdict v = check_axiom(d, name, o);
          if (!v.failed()) continue;
          ++failures;
          ASSERT_TRUE(v.witness) << name;
          EXPECT_TRUE(confirm_witness(d, *v.witness)) << name << ": " << v.witness->message;
        }
      }
    }
  }
  EXPECT_GT(failures, 100);
}

TEST(Witnesses, TamperedWitnessIsRejected) {
  const ChoiceDataset d = fixture_dataset("sqm-violation-ira");
  Witness w = *check_sqm(d).witness;
  w.problems[1].reference = w.problems[0].reference;
  EXPECT_FALSE(confirm_witness(d, w));
  Witness other = *check_regularity(fixture_dataset("overload-lra")).witness;
  EXPECT_FALSE(confirm_witness(fixture_dataset("ira-uniform"), other));
}

TEST(Dominance, RevealedFromData) {
  const RevealedDominance dom(fixture_dataset("ira-uniform"));
  EXPECT_EQ(dom.dominators(2), Menu::of({0, 1}));
  EXPECT_EQ(dom.dominators(0), Menu());
  EXPECT_EQ(dom.dominant_menu(1), Menu::of({1, 2}));
  EXPECT_TRUE(dom.dominates(0, 1));
  EXPECT_FALSE(dom.dominates(1, 0));
}
