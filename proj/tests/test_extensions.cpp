#include <gtest/gtest.h>

#include <algorithm>

#include "refchoice/axioms.hpp"
#include "refchoice/errors.hpp"
#include "refchoice/extensions.hpp"
#include "refchoice/fixtures.hpp"
#include "refchoice/oracle.hpp"
#include "support.hpp"

using namespace refchoice;
using refchoice::testing::q;
using oracle::ModelClass;

namespace {

const Universe& xyz() {
  static const Universe u({"x", "y", "z"});
  return u;
}

std::vector<LinearOrder> all_orders(int n) {
  std::vector<Alt> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<LinearOrder> out;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST(LiftOrder, RaisesTheSetAboveTheRest) {
  const LinearOrder pref = LinearOrder::identity(3);
  EXPECT_EQ(lift_order(pref, Menu::full(3)), pref);
  EXPECT_EQ(lift_order(pref, Menu()), pref);
  EXPECT_EQ(lift_order(pref, Menu::of({2})), LinearOrder({2, 0, 1}));
  EXPECT_EQ(lift_order(pref, Menu::of({1, 2})), LinearOrder({1, 2, 0}));
}

TEST(LiftOrder, AgreesInsideAndOutside) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const LinearOrder pref = oracle::gen_order(5, seed);
    const Menu d(static_cast<Menu::Bits>(seed * 7 % 32));
    const LinearOrder lifted = lift_order(pref, d);
    for (Alt a = 0; a < 5; ++a) {
      for (Alt b = 0; b < 5; ++b) {
        if (a == b) continue;
        if (d.contains(a) == d.contains(b)) {
          EXPECT_EQ(lifted.prefers(a, b), pref.prefers(a, b));
        } else {
          EXPECT_EQ(lifted.prefers(a, b), d.contains(a));
        }
      }
    }
  }
}

TEST(Rdrum, BinaryConstantAttention) {
  CraModel m{Universe({"x", "z"}), LinearOrder::identity(2), {std::vector<Rational>(4), std::vector<Rational>(4)}};
  m.weights[0][Menu::of({0}).bits()] = q(1, 2);
  m.weights[0][Menu::of({0, 1}).bits()] = q(1, 2);
  m.weights[1][Menu::of({1}).bits()] = q(1, 2);
  m.weights[1][Menu::of({0, 1}).bits()] = q(1, 2);
  const RdRumModel rum = cra_to_rdrum(m);
  const auto& z = rum.orders[1];
  ASSERT_EQ(z.size(), 2U);
  for (const auto& [order, weight] : z) EXPECT_EQ(weight, q(1, 2));
  EXPECT_TRUE(std::any_of(z.begin(), z.end(), [](const auto& e) { return e.first == LinearOrder({1, 0}); }));
  EXPECT_EQ(rdrum_choice_prob(rum, 1, Menu::full(2), 1), q(1, 2));
}

TEST(Rdrum, SingleOrderIsDeterministic) {
  RdRumModel rum{xyz(), std::vector<std::vector<std::pair<LinearOrder, Rational>>>(3)};
  for (auto& per : rum.orders) per = {{LinearOrder({1, 2, 0}), q(1)}};
  EXPECT_EQ(rdrum_choice_prob(rum, 1, Menu::full(3), 0), 1);
  EXPECT_EQ(rdrum_choice_prob(rum, 2, Menu::of({0, 2}), 0), 1);
  EXPECT_EQ(rdrum_choice_prob(rum, 0, Menu::of({0, 2}), 0), 0);
}

TEST(Rdrum, UniformOverOrdersIsSymmetric) {
  RdRumModel rum{xyz(), std::vector<std::vector<std::pair<LinearOrder, Rational>>>(3)};
  for (auto& per : rum.orders) {
    for (const auto& o : all_orders(3)) per.emplace_back(o, q(1, 6));
  }
  for (Alt x = 0; x < 3; ++x) EXPECT_EQ(rdrum_choice_prob(rum, x, Menu::full(3), 2), q(1, 3));
}

TEST(Rdrum, PreservesConstantAttentionChoices) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int size = 3 + static_cast<int>(seed % 3);
    const auto m = std::get<CraModel>(oracle::gen_model({size, ModelClass::Cra, seed, 8}));
    const RdRumModel rum = cra_to_rdrum(m);
    for (Alt r = 0; r < size; ++r) {
      Rational total = 0;
      for (const auto& [order, weight] : rum.orders[static_cast<std::size_t>(r)]) {
        EXPECT_GT(weight, 0);
        total += weight;
      }
      EXPECT_EQ(total, 1);
      for_each_subset_between(Menu::singleton(r), m.universe.all(), [&](Menu s) {
        Rational row = 0;
        for (Alt x : s) {
          EXPECT_EQ(rdrum_choice_prob(rum, x, s, r), choice_prob(m, x, s, r));
          row += rdrum_choice_prob(rum, x, s, r);
        }
        EXPECT_EQ(row, 1);
      });
    }
    // Random utility satisfies regularity.
    EXPECT_TRUE(check_regularity(simulate_dataset(m)).passed());
  }
}

TEST(Rdrum, FixtureMatchesBruteForceOrders) {
  const auto m = std::get<CraModel>(std::get<AttentionModel>(make_fixture("rida-violation-cra")));
  for (Alt r = 0; r < 3; ++r) {
    const auto weights = oracle::brute_order_weights(m, r);
    const RdRumModel rum = cra_to_rdrum(m);
    for_each_subset_between(Menu::singleton(r), Menu::full(3), [&](Menu s) {
      for (Alt x : s) EXPECT_EQ(oracle::brute_order_choice_prob(weights, x, s), rdrum_choice_prob(rum, x, s, r));
    });
  }
}

TEST(Heterogeneity, TwoConstraintTypes) {
  // Q_1(r) = {r, x}, Q_2(r) = {r}.
  ConstraintPopulation pop{xyz(), {}};
  ConstraintType one{q(1, 2), {}}, two{q(1, 2), {}};
  for (Alt r = 0; r < 3; ++r) {
    one.constraint.push_back(Menu::of({r, 0}));
    two.constraint.push_back(Menu::singleton(r));
  }
  pop.types = {one, two};
  EXPECT_NO_THROW(validate_population(pop));
  const CraModel m = heterogeneity_to_cra(pop, LinearOrder::identity(3));
  EXPECT_EQ(m.weights[2][Menu::of({0, 2}).bits()], q(1, 2));
  EXPECT_EQ(m.weights[2][Menu::of({2}).bits()], q(1, 2));
  EXPECT_EQ(m.weights[0][Menu::of({0}).bits()], 1);
  EXPECT_FALSE(m.full_support());
  EXPECT_EQ(choice_prob(m, 0, Menu::full(3), 2), q(1, 2));
  EXPECT_EQ(choice_prob(m, 1, Menu::full(3), 2), 0);
}

TEST(Heterogeneity, SingleTypeIsDeterministic) {
  ConstraintPopulation pop{xyz(), {{q(1), {Menu::of({0}), Menu::of({1, 2}), Menu::of({2, 1})}}}};
  const LinearOrder pref({2, 1, 0});
  const CraModel m = heterogeneity_to_cra(pop, pref);
  EXPECT_EQ(choice_prob(m, 2, Menu::full(3), 1), 1);
  EXPECT_EQ(choice_prob(m, 0, Menu::full(3), 0), 1);
  EXPECT_EQ(population_choice_prob(pop, pref, 2, Menu::full(3), 1), 1);
}

TEST(Heterogeneity, MixtureMatchesConstantAttention) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int size = 3 + static_cast<int>(seed % 2);
    const ConstraintPopulation pop = oracle::gen_population(size, seed, 1 + static_cast<int>(seed % 4));
    const LinearOrder pref = oracle::gen_order(size, seed + 1);
    const CraModel m = heterogeneity_to_cra(pop, pref);
    EXPECT_NO_THROW(validate_model(m));
    for (Alt r = 0; r < size; ++r) {
      for_each_subset_between(Menu::singleton(r), pop.universe.all(), [&](Menu s) {
        for (Alt x : s) EXPECT_EQ(choice_prob(m, x, s, r), population_choice_prob(pop, pref, x, s, r));
      });
    }
    if (m.full_support()) {
      EXPECT_TRUE(classify(simulate_dataset(m)).cra);
    }
  }
}

TEST(Heterogeneity, RejectsBadPopulations) {
  ConstraintPopulation missing_ref{xyz(), {{q(1), {Menu::of({1}), Menu::of({1}), Menu::of({2})}}}};
  EXPECT_THROW(validate_population(missing_ref), ValidationError);
  ConstraintPopulation unnormalized{xyz(), {{q(1, 2), {Menu::of({0}), Menu::of({1}), Menu::of({2})}}}};
  EXPECT_THROW(validate_population(unnormalized), ValidationError);
}

TEST(RandomReference, BinaryRuleIsReproduced) {
  StochasticChoiceRule p{Universe({"x", "y"}), {}};
  p.rows[Menu::of({0})] = {q(1), q(0)};
  p.rows[Menu::of({1})] = {q(0), q(1)};
  p.rows[Menu::full(2)] = {q(7, 10), q(3, 10)};
  const RandomReferenceRule rr = random_reference_embed(p);
  EXPECT_EQ(random_reference_choice_prob(rr, 0, Menu::full(2)), q(7, 10));
  EXPECT_EQ(rr.eta.at(Menu::full(2))[0], q(7, 10));
}

TEST(RandomReference, DeterministicRuleGivesDegenerateReferences) {
  StochasticChoiceRule p{xyz(), {}};
  for (Menu::Bits b = 1; b < 8; ++b) {
    std::vector<Rational> row(3);
    row[static_cast<std::size_t>(Menu(b).first())] = 1;
    p.rows[Menu(b)] = row;
  }
  const RandomReferenceRule rr = random_reference_embed(p);
  for (const auto& [s, eta] : rr.eta) {
    EXPECT_EQ(eta[static_cast<std::size_t>(s.first())], 1);
    for (Alt x : s) EXPECT_EQ(random_reference_choice_prob(rr, x, s), x == s.first() ? 1 : 0);
  }
}

TEST(RandomReference, UniformRuleStaysUniform) {
  StochasticChoiceRule p{xyz(), {}};
  for (Menu::Bits b = 1; b < 8; ++b) {
    std::vector<Rational> row(3);
    for (Alt x : Menu(b)) row[static_cast<std::size_t>(x)] = q(1, Menu(b).size());
    p.rows[Menu(b)] = row;
  }
  const RandomReferenceRule rr = random_reference_embed(p);
  for (const auto& [s, row] : p.rows) {
    for (Alt x : s) EXPECT_EQ(random_reference_choice_prob(rr, x, s), row[static_cast<std::size_t>(x)]);
  }
}

TEST(RandomReference, EveryReferenceChoosesItself) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const StochasticChoiceRule p = oracle::gen_choice_rule(4, seed);
    EXPECT_NO_THROW(validate_choice_rule(p));
    const RandomReferenceRule rr = random_reference_embed(p);
    EXPECT_NO_THROW(validate_model(rr.attention));
    const ChoiceDataset d = simulate_dataset(rr.attention);
    for (const auto& problem : d.problems()) EXPECT_EQ(d.p(problem.reference, problem.reference, problem.menu), 1);
    for (const auto& [s, row] : p.rows) {
      for (Alt x : s) EXPECT_EQ(random_reference_choice_prob(rr, x, s), row[static_cast<std::size_t>(x)]);
    }
  }
}

TEST(RandomReference, RejectsInvalidRules) {
  StochasticChoiceRule p{Universe({"x", "y"}), {}};
  p.rows[Menu::full(2)] = {q(1, 2), q(1, 3)};
  EXPECT_THROW(validate_choice_rule(p), ValidationError);
}
