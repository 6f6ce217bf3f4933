#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "refchoice/dataset.hpp"
#include "refchoice/extensions.hpp"
#include "refchoice/models.hpp"

/// Test oracles: seeded generators and brute-force re-derivations that share
/// no evaluation code with the library proper.
namespace refchoice::oracle {

enum class ModelClass {
  Ira,
  Lra,
  Cra,
  RefIndependentIra,
  RefIndependentLra,
  RefIndependentCra,
  /// Luce weights of product form, i.e. an IRA written as an LRA.
  ProductLra,
  /// Constant-attention weights of product form.
  ProductCra,
  /// Full-support general attention table.
  General,
};

const char* class_name(ModelClass c);

struct GeneratorConfig {
  int size = 3;
  ModelClass model_class = ModelClass::Ira;
  std::uint64_t seed = 0;
  /// Parameters are drawn as k / grid.
  int grid = 8;
};

/// Deterministic per config; the result satisfies its class invariants.
AttentionModel gen_model(const GeneratorConfig& cfg);

/// Luce-form dataset whose weights may be negative, kept only when the
/// result is a valid RD-RAM dataset; RIDA holds by construction while DORA
/// may fail. Returns nullopt when the draw is rejected.
std::optional<ChoiceDataset> gen_signed_lra_dataset(const GeneratorConfig& cfg);

/// Constant-attention-form dataset with possibly negative weights, kept only
/// when it is a valid RD-RAM dataset; IDA holds by construction while DPCRA
/// may fail.
std::optional<ChoiceDataset> gen_signed_cra_dataset(const GeneratorConfig& cfg);

/// Arbitrary stochastic choice rule on every menu (supports may be partial).
StochasticChoiceRule gen_choice_rule(int size, std::uint64_t seed, int grid = 8);

/// Population of `types` constraint types with grid weights.
ConstraintPopulation gen_population(int size, std::uint64_t seed, int types, int grid = 8);

/// Random ranking of 0..size-1 drawn from the seed.
LinearOrder gen_order(int size, std::uint64_t seed);

/// p_r(x,S) by enumerating every subset of S, evaluating the model's
/// attention equation directly and picking the best element by rank.
Rational brute_choice_prob(const AttentionModel& model, Alt x, Menu s, Alt r);

/// Simulated dataset computed with brute_choice_prob.
ChoiceDataset brute_dataset(const AttentionModel& model);

/// For reference r, weight on each of the |X|! rankings of the lifted orders
/// of a constant-attention model, found by testing every ranking against
/// every consideration set.
std::vector<std::pair<std::vector<Alt>, Rational>> brute_order_weights(const CraModel& model, Alt r);

/// Σ weights of rankings whose best element of S is x.
Rational brute_order_choice_prob(const std::vector<std::pair<std::vector<Alt>, Rational>>& weights, Alt x, Menu s);

struct Discrepancy {
  ChoiceProblem problem;
  /// -1 when the problem is stored on one side only.
  Alt alternative = -1;
  Rational left;
  Rational right;
};

/// Cell-by-cell differences; empty iff the datasets store the same problems
/// with identical rows. Throws std::invalid_argument on different universes.
std::vector<Discrepancy> diff_datasets(const ChoiceDataset& a, const ChoiceDataset& b);

std::string describe(const Discrepancy& d, const Universe& u);

}  // namespace refchoice::oracle
