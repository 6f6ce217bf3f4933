#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "refchoice/dataset.hpp"
#include "refchoice/linear_order.hpp"
#include "refchoice/rational.hpp"
#include "refchoice/universe.hpp"

namespace refchoice {

/// Arbitrary attention rule stored as a table: for each problem (S,r) the
/// distribution μ_r(·,S) over consideration sets.
struct GeneralAttention {
  Universe universe;
  LinearOrder preference;
  /// (S,r) -> [(D, μ_r(D,S))] sorted by D. Absent D means zero.
  std::map<ChoiceProblem, std::vector<std::pair<Menu, Rational>>> mu;
  /// When set, validation also requires μ_r(D,S) > 0 for all r ∈ D ⊆ S.
  bool full_support = true;

  const Rational& attention(Alt r, Menu d, Menu s) const;
};

/// Independent attention: γ_r(x) is the chance x is noticed when r is the
/// reference. gamma[r][x]; the diagonal is one.
struct IraModel {
  Universe universe;
  LinearOrder preference;
  std::vector<std::vector<Rational>> gamma;
};

/// Luce attention: consideration-set weights π_r(D) renormalized per menu.
/// weights[r] is indexed by menu mask and is zero for D ∌ r.
struct LraModel {
  Universe universe;
  LinearOrder preference;
  std::vector<std::vector<Rational>> weights;
};

/// Constant attention: a fixed random set intersected with the menu.
/// weights[r] is indexed by menu mask and is zero for D ∌ r.
struct CraModel {
  Universe universe;
  LinearOrder preference;
  std::vector<std::vector<Rational>> weights;

  bool full_support() const;
};

enum class RefIndependentKind { Ira, Lra, Cra };

/// Reference-independent variants. IRA uses `gamma` (one entry per
/// alternative); LRA and CRA use `weights`, a full-support distribution over
/// non-empty menus indexed by mask (entry 0 is the empty set, always zero).
struct RefIndependentModel {
  RefIndependentKind kind = RefIndependentKind::Ira;
  Universe universe;
  LinearOrder preference;
  std::vector<Rational> gamma;
  std::vector<Rational> weights;
};

using AttentionModel = std::variant<GeneralAttention, IraModel, LraModel, CraModel, RefIndependentModel>;

const Universe& universe_of(const AttentionModel& model);
const LinearOrder& preference_of(const AttentionModel& model);
/// "general", "ira", "lra", "cra", "ri-ira", "ri-lra" or "ri-cra".
const char* kind_name(const AttentionModel& model);

/// Throws ValidationError if the parameters break the model's invariants
/// (probability ranges, normalization, full support where required).
void validate_model(const AttentionModel& model);

/// μ_r(D,S) under the model's defining equation.
/// Throws std::invalid_argument unless r ∈ D ⊆ S.
Rational attention_prob(const AttentionModel& model, Alt r, Menu d, Menu s);

/// p_r(x,S): total attention on consideration sets whose best element is x.
/// Throws std::invalid_argument unless x, r ∈ S.
Rational choice_prob(const AttentionModel& model, Alt x, Menu s, Alt r);

/// The complete dataset generated by the model.
ChoiceDataset simulate_dataset(const AttentionModel& model);

/// Draws one consideration set from μ_r(·,S) and returns its best element.
/// The generator is std::mt19937_64 seeded with `seed`; the top 53 bits of
/// its first output form a uniform u in [0,1) that is inverted against the
/// cumulative attention in canonical menu order.
Alt sample_choice(const AttentionModel& model, const ChoiceProblem& problem, std::uint64_t seed);

/// Choice counts for `draws` independent draws from one generator stream
/// seeded with `seed`, indexed by alternative.
std::vector<std::uint64_t> sample_counts(const AttentionModel& model, const ChoiceProblem& problem,
                                         std::uint64_t seed, std::uint64_t draws);

/// Reference-dependent model with the same attention rule: γ_r = γ off the
/// diagonal; LRA π_r = π restricted to menus containing r (renormalized);
/// CRA π'_r(D) = π(D) + π(D \ r).
AttentionModel to_reference_dependent(const RefIndependentModel& model);

/// The μ-table of any model, full support flag copied from the model class.
GeneralAttention attention_table(const AttentionModel& model);

}  // namespace refchoice
