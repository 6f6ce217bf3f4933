#pragma once

#include <map>
#include <vector>

#include "refchoice/models.hpp"
#include "refchoice/recovery.hpp"

namespace refchoice {

/// One psychological constraint type: Q(r) for every reference, realized
/// with probability `weight`.
struct ConstraintType {
  Rational weight;
  std::vector<Menu> constraint;  // indexed by reference; must contain it
};

struct ConstraintPopulation {
  Universe universe;
  std::vector<ConstraintType> types;
};

/// Plain stochastic choice rule without a reference: rows[S] indexed by
/// alternative.
struct StochasticChoiceRule {
  Universe universe;
  std::map<Menu, std::vector<Rational>> rows;
};

/// Reference drawn with probability η(r,S), then an RD-RAM without full
/// support chooses.
struct RandomReferenceRule {
  Universe universe;
  std::map<Menu, std::vector<Rational>> eta;  // eta[S][r]
  GeneralAttention attention;
};

/// m_⪰(D): agrees with ⪰ inside D and inside X∖D, ranks D above X∖D.
LinearOrder lift_order(const LinearOrder& preference, Menu d);

RdRumModel cra_to_rdrum(const CraModel& model);

/// Σ of order weights whose S-maximum is x, for reference r.
Rational rdrum_choice_prob(const RdRumModel& model, Alt x, Menu s, Alt r);

void validate_population(const ConstraintPopulation& pop);

/// π_r(D) = Σ_i ν_i 1(Q_i(r) = D).
CraModel heterogeneity_to_cra(const ConstraintPopulation& pop, const LinearOrder& preference);

/// Mixture of the deterministic choosers argmax(⪰, Q_i(r) ∩ S).
Rational population_choice_prob(const ConstraintPopulation& pop, const LinearOrder& preference, Alt x, Menu s, Alt r);

void validate_choice_rule(const StochasticChoiceRule& p);

/// η(x,S) = p(x,S), μ_r uniform over {D : r ∈ D ⊆ S, D ∩ U(r) = {r}} under
/// the index order, so every p_r(r,S) = 1.
RandomReferenceRule random_reference_embed(const StochasticChoiceRule& p);

/// p_η(x,S) = Σ_r p_r(x,S) η(r,S).
Rational random_reference_choice_prob(const RandomReferenceRule& rule, Alt x, Menu s);

}  // namespace refchoice
