#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "refchoice/dataset.hpp"
#include "refchoice/verdict.hpp"

namespace refchoice {

/// Revealed relation: y dominates x iff p_x(y,S) > 0 for some stored S ∋ x,y
/// with y ≠ x.
class RevealedDominance {
 public:
  explicit RevealedDominance(const ChoiceDataset& data);

  bool dominates(Alt y, Alt x) const { return (dominators_[static_cast<std::size_t>(x)].bits() >> y) & 1U; }
  /// P_r: alternatives that dominate r.
  Menu dominators(Alt r) const { return dominators_[static_cast<std::size_t>(r)]; }
  /// D_r = X \ P_r: the largest menu in which r is dominant.
  Menu dominant_menu(Alt r) const { return all_ - dominators(r); }

 private:
  Menu all_;
  std::vector<Menu> dominators_;
};

enum class CheckMode { Full, Reduced };

/// Default cap on |X| for Full-mode enumeration.
inline constexpr int kDefaultFullModeCap = 5;

struct CheckOptions {
  CheckMode mode = CheckMode::Reduced;
  /// Full mode refuses universes larger than this (CapacityError).
  int full_mode_cap = kDefaultFullModeCap;
  /// Keep every alpha / lambda / Δ value computed in Verdict::values.
  bool record_values = false;
  /// Status Quo Monotonicity: require p_x(x,S) > p_r(x,S) for r ≠ x.
  bool strict = false;
};

/// 𝒪^r_S = (1 - p_r(r,S)) / p_r(r,S). Throws std::domain_error when
/// p_r(r,S) = 0.
Rational reference_odds(const ChoiceDataset& data, Alt r, Menu s);

/// Δ_𝒰 𝒪^r_S by the defining recursion, peeling collection[0] first:
/// Δ_𝒰 𝒪_S = Δ_{𝒰∖U_1} 𝒪_S − Δ_{𝒰∖U_1} 𝒪_{S∖U_1}; the empty collection
/// yields 𝒪^r_S.
Rational odds_delta(const ChoiceDataset& data, Alt r, Menu s, std::span<const Menu> collection);

/// Δ_𝒰 p_r(r,S) by the defining recursion:
/// Δ_𝒰 p(S) = Δ_{𝒰∖U_1} p(S∖U_1) − Δ_{𝒰∖U_1} p(S); the empty collection
/// yields p_r(r,S).
Rational choice_delta(const ChoiceDataset& data, Alt r, Menu s, std::span<const Menu> collection);

/// α_r^T(S) = Σ_{T⊆D⊆S} (−1)^{|S∖D|} / p_r(r,D).
Rational reference_alpha(const ChoiceDataset& data, Alt r, Menu t, Menu s);

/// λ_r(S) = Σ_{D_r⊆D⊆S} (−1)^{|S∖D|} p_r(r,(X∖D) ∪ D_r).
Rational reference_lambda(const ChoiceDataset& data, Alt r, Menu dominant_menu, Menu s);

Verdict check_ncc(const ChoiceDataset& data);
Verdict check_sqa(const ChoiceDataset& data);
Verdict check_nre(const ChoiceDataset& data);
Verdict check_ida(const ChoiceDataset& data);
Verdict check_rida(const ChoiceDataset& data);
Verdict check_dora(const ChoiceDataset& data, const CheckOptions& options = {});
Verdict check_dpcra(const ChoiceDataset& data, const CheckOptions& options = {});
Verdict check_weak_regularity(const ChoiceDataset& data);
Verdict check_regularity(const ChoiceDataset& data);
Verdict check_sqm(const ChoiceDataset& data, const CheckOptions& options = {});

/// Runs a checker by name: ncc, sqa, nre, ida, rida, dora, dpcra,
/// weak-regularity, regularity, sqm. Throws std::invalid_argument otherwise.
Verdict check_axiom(const ChoiceDataset& data, std::string_view name, const CheckOptions& options = {});

/// The seven characterization axioms, in the order they are reported.
const std::vector<std::string_view>& characterization_axioms();
/// Every name accepted by check_axiom().
const std::vector<std::string_view>& all_axiom_names();

/// Re-derives a Fail verdict's violation directly from the dataset using only
/// the witness fields. Returns false when the witness does not reproduce.
bool confirm_witness(const ChoiceDataset& data, const Witness& witness);

struct Classification {
  Verdict ncc, sqa, nre, ida, rida, dora, dpcra;
  bool rdram = false;
  bool ira = false;
  bool lra = false;
  bool cra = false;
  /// IRA = LRA ∧ CRA as every representation must satisfy.
  bool consistent() const { return ira == (lra && cra); }
  std::vector<const Verdict*> verdicts() const { return {&ncc, &sqa, &nre, &ida, &rida, &dora, &dpcra}; }
};

/// Membership in the RD-RAM / IRA / LRA / CRA lattice. DORA and DPCRA run in
/// the mode given by `options` (Reduced by default).
Classification classify(const ChoiceDataset& data, const CheckOptions& options = {});

}  // namespace refchoice
