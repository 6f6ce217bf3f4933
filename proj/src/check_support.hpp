#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "refchoice/dataset.hpp"
#include "refchoice/verdict.hpp"

namespace refchoice::detail {

/// Accumulates a verdict: the first Fail wins, otherwise any missing problem
/// makes the result Undetermined.
class VerdictBuilder {
 public:
  explicit VerdictBuilder(std::string axiom) { verdict_.axiom = std::move(axiom); }

  bool failed() const { return verdict_.status == Status::Fail; }

  void fail(Witness witness) {
    if (failed()) return;
    verdict_.status = Status::Fail;
    verdict_.witness = std::move(witness);
  }

  /// Returns true when the problem is stored; otherwise records it as missing.
  bool require(const ChoiceDataset& data, Menu s, Alt r) {
    if (data.has(s, r)) return true;
    if (missing_.insert({s, r}).second) verdict_.missing.push_back({s, r});
    return false;
  }

  void record(std::string name, Rational value) { verdict_.values.push_back({std::move(name), std::move(value)}); }

  Verdict finish() {
    if (!failed()) verdict_.status = verdict_.missing.empty() ? Status::Pass : Status::Undetermined;
    std::sort(verdict_.missing.begin(), verdict_.missing.end());
    return std::move(verdict_);
  }

 private:
  Verdict verdict_;
  std::set<ChoiceProblem> missing_;
};

std::string describe_problem(const Universe& u, Menu s, Alt r);

/// Signed coefficients c(A) over local removal sets A ⊆ {0..k-1} such that
/// Δ_F f(S) = Σ_A c(A) f(S ∖ A) for the odds recursion, together with one
/// family F (as local trace masks) realising them.
struct DeltaPattern {
  std::vector<int> coefficients;
  std::vector<Menu::Bits> family;
};

/// Distinct patterns over all non-empty families of distinct non-empty traces
/// of a k-element set. Throws CapacityError when k > 4.
const std::vector<DeltaPattern>& odds_patterns(int k);

/// Distinct patterns over all non-empty families of pairwise disjoint
/// non-empty traces, for the choice-probability recursion.
std::vector<DeltaPattern> choice_patterns(int k);

}  // namespace refchoice::detail
