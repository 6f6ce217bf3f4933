#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "refchoice/rational.hpp"
#include "refchoice/universe.hpp"
#include "refchoice/verdict.hpp"

namespace refchoice {

/// One problem as read from input, before any constraint is enforced.
struct RawEntry {
  Menu menu;
  Alt reference = 0;
  std::vector<std::pair<Alt, Rational>> choice;
};

struct RawDataset {
  Universe universe;
  bool complete = false;
  std::vector<RawEntry> entries;
};

/// Exact choice probabilities p_r(x,S) for a family of choice problems.
///
/// Rows are indexed by alternative and hold zero outside the menu. The
/// dataset may be partial; is_complete() reports whether every (S,r) with
/// r ∈ S is stored. Rows are only added while the dataset is being built;
/// afterwards it is treated as an immutable value.
class ChoiceDataset {
 public:
  ChoiceDataset() = default;
  ChoiceDataset(Universe universe, bool complete_flag);

  /// Stores the row for `problem`. Throws ValidationError when the problem is
  /// already present, the reference is outside the menu, the support leaves
  /// the menu, a value is outside [0,1], or the row does not sum to one.
  void add(ChoiceProblem problem, std::vector<Rational> row);

  const Universe& universe() const { return universe_; }
  int n() const { return universe_.size(); }
  bool complete_flag() const { return complete_flag_; }
  bool is_complete() const { return stored_ == expected_count(); }
  std::size_t problem_count() const { return stored_; }
  std::size_t expected_count() const;

  bool has(Menu s, Alt r) const;
  /// Row for (S,r), or nullptr when absent.
  const std::vector<Rational>* row(Menu s, Alt r) const;
  /// p_r(x,S). Throws MissingProblemError when (S,r) is not stored.
  const Rational& p(Alt r, Alt x, Menu s) const;

  /// Stored problems in canonical order (menu mask, then reference index).
  std::vector<ChoiceProblem> problems() const;

  bool operator==(const ChoiceDataset& other) const;

 private:
  std::size_t slot(Menu s, Alt r) const {
    return static_cast<std::size_t>(s.bits()) * static_cast<std::size_t>(n()) + static_cast<std::size_t>(r);
  }

  Universe universe_;
  bool complete_flag_ = false;
  std::vector<std::vector<Rational>> rows_;
  std::size_t stored_ = 0;
};

/// Checks the defining constraints of a reference-dependent random choice
/// rule plus domain completeness when the raw dataset is flagged complete.
/// Fail carries the first violation.
Verdict validate_dataset(const RawDataset& raw);

/// Validates and converts. Throws ValidationError with the first violation.
ChoiceDataset make_dataset(const RawDataset& raw);

}  // namespace refchoice
