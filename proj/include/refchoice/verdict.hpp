#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refchoice/menu.hpp"
#include "refchoice/rational.hpp"

namespace refchoice {

struct ChoiceProblem {
  Menu menu;
  Alt reference = 0;

  bool operator==(const ChoiceProblem&) const = default;
  auto operator<=>(const ChoiceProblem&) const = default;
};

enum class Status { Pass, Fail, Undetermined };

std::string_view to_string(Status s);

struct NamedValue {
  std::string name;
  Rational value;
};

/// Counterexample attached to a failing verdict. `condition` names the
/// violated property ("ncc", "sqa", "nre", "ida", "rida", "dora", "dpcra",
/// "weak-regularity", "regularity", "sqm", "sqm-strict", "dataset"); the
/// meaning of `problems`, `alternatives` and `collection` is fixed per
/// condition so confirm_witness() can re-derive the violation from the data.
struct Witness {
  std::string condition;
  std::string message;
  std::vector<ChoiceProblem> problems;
  std::vector<Alt> alternatives;
  std::vector<Menu> collection;
  std::vector<NamedValue> values;
};

struct Verdict {
  std::string axiom;
  Status status = Status::Pass;
  std::optional<Witness> witness;
  /// Problems whose absence made the verdict Undetermined.
  std::vector<ChoiceProblem> missing;
  /// Intermediate quantities (odds differences, alpha, lambda) when recorded.
  std::vector<NamedValue> values;

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }
};

}  // namespace refchoice
