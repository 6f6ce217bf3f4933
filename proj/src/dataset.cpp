#include "refchoice/dataset.hpp"

#include <set>

#include "refchoice/errors.hpp"

namespace refchoice {

namespace {

Verdict dataset_failure(std::string message, std::vector<ChoiceProblem> problems = {}) {
  Verdict v;
  v.axiom = "dataset";
  v.status = Status::Fail;
  v.witness = Witness{"dataset", std::move(message), std::move(problems), {}, {}, {}};
  return v;
}

// Returns an error message for an invalid row, or an empty string.
std::string row_problem(const Universe& u, const ChoiceProblem& problem, const std::vector<Rational>& row) {
  const std::string where = "problem (" + u.describe(problem.menu) + ", " + u.label(problem.reference) + ")";
  if (problem.menu.empty()) return "empty menu in " + where;
  if (!u.contains(problem.menu)) return "menu outside the universe in " + where;
  if (!problem.menu.contains(problem.reference)) return "reference is not in the menu in " + where;
  Rational total = 0;
  for (Alt x = 0; x < u.size(); ++x) {
    const Rational& value = row[static_cast<std::size_t>(x)];
    if (!is_probability(value)) {
      return "probability " + format_rational(value) + " of " + u.label(x) + " outside [0,1] in " + where;
    }
    if (sgn(value) != 0 && !problem.menu.contains(x)) {
      return "positive probability on " + u.label(x) + " outside the menu in " + where;
    }
    total += value;
  }
  if (total != 1) return "probabilities sum to " + format_rational(total) + " instead of 1 in " + where;
  return {};
}

}  // namespace

ChoiceDataset::ChoiceDataset(Universe universe, bool complete_flag)
    : universe_(std::move(universe)),
      complete_flag_(complete_flag),
      rows_((std::size_t{1} << universe_.size()) * static_cast<std::size_t>(universe_.size())) {}

std::size_t ChoiceDataset::expected_count() const {
  // Σ_S |S| over non-empty S = n * 2^{n-1}.
  return static_cast<std::size_t>(n()) << (n() - 1);
}

void ChoiceDataset::add(ChoiceProblem problem, std::vector<Rational> row) {
  if (row.size() != static_cast<std::size_t>(n())) throw ValidationError("row length does not match the universe");
  if (auto msg = row_problem(universe_, problem, row); !msg.empty()) throw ValidationError(msg);
  auto& slot_row = rows_[slot(problem.menu, problem.reference)];
  if (!slot_row.empty()) {
    throw ValidationError("duplicate problem entry (" + universe_.describe(problem.menu) + ", " +
                          universe_.label(problem.reference) + ")");
  }
  slot_row = std::move(row);
  ++stored_;
}

bool ChoiceDataset::has(Menu s, Alt r) const {
  return universe_.contains(s) && s.contains(r) && !rows_[slot(s, r)].empty();
}

const std::vector<Rational>* ChoiceDataset::row(Menu s, Alt r) const {
  if (!has(s, r)) return nullptr;
  return &rows_[slot(s, r)];
}

const Rational& ChoiceDataset::p(Alt r, Alt x, Menu s) const {
  const auto* rw = row(s, r);
  if (rw == nullptr) {
    throw MissingProblemError("problem (" + universe_.describe(s) + ", " +
                              (universe_.contains(Menu::singleton(r)) ? universe_.label(r) : std::string("?")) +
                              ") is not stored");
  }
  return (*rw)[static_cast<std::size_t>(x)];
}

std::vector<ChoiceProblem> ChoiceDataset::problems() const {
  std::vector<ChoiceProblem> out;
  out.reserve(stored_);
  const Menu::Bits limit = Menu::Bits{1} << n();
  for (Menu::Bits bits = 1; bits < limit; ++bits) {
    const Menu s(bits);
    for (Alt r : s) {
      if (!rows_[slot(s, r)].empty()) out.push_back({s, r});
    }
  }
  return out;
}

bool ChoiceDataset::operator==(const ChoiceDataset& other) const {
  return universe_ == other.universe_ && rows_ == other.rows_;
}

Verdict validate_dataset(const RawDataset& raw) {
  const Universe& u = raw.universe;
  std::set<ChoiceProblem> seen;
  for (const auto& entry : raw.entries) {
    const ChoiceProblem problem{entry.menu, entry.reference};
    if (!seen.insert(problem).second) {
      return dataset_failure("duplicate problem entry (" + u.describe(entry.menu) + ", " + u.label(entry.reference) + ")",
                             {problem});
    }
    std::vector<Rational> row(static_cast<std::size_t>(u.size()));
    std::vector<bool> assigned(static_cast<std::size_t>(u.size()), false);
    for (const auto& [x, value] : entry.choice) {
      auto idx = static_cast<std::size_t>(x);
      if (assigned[idx] && row[idx] != value) {
        return dataset_failure("conflicting values for " + u.label(x) + " in (" + u.describe(entry.menu) + ", " +
                                   u.label(entry.reference) + ")",
                               {problem});
      }
      assigned[idx] = true;
      row[idx] = value;
    }
    if (auto msg = row_problem(u, problem, row); !msg.empty()) return dataset_failure(msg, {problem});
  }
  if (raw.complete) {
    const Menu::Bits limit = Menu::Bits{1} << u.size();
    for (Menu::Bits bits = 1; bits < limit; ++bits) {
      const Menu s(bits);
      for (Alt r : s) {
        if (!seen.contains({s, r})) {
          return dataset_failure("dataset flagged complete but (" + u.describe(s) + ", " + u.label(r) + ") is missing",
                                 {{s, r}});
        }
      }
    }
  }
  Verdict ok;
  ok.axiom = "dataset";
  return ok;
}

ChoiceDataset make_dataset(const RawDataset& raw) {
  const Verdict v = validate_dataset(raw);
  if (!v.passed()) throw ValidationError(v.witness->message);
  ChoiceDataset data(raw.universe, raw.complete);
  for (const auto& entry : raw.entries) {
    std::vector<Rational> row(static_cast<std::size_t>(raw.universe.size()));
    for (const auto& [x, value] : entry.choice) row[static_cast<std::size_t>(x)] = value;
    data.add({entry.menu, entry.reference}, std::move(row));
  }
  return data;
}

}  // namespace refchoice
