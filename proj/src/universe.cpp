#include "refchoice/universe.hpp"

#include <algorithm>

#include "refchoice/errors.hpp"

namespace refchoice {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ValidationError("universe must contain at least one alternative");
  if (size() > kMaxAlternatives) {
    throw ValidationError("universe has " + std::to_string(size()) + " alternatives; the cap is " +
                          std::to_string(kMaxAlternatives));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (std::find(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(i), labels_[i]) !=
        labels_.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw ValidationError("duplicate alternative label \"" + labels_[i] + "\"");
    }
  }
}

std::optional<Alt> Universe::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Alt>(i);
  }
  return std::nullopt;
}

Alt Universe::index_of(std::string_view label) const {
  if (auto a = find(label)) return *a;
  throw ParseError("unknown alternative \"" + std::string(label) + "\"");
}

std::string Universe::describe(Menu m) const {
  std::string out = "{";
  bool first = true;
  for (Alt a : m) {
    if (!first) out += ',';
    out += label(a);
    first = false;
  }
  return out + "}";
}

}  // namespace refchoice
