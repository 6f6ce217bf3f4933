#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refchoice/menu.hpp"

namespace refchoice {

/// Hard cap on |X|; menus are 32-bit masks but datasets grow as n * 2^n.
inline constexpr int kMaxAlternatives = 16;

/// The finite set of alternatives X with its canonical indexing.
class Universe {
 public:
  Universe() = default;
  /// Throws ValidationError on an empty list, duplicate labels, or more than
  /// kMaxAlternatives entries.
  explicit Universe(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Alt a) const { return labels_.at(static_cast<std::size_t>(a)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Alt> find(std::string_view label) const;
  /// Like find() but throws ParseError for unknown labels.
  Alt index_of(std::string_view label) const;

  Menu all() const { return Menu::full(size()); }
  bool contains(Menu m) const { return m.subset_of(all()); }

  /// "{x,z}" style rendering used in messages and text reports.
  std::string describe(Menu m) const;

  bool operator==(const Universe&) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace refchoice
