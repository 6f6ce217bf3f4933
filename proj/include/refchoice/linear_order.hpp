#pragma once

#include <vector>

#include "refchoice/menu.hpp"

namespace refchoice {

/// A strict ranking of the universe, best first. Completeness,
/// antisymmetry and transitivity hold because the ranking is a permutation.
class LinearOrder {
 public:
  LinearOrder() = default;
  /// Throws ValidationError unless `best_first` is a permutation of 0..n-1.
  explicit LinearOrder(std::vector<Alt> best_first);

  /// Index order: alternative 0 is best.
  static LinearOrder identity(int n);

  int size() const { return static_cast<int>(ranking_.size()); }
  const std::vector<Alt>& ranking() const { return ranking_; }
  /// Position in the ranking, 0 = best.
  int rank(Alt a) const { return rank_[static_cast<std::size_t>(a)]; }
  bool prefers(Alt a, Alt b) const { return rank(a) < rank(b); }

  /// The best element of a non-empty menu.
  Alt best(Menu m) const;
  /// {y : a ⪰ y}, the largest menu in which `a` is the maximum.
  Menu lower_contour(Alt a) const;
  /// {y : y ≻ a}.
  Menu strict_upper_contour(Alt a) const;

  bool operator==(const LinearOrder&) const = default;

 private:
  std::vector<Alt> ranking_;
  std::vector<int> rank_;
};

}  // namespace refchoice
