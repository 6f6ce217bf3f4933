#include "refchoice/linear_order.hpp"

#include <numeric>
#include <stdexcept>

#include "refchoice/errors.hpp"

namespace refchoice {

LinearOrder::LinearOrder(std::vector<Alt> best_first) : ranking_(std::move(best_first)), rank_(ranking_.size(), -1) {
  for (std::size_t pos = 0; pos < ranking_.size(); ++pos) {
    const Alt a = ranking_[pos];
    if (a < 0 || static_cast<std::size_t>(a) >= ranking_.size() || rank_[static_cast<std::size_t>(a)] != -1) {
      throw ValidationError("preference is not a permutation of the universe");
    }
    rank_[static_cast<std::size_t>(a)] = static_cast<int>(pos);
  }
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<Alt> r(static_cast<std::size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return LinearOrder(std::move(r));
}

Alt LinearOrder::best(Menu m) const {
  if (m.empty()) throw std::invalid_argument("best() of an empty menu");
  Alt top = m.first();
  for (Alt a : m) {
    if (rank(a) < rank(top)) top = a;
  }
  return top;
}

Menu LinearOrder::lower_contour(Alt a) const {
  Menu m;
  for (std::size_t pos = static_cast<std::size_t>(rank(a)); pos < ranking_.size(); ++pos) m = m.with(ranking_[pos]);
  return m;
}

Menu LinearOrder::strict_upper_contour(Alt a) const {
  Menu m;
  for (std::size_t pos = 0; pos < static_cast<std::size_t>(rank(a)); ++pos) m = m.with(ranking_[pos]);
  return m;
}

}  // namespace refchoice
