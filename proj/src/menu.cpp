#include "refchoice/menu.hpp"

#include <stdexcept>

namespace refchoice {

Menu Menu::of(std::initializer_list<Alt> members) {
  Menu m;
  for (Alt a : members) m = m.with(a);
  return m;
}

std::vector<Alt> Menu::members() const { return {begin(), end()}; }

std::vector<Menu> subsets_between(Menu lo, Menu hi) {
  if (!lo.subset_of(hi)) throw std::invalid_argument("subsets_between: lower bound is not a subset of upper bound");
  std::vector<Menu> out;
  out.reserve(std::size_t{1} << (hi - lo).size());
  for_each_subset_between(lo, hi, [&](Menu d) { out.push_back(d); });
  return out;
}

}  // namespace refchoice
