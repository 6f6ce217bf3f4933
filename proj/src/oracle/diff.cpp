#include <stdexcept>

#include "refchoice/oracle.hpp"

namespace refchoice::oracle {

std::vector<Discrepancy> diff_datasets(const ChoiceDataset& a, const ChoiceDataset& b) {
  if (!(a.universe() == b.universe())) throw std::invalid_argument("datasets are over different universes");
  const Universe& u = a.universe();
  std::vector<Discrepancy> out;
  for (Menu::Bits bits = 1; bits < (Menu::Bits{1} << u.size()); ++bits) {
    const Menu s(bits);
    for (Alt r : s) {
      const auto* ra = a.row(s, r);
      const auto* rb = b.row(s, r);
      if (ra == nullptr && rb == nullptr) continue;
      if (ra == nullptr || rb == nullptr) {
        out.push_back({{s, r}, -1, ra ? Rational(1) : Rational(0), rb ? Rational(1) : Rational(0)});
        continue;
      }
      for (Alt x = 0; x < u.size(); ++x) {
        const auto i = static_cast<std::size_t>(x);
        if ((*ra)[i] != (*rb)[i]) out.push_back({{s, r}, x, (*ra)[i], (*rb)[i]});
      }
    }
  }
  return out;
}

std::string describe(const Discrepancy& d, const Universe& u) {
  const std::string where = "(" + u.describe(d.problem.menu) + ", " + u.label(d.problem.reference) + ")";
  if (d.alternative < 0) return where + " stored on one side only";
  return where + " " + u.label(d.alternative) + ": " + format_rational(d.left) + " vs " + format_rational(d.right);
}

}  // namespace refchoice::oracle
