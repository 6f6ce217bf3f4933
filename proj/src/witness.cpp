#include <algorithm>

#include "refchoice/axioms.hpp"

namespace refchoice {

namespace {

// Positive probability check that tolerates missing problems.
bool positive(const ChoiceDataset& d, Alt r, Alt x, Menu s) { return d.has(s, r) && sgn(d.p(r, x, s)) > 0; }
bool zero(const ChoiceDataset& d, Alt r, Alt x, Menu s) { return d.has(s, r) && sgn(d.p(r, x, s)) == 0; }

bool all_stored(const ChoiceDataset& d, const Witness& w) {
  return std::all_of(w.problems.begin(), w.problems.end(),
                     [&](const ChoiceProblem& p) { return d.has(p.menu, p.reference); });
}

bool confirm_ncc(const ChoiceDataset& d, const Witness& w) {
  const auto n = w.alternatives.size();
  if (n < 2 || w.problems.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Alt x = w.alternatives[i];
    const Alt next = w.alternatives[(i + 1) % n];
    if (w.problems[i].reference != x || x == next) return false;
    if (!w.problems[i].menu.contains(next) || !positive(d, x, next, w.problems[i].menu)) return false;
  }
  return true;
}

bool confirm_sqa(const ChoiceDataset& d, const Witness& w) {
  if (w.problems.size() != 2 || w.alternatives.size() != 2) return false;
  const Alt x = w.alternatives[0];
  const Alt y = w.alternatives[1];
  const auto& [s, ry] = w.problems[0];
  const auto& [t, rx] = w.problems[1];
  return x != y && ry == y && rx == x && s.contains(x) && t.contains(y) && zero(d, y, x, s) && zero(d, x, y, t);
}

bool confirm_nre(const ChoiceDataset& d, const Witness& w) {
  if (w.problems.size() != 1) return false;
  const auto& [s, x] = w.problems[0];
  return zero(d, x, x, s);
}

bool confirm_ida(const ChoiceDataset& d, const Witness& w) {
  if (w.problems.size() != 3 || w.alternatives.size() != 2 || !all_stored(d, w)) return false;
  const Alt x = w.alternatives[0];
  const Alt y = w.alternatives[1];
  const auto& [s, r] = w.problems[0];
  const auto& [smaller, r2] = w.problems[1];
  const auto& [t, ty] = w.problems[2];
  if (r2 != r || ty != y || y == r || y == x || !s.contains(x) || !s.contains(y) || smaller != s.without(y)) return false;
  return t.contains(x) && positive(d, y, x, t) && d.p(r, x, s) != d.p(r, x, smaller);
}

bool confirm_rida(const ChoiceDataset& d, const Witness& w) {
  if (w.problems.size() != 3 || w.alternatives.size() != 3 || !all_stored(d, w)) return false;
  const Alt x = w.alternatives[0];
  const Alt y = w.alternatives[1];
  const Alt z = w.alternatives[2];
  const auto& [s, r] = w.problems[0];
  const Menu smaller = s.without(x);
  if (x == r || w.problems[1] != ChoiceProblem{smaller, r} || w.problems[2] != ChoiceProblem{s, x}) return false;
  if (!smaller.contains(y) || !smaller.contains(z) || d.p(x, x, s) != 1) return false;
  if (sgn(d.p(r, y, s)) == 0 || sgn(d.p(r, z, s)) == 0) return false;
  return d.p(r, y, s) * d.p(r, z, smaller) != d.p(r, z, s) * d.p(r, y, smaller);
}

bool collection_admissible(const ChoiceDataset& d, const Witness& w, Alt r, Menu s) {
  const RevealedDominance dom(d);
  return std::all_of(w.collection.begin(), w.collection.end(),
                     [&](Menu u) { return u.subset_of(dom.dominators(r)) && u.intersects(s); });
}

bool confirm_dora(const ChoiceDataset& d, const Witness& w) {
  if (w.problems.size() != 1 || w.collection.empty()) return false;
  const auto& [s, r] = w.problems[0];
  if (!collection_admissible(d, w, r, s)) return false;
  try {
    return sgn(odds_delta(d, r, s, w.collection)) <= 0;
  } catch (const std::exception&) {
    return false;
  }
}

bool confirm_dpcra(const ChoiceDataset& d, const Witness& w) {
  if (w.problems.size() != 1) return false;
  const auto& [s, r] = w.problems[0];
  if (!collection_admissible(d, w, r, s)) return false;
  try {
    return sgn(choice_delta(d, r, s, w.collection)) <= 0;
  } catch (const std::exception&) {
    return false;
  }
}

bool confirm_weak_regularity(const ChoiceDataset& d, const Witness& w) {
  if (w.problems.size() != 3 || w.alternatives.size() != 2 || !all_stored(d, w)) return false;
  const Alt x = w.alternatives[0];
  const Alt y = w.alternatives[1];
  const auto& [s, r] = w.problems[0];
  const auto& [smaller, r2] = w.problems[1];
  const auto& [t, tx] = w.problems[2];
  if (r2 != r || tx != x || y == r || y == x || !s.contains(x) || !s.contains(y) || smaller != s.without(y)) return false;
  return t.contains(y) && positive(d, x, y, t) && d.p(r, x, s) > d.p(r, x, smaller);
}

bool confirm_regularity(const ChoiceDataset& d, const Witness& w) {
  if (w.problems.size() != 2 || w.alternatives.size() != 1 || !all_stored(d, w)) return false;
  const Alt x = w.alternatives[0];
  const auto& [t, r] = w.problems[0];
  const auto& [s, r2] = w.problems[1];
  return r == r2 && t.subset_of(s) && t.contains(x) && d.p(r, x, t) < d.p(r, x, s);
}

bool confirm_sqm(const ChoiceDataset& d, const Witness& w, bool strict) {
  if (w.problems.size() != 2 || w.alternatives.size() != 1 || !all_stored(d, w)) return false;
  const Alt x = w.alternatives[0];
  const auto& [s, rx] = w.problems[0];
  const auto& [s2, r] = w.problems[1];
  if (rx != x || s != s2 || r == x || !s.contains(x)) return false;
  return strict ? d.p(x, x, s) <= d.p(r, x, s) : d.p(x, x, s) < d.p(r, x, s);
}

}  // namespace

bool confirm_witness(const ChoiceDataset& data, const Witness& witness) {
  const std::string& c = witness.condition;
  if (c == "ncc") return confirm_ncc(data, witness);
  if (c == "sqa") return confirm_sqa(data, witness);
  if (c == "nre") return confirm_nre(data, witness);
  if (c == "ida") return confirm_ida(data, witness);
  if (c == "rida") return confirm_rida(data, witness);
  if (c == "dora") return confirm_dora(data, witness);
  if (c == "dpcra") return confirm_dpcra(data, witness);
  if (c == "weak-regularity") return confirm_weak_regularity(data, witness);
  if (c == "regularity") return confirm_regularity(data, witness);
  if (c == "sqm") return confirm_sqm(data, witness, false);
  if (c == "sqm-strict") return confirm_sqm(data, witness, true);
  return false;
}

}  // namespace refchoice
