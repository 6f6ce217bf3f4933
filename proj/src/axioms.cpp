#include "refchoice/axioms.hpp"

#include <deque>
#include <optional>
#include <stdexcept>

#include "check_support.hpp"

namespace refchoice {

using detail::VerdictBuilder;

namespace {

std::string prob_text(const Universe& u, Alt r, Alt x, Menu s) {
  return "p_" + u.label(r) + "(" + u.label(x) + ", " + u.describe(s) + ")";
}

}  // namespace

RevealedDominance::RevealedDominance(const ChoiceDataset& data)
    : all_(data.universe().all()), dominators_(static_cast<std::size_t>(data.n())) {
  for (const auto& [s, x] : data.problems()) {
    const auto& row = *data.row(s, x);
    for (Alt y : s.without(x)) {
      if (sgn(row[static_cast<std::size_t>(y)]) > 0) {
        auto& d = dominators_[static_cast<std::size_t>(x)];
        d = d.with(y);
      }
    }
  }
}

Verdict check_ncc(const ChoiceDataset& data) {
  const Universe& u = data.universe();
  const auto n = static_cast<std::size_t>(u.size());
  // edge[x][y]: first stored S with p_x(y,S) > 0.
  std::vector<std::vector<std::optional<Menu>>> edge(n, std::vector<std::optional<Menu>>(n));
  for (const auto& [s, x] : data.problems()) {
    const auto& row = *data.row(s, x);
    for (Alt y : s.without(x)) {
      auto& e = edge[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (!e && sgn(row[static_cast<std::size_t>(y)]) > 0) e = s;
    }
  }
  // Shortest cycle: BFS from each start, keeping the first shortest found.
  std::vector<Alt> best;
  for (Alt start = 0; start < u.size(); ++start) {
    std::vector<int> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<Alt> queue{start};
    seen[static_cast<std::size_t>(start)] = true;
    std::optional<Alt> closing;
    while (!queue.empty() && !closing) {
      const Alt x = queue.front();
      queue.pop_front();
      for (Alt y = 0; y < u.size(); ++y) {
        if (!edge[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) continue;
        if (y == start) {
          closing = x;
          break;
        }
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
      }
    }
    if (!closing) continue;
    std::vector<Alt> cycle;
    for (Alt v = *closing; v != -1; v = parent[static_cast<std::size_t>(v)]) cycle.insert(cycle.begin(), v);
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
  }
  VerdictBuilder out("ncc");
  if (!best.empty()) {
    Witness w{"ncc", "revealed dominance cycle", {}, best, {}, {}};
    std::string chain;
    for (std::size_t i = 0; i < best.size(); ++i) {
      const Alt x = best[i];
      const Alt next = best[(i + 1) % best.size()];
      const Menu s = *edge[static_cast<std::size_t>(x)][static_cast<std::size_t>(next)];
      w.problems.push_back({s, x});
      const std::string name = prob_text(u, x, next, s);
      w.values.push_back({name, data.p(x, next, s)});
      chain += (i == 0 ? "" : ", ") + name + " > 0";
    }
    w.message = "revealed dominance cycle: " + chain;
    out.fail(std::move(w));
  }
  return out.finish();
}

Verdict check_sqa(const ChoiceDataset& data) {
  const Universe& u = data.universe();
  VerdictBuilder out("sqa");
  for (const auto& [s, y] : data.problems()) {
    if (out.failed()) break;
    for (Alt x : s.without(y)) {
      if (out.failed()) break;
      if (sgn(data.p(y, x, s)) != 0) continue;
      // Every stored T ∋ x,y must have p_x(y,T) > 0.
      const Menu pair = Menu::singleton(x).with(y);
      for_each_subset_between(pair, u.all(), [&](Menu t) {
        if (out.failed() || !out.require(data, t, x)) return;
        if (sgn(data.p(x, y, t)) == 0) {
          out.fail(Witness{"sqa",
                           prob_text(u, y, x, s) + " = 0 and " + prob_text(u, x, y, t) + " = 0",
                           {{s, y}, {t, x}},
                           {x, y},
                           {},
                           {}});
        }
      });
    }
  }
  return out.finish();
}

Verdict check_nre(const ChoiceDataset& data) {
  const Universe& u = data.universe();
  VerdictBuilder out("nre");
  for (const auto& [s, x] : data.problems()) {
    if (sgn(data.p(x, x, s)) == 0) {
      out.fail(Witness{"nre", prob_text(u, x, x, s) + " = 0", {{s, x}}, {x}, {}, {}});
      break;
    }
  }
  return out.finish();
}

Verdict check_ida(const ChoiceDataset& data) {
  const Universe& u = data.universe();
  const RevealedDominance dom(data);
  VerdictBuilder out("ida");
  for (const auto& [s, r] : data.problems()) {
    if (out.failed()) break;
    for (Alt y : s.without(r)) {
      if (out.failed()) break;
      const Menu smaller = s.without(y);
      // x ranges over alternatives revealed to dominate y.
      const Menu above = (smaller & dom.dominators(y));
      if (above.empty() || !out.require(data, smaller, r)) continue;
      for (Alt x : above) {
        if (data.p(r, x, s) == data.p(r, x, smaller)) continue;
        // Locate a stored T with p_y(x,T) > 0 for the witness.
        std::optional<Menu> t;
        for_each_subset_between(Menu::singleton(x).with(y), u.all(), [&](Menu cand) {
          if (!t && data.has(cand, y) && sgn(data.p(y, x, cand)) > 0) t = cand;
        });
        out.fail(Witness{"ida",
                         prob_text(u, r, x, s) + " = " + format_rational(data.p(r, x, s)) + " differs from " +
                             prob_text(u, r, x, smaller) + " = " + format_rational(data.p(r, x, smaller)) +
                             " although " + prob_text(u, y, x, *t) + " > 0",
                         {{s, r}, {smaller, r}, {*t, y}},
                         {x, y},
                         {},
                         {{prob_text(u, r, x, s), data.p(r, x, s)}, {prob_text(u, r, x, smaller), data.p(r, x, smaller)}}});
        break;
      }
    }
  }
  return out.finish();
}

Verdict check_rida(const ChoiceDataset& data) {
  const Universe& u = data.universe();
  VerdictBuilder out("rida");
  for (const auto& [s, r] : data.problems()) {
    if (out.failed()) break;
    for (Alt x : s.without(r)) {
      if (out.failed()) break;
      if (!out.require(data, s, x)) continue;
      if (data.p(x, x, s) != 1) continue;
      const Menu smaller = s.without(x);
      if (!out.require(data, smaller, r)) continue;
      for (Alt y : smaller) {
        if (out.failed()) break;
        for (Alt z : smaller) {
          if (z <= y) continue;
          const Rational& py = data.p(r, y, s);
          const Rational& pz = data.p(r, z, s);
          if (sgn(py) == 0 || sgn(pz) == 0) continue;
          const Rational left = py * data.p(r, z, smaller);
          const Rational right = pz * data.p(r, y, smaller);
          if (left == right) continue;
          out.fail(Witness{"rida",
                           "ratio of " + u.label(y) + " to " + u.label(z) + " under reference " + u.label(r) +
                               " changes when the dominant " + u.label(x) + " is removed from " + u.describe(s),
                           {{s, r}, {smaller, r}, {s, x}},
                           {x, y, z},
                           {},
                           {{prob_text(u, r, y, s), py},
                            {prob_text(u, r, z, s), pz},
                            {prob_text(u, r, y, smaller), data.p(r, y, smaller)},
                            {prob_text(u, r, z, smaller), data.p(r, z, smaller)}}});
          break;
        }
      }
    }
  }
  return out.finish();
}

Verdict check_weak_regularity(const ChoiceDataset& data) {
  const Universe& u = data.universe();
  const RevealedDominance dom(data);
  VerdictBuilder out("weak-regularity");
  for (const auto& [s, r] : data.problems()) {
    if (out.failed()) break;
    for (Alt y : s.without(r)) {
      if (out.failed()) break;
      const Menu smaller = s.without(y);
      // x ranges over alternatives that y is revealed to dominate.
      Menu dominated;
      for (Alt x : smaller) {
        if (dom.dominates(y, x)) dominated = dominated.with(x);
      }
      if (dominated.empty() || !out.require(data, smaller, r)) continue;
      for (Alt x : dominated) {
        if (data.p(r, x, s) <= data.p(r, x, smaller)) continue;
        std::optional<Menu> t;
        for_each_subset_between(Menu::singleton(x).with(y), u.all(), [&](Menu cand) {
          if (!t && data.has(cand, x) && sgn(data.p(x, y, cand)) > 0) t = cand;
        });
        out.fail(Witness{"weak-regularity",
                         prob_text(u, r, x, s) + " = " + format_rational(data.p(r, x, s)) + " exceeds " +
                             prob_text(u, r, x, smaller) + " = " + format_rational(data.p(r, x, smaller)) +
                             " although " + prob_text(u, x, y, *t) + " > 0",
                         {{s, r}, {smaller, r}, {*t, x}},
                         {x, y},
                         {},
                         {{prob_text(u, r, x, s), data.p(r, x, s)}, {prob_text(u, r, x, smaller), data.p(r, x, smaller)}}});
        break;
      }
    }
  }
  return out.finish();
}

Verdict check_regularity(const ChoiceDataset& data) {
  const Universe& u = data.universe();
  VerdictBuilder out("regularity");
  // One-element removals suffice: any T ⊆ S is reached by a chain of them.
  for (const auto& [s, r] : data.problems()) {
    if (out.failed()) break;
    for (Alt y : s.without(r)) {
      if (out.failed()) break;
      const Menu smaller = s.without(y);
      if (!out.require(data, smaller, r)) continue;
      for (Alt x : smaller) {
        if (data.p(r, x, smaller) >= data.p(r, x, s)) continue;
        out.fail(Witness{"regularity",
                         prob_text(u, r, x, s) + " = " + format_rational(data.p(r, x, s)) + " exceeds " +
                             prob_text(u, r, x, smaller) + " = " + format_rational(data.p(r, x, smaller)),
                         {{smaller, r}, {s, r}},
                         {x},
                         {},
                         {{prob_text(u, r, x, smaller), data.p(r, x, smaller)}, {prob_text(u, r, x, s), data.p(r, x, s)}}});
        break;
      }
    }
  }
  return out.finish();
}

Verdict check_sqm(const ChoiceDataset& data, const CheckOptions& options) {
  const Universe& u = data.universe();
  VerdictBuilder out("sqm");
  const std::string condition = options.strict ? "sqm-strict" : "sqm";
  for (const auto& [s, r] : data.problems()) {
    if (out.failed()) break;
    for (Alt x : s.without(r)) {
      if (!out.require(data, s, x)) continue;
      const Rational& own = data.p(x, x, s);
      const Rational& other = data.p(r, x, s);
      const bool ok = options.strict ? own > other : own >= other;
      if (ok) continue;
      out.fail(Witness{condition,
                       prob_text(u, x, x, s) + " = " + format_rational(own) + (options.strict ? " is not above " : " is below ") +
                           prob_text(u, r, x, s) + " = " + format_rational(other),
                       {{s, x}, {s, r}},
                       {x},
                       {},
                       {{prob_text(u, x, x, s), own}, {prob_text(u, r, x, s), other}}});
      break;
    }
  }
  return out.finish();
}

Verdict check_axiom(const ChoiceDataset& data, std::string_view name, const CheckOptions& options) {
  if (name == "ncc") return check_ncc(data);
  if (name == "sqa") return check_sqa(data);
  if (name == "nre") return check_nre(data);
  if (name == "ida") return check_ida(data);
  if (name == "rida") return check_rida(data);
  if (name == "dora") return check_dora(data, options);
  if (name == "dpcra") return check_dpcra(data, options);
  if (name == "weak-regularity") return check_weak_regularity(data);
  if (name == "regularity") return check_regularity(data);
  if (name == "sqm") return check_sqm(data, options);
  throw std::invalid_argument("unknown axiom '" + std::string(name) + "'");
}

const std::vector<std::string_view>& characterization_axioms() {
  static const std::vector<std::string_view> names{"ncc", "sqa", "nre", "ida", "rida", "dora", "dpcra"};
  return names;
}

const std::vector<std::string_view>& all_axiom_names() {
  static const std::vector<std::string_view> names{"ncc",   "sqa",   "nre",           "ida",        "rida",
                                                   "dora",  "dpcra", "weak-regularity", "regularity", "sqm"};
  return names;
}

}  // namespace refchoice
