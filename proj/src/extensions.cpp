#include "refchoice/extensions.hpp"

#include <stdexcept>

namespace refchoice {

namespace {

std::size_t idx(Alt a) { return static_cast<std::size_t>(a); }
std::size_t idx(Menu m) { return static_cast<std::size_t>(m.bits()); }

}  // namespace

LinearOrder lift_order(const LinearOrder& preference, Menu d) {
  std::vector<Alt> ranking;
  ranking.reserve(preference.ranking().size());
  for (Alt a : preference.ranking()) {
    if (d.contains(a)) ranking.push_back(a);
  }
  for (Alt a : preference.ranking()) {
    if (!d.contains(a)) ranking.push_back(a);
  }
  return LinearOrder(std::move(ranking));
}

RdRumModel cra_to_rdrum(const CraModel& model) {
  validate_model(model);
  const Universe& u = model.universe;
  RdRumModel out{u, std::vector<std::vector<std::pair<LinearOrder, Rational>>>(static_cast<std::size_t>(u.size()))};
  for (Alt r = 0; r < u.size(); ++r) {
    std::map<std::vector<Alt>, Rational> by_order;
    for_each_subset_between(Menu::singleton(r), u.all(), [&](Menu d) {
      const Rational& w = model.weights[idx(r)][idx(d)];
      if (sgn(w) > 0) by_order[lift_order(model.preference, d).ranking()] += w;
    });
    for (auto& [ranking, weight] : by_order) out.orders[idx(r)].emplace_back(LinearOrder(ranking), weight);
  }
  return out;
}

Rational rdrum_choice_prob(const RdRumModel& model, Alt x, Menu s, Alt r) {
  if (!s.contains(x) || !s.contains(r)) throw std::invalid_argument("rdrum_choice_prob requires x, r ∈ S");
  Rational out = 0;
  for (const auto& [order, weight] : model.orders.at(idx(r))) {
    if (order.best(s) == x) out += weight;
  }
  return out;
}

void validate_population(const ConstraintPopulation& pop) {
  const Universe& u = pop.universe;
  if (pop.types.empty()) throw ValidationError("population has no constraint types");
  Rational total = 0;
  for (const auto& type : pop.types) {
    if (sgn(type.weight) <= 0 || type.weight > 1) throw ValidationError("constraint weight must lie in (0,1]");
    if (type.constraint.size() != static_cast<std::size_t>(u.size())) {
      throw ValidationError("constraint type needs one menu per reference");
    }
    for (Alt r = 0; r < u.size(); ++r) {
      const Menu q = type.constraint[idx(r)];
      if (!u.contains(q) || !q.contains(r)) {
        throw ValidationError("constraint for reference " + u.label(r) + " must be a menu containing it");
      }
    }
    total += type.weight;
  }
  if (total != 1) throw ValidationError("constraint weights sum to " + format_rational(total) + ", not 1");
}

CraModel heterogeneity_to_cra(const ConstraintPopulation& pop, const LinearOrder& preference) {
  validate_population(pop);
  const Universe& u = pop.universe;
  const std::size_t menus = std::size_t{1} << u.size();
  CraModel out{u, preference, std::vector<std::vector<Rational>>(static_cast<std::size_t>(u.size()), std::vector<Rational>(menus))};
  for (const auto& type : pop.types) {
    for (Alt r = 0; r < u.size(); ++r) out.weights[idx(r)][idx(type.constraint[idx(r)])] += type.weight;
  }
  validate_model(out);
  return out;
}

Rational population_choice_prob(const ConstraintPopulation& pop, const LinearOrder& preference, Alt x, Menu s, Alt r) {
  if (!s.contains(x) || !s.contains(r)) throw std::invalid_argument("population_choice_prob requires x, r ∈ S");
  Rational out = 0;
  for (const auto& type : pop.types) {
    if (preference.best(type.constraint.at(idx(r)) & s) == x) out += type.weight;
  }
  return out;
}

void validate_choice_rule(const StochasticChoiceRule& p) {
  const Universe& u = p.universe;
  for (const auto& [s, row] : p.rows) {
    if (s.empty() || !u.contains(s)) throw ValidationError("choice rule menu outside the universe");
    if (row.size() != static_cast<std::size_t>(u.size())) throw ValidationError("choice rule row has the wrong length");
    Rational total = 0;
    for (Alt x = 0; x < u.size(); ++x) {
      const Rational& v = row[idx(x)];
      if (!is_probability(v)) throw ValidationError("choice probability outside [0,1] in " + u.describe(s));
      if (sgn(v) != 0 && !s.contains(x)) throw ValidationError("choice outside the menu " + u.describe(s));
      total += v;
    }
    if (total != 1) throw ValidationError("choice probabilities in " + u.describe(s) + " sum to " + format_rational(total));
  }
}

RandomReferenceRule random_reference_embed(const StochasticChoiceRule& p) {
  validate_choice_rule(p);
  const Universe& u = p.universe;
  const LinearOrder order = LinearOrder::identity(u.size());
  RandomReferenceRule out{u, {}, GeneralAttention{u, order, {}, false}};
  for (const auto& [s, row] : p.rows) {
    out.eta.emplace(s, row);
    for (Alt r : s) {
      // Only sets in which r is the best element: r is then always chosen.
      const Menu top = (s & order.lower_contour(r)).with(r);
      const Menu single = Menu::singleton(r);
      const Rational share(1, mpz_class(1) << (top.size() - 1));
      auto& entries = out.attention.mu[{s, r}];
      for_each_subset_between(single, top, [&](Menu d) { entries.emplace_back(d, share); });
    }
  }
  return out;
}

Rational random_reference_choice_prob(const RandomReferenceRule& rule, Alt x, Menu s) {
  const auto& eta = rule.eta.at(s);
  const LinearOrder& order = rule.attention.preference;
  Rational out = 0;
  for (Alt r : s) {
    if (sgn(eta[idx(r)]) == 0) continue;
    Rational p = 0;
    for (const auto& [d, mu] : rule.attention.mu.at({s, r})) {
      if (order.best(d) == x) p += mu;
    }
    out += eta[idx(r)] * p;
  }
  return out;
}

}  // namespace refchoice
