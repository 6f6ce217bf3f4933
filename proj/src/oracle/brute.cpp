#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "refchoice/oracle.hpp"

namespace refchoice::oracle {

namespace {

std::size_t idx(Alt a) { return static_cast<std::size_t>(a); }

bool has(Menu::Bits set, Alt a) { return (set >> a) & 1U; }

// Best member of a non-empty set by scanning the ranking from the top.
Alt top_of(const LinearOrder& order, Menu::Bits set) {
  for (Alt a : order.ranking()) {
    if (has(set, a)) return a;
  }
  throw std::logic_error("empty consideration set");
}

// μ_r(D,S) straight from each model's defining equation.
Rational brute_attention(const AttentionModel& model, Menu::Bits d, Menu::Bits s, Alt r) {
  const int n = universe_of(model).size();
  const Menu::Bits all = (Menu::Bits{1} << n) - 1;
  auto independent = [&](auto gamma_of) {
    Rational v = 1;
    for (Alt y = 0; y < n; ++y) {
      if (y == r || !has(s, y)) continue;
      v *= has(d, y) ? gamma_of(y) : Rational(1 - gamma_of(y));
    }
    return v;
  };
  auto luce = [&](const std::vector<Rational>& w) {
    Rational z = 0;
    for (Menu::Bits e = 1; e <= all; ++e) {
      if ((e & ~s) == 0 && has(e, r)) z += w[e];
    }
    return Rational(w[d] / z);
  };
  auto constant = [&](auto weight_of) {
    Rational v = 0;
    for (Menu::Bits e = 1; e <= all; ++e) {
      if (has(e, r) && (e & s) == d) v += weight_of(e);
    }
    return v;
  };
  if (const auto* g = std::get_if<GeneralAttention>(&model)) return g->attention(r, Menu(d), Menu(s));
  if (const auto* m = std::get_if<IraModel>(&model)) {
    return independent([&](Alt y) { return m->gamma[idx(r)][idx(y)]; });
  }
  if (const auto* m = std::get_if<LraModel>(&model)) return luce(m->weights[idx(r)]);
  if (const auto* m = std::get_if<CraModel>(&model)) {
    return constant([&](Menu::Bits e) { return m->weights[idx(r)][e]; });
  }
  const auto& m = std::get<RefIndependentModel>(model);
  switch (m.kind) {
    case RefIndependentKind::Ira:
      return independent([&](Alt y) { return m.gamma[idx(y)]; });
    case RefIndependentKind::Lra:
      return luce(m.weights);
    case RefIndependentKind::Cra:
      return constant([&](Menu::Bits e) { return Rational(m.weights[e] + m.weights[e & ~(Menu::Bits{1} << r)]); });
  }
  throw std::logic_error("unknown model");
}

}  // namespace

Rational brute_choice_prob(const AttentionModel& model, Alt x, Menu s, Alt r) {
  const LinearOrder& order = preference_of(model);
  Rational out = 0;
  for (Menu::Bits d = 1; d <= s.bits(); ++d) {
    if ((d & ~s.bits()) != 0 || !has(d, r)) continue;
    if (top_of(order, d) == x) out += brute_attention(model, d, s.bits(), r);
  }
  return out;
}

ChoiceDataset brute_dataset(const AttentionModel& model) {
  const Universe& u = universe_of(model);
  ChoiceDataset data(u, true);
  for (Menu::Bits bits = 1; bits < (Menu::Bits{1} << u.size()); ++bits) {
    const Menu s(bits);
    for (Alt r : s) {
      std::vector<Rational> row(static_cast<std::size_t>(u.size()));
      for (Alt x : s) row[idx(x)] = brute_choice_prob(model, x, s, r);
      data.add({s, r}, std::move(row));
    }
  }
  return data;
}

std::vector<std::pair<std::vector<Alt>, Rational>> brute_order_weights(const CraModel& model, Alt r) {
  const int n = model.universe.size();
  const auto& rank = model.preference;
  std::vector<Alt> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::pair<std::vector<Alt>, Rational>> out;
  do {
    Rational weight = 0;
    for (Menu::Bits d = 1; d < (Menu::Bits{1} << n); ++d) {
      if (!has(d, r) || sgn(model.weights[idx(r)][d]) == 0) continue;
      // The ranking must list D first, each block in preference order.
      const auto k = static_cast<std::size_t>(std::popcount(d));
      bool match = true;
      for (std::size_t i = 0; i < order.size() && match; ++i) {
        if (has(d, order[i]) != (i < k)) match = false;
        if (match && i + 1 < order.size() && (i + 1 != k) && rank.rank(order[i]) > rank.rank(order[i + 1])) match = false;
      }
      if (match) weight += model.weights[idx(r)][d];
    }
    if (sgn(weight) != 0) out.emplace_back(order, weight);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Rational brute_order_choice_prob(const std::vector<std::pair<std::vector<Alt>, Rational>>& weights, Alt x, Menu s) {
  Rational out = 0;
  for (const auto& [order, weight] : weights) {
    auto it = std::find_if(order.begin(), order.end(), [&](Alt a) { return s.contains(a); });
    if (it != order.end() && *it == x) out += weight;
  }
  return out;
}

}  // namespace refchoice::oracle
