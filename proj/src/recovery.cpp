#include "refchoice/recovery.hpp"

#include <algorithm>
#include <stdexcept>

namespace refchoice {

namespace {

std::size_t idx(Alt a) { return static_cast<std::size_t>(a); }
std::size_t idx(Menu m) { return static_cast<std::size_t>(m.bits()); }

std::string problem_text(const Universe& u, Menu s, Alt r) {
  return "(" + u.describe(s) + ", " + u.label(r) + ")";
}

void require_complete(const ChoiceDataset& data) {
  if (!data.is_complete()) throw RecoveryError("reconstruction needs every choice problem; the dataset is partial");
}

void require(const Verdict& v) {
  if (!v.passed()) throw AxiomViolation(v);
}

void require_rdram(const ChoiceDataset& data) {
  require(check_ncc(data));
  require(check_sqa(data));
  require(check_nre(data));
}

void require_round_trip(const AttentionModel& model, const ChoiceDataset& data, const char* what) {
  const ChoiceDataset back = simulate_dataset(model);
  for (const auto& [s, r] : data.problems()) {
    if (*back.row(s, r) != *data.row(s, r)) {
      throw RecoveryError(std::string(what) + " reconstruction does not reproduce problem " +
                          problem_text(data.universe(), s, r));
    }
  }
}

Rational signed_add(int sign, const Rational& acc, const Rational& term) {
  return sign > 0 ? Rational(acc + term) : Rational(acc - term);
}

}  // namespace

AxiomViolation::AxiomViolation(Verdict verdict)
    : Error(verdict.axiom + " " + std::string(to_string(verdict.status)) +
            (verdict.witness ? ": " + verdict.witness->message : std::string())),
      verdict_(std::move(verdict)) {}

std::map<Menu, Rational> mobius_invert(const std::map<Menu, Rational>& f, Menu anchor, Menu top) {
  if (!anchor.subset_of(top)) throw std::invalid_argument("mobius_invert: anchor is not below top");
  std::map<Menu, Rational> g;
  for_each_subset_between(anchor, top, [&](Menu a) {
    Rational value = 0;
    for_each_subset_between(anchor, a, [&](Menu b) {
      auto it = f.find(b);
      if (it == f.end()) throw std::invalid_argument("mobius_invert: missing interval entry");
      value = signed_add(mobius_sign(b, a), value, it->second);
    });
    g.emplace(a, std::move(value));
  });
  return g;
}

std::map<Menu, Rational> mobius_sum(const std::map<Menu, Rational>& g, Menu anchor, Menu top) {
  if (!anchor.subset_of(top)) throw std::invalid_argument("mobius_sum: anchor is not below top");
  std::map<Menu, Rational> f;
  for_each_subset_between(anchor, top, [&](Menu a) {
    Rational value = 0;
    for_each_subset_between(anchor, a, [&](Menu b) {
      auto it = g.find(b);
      if (it == g.end()) throw std::invalid_argument("mobius_sum: missing interval entry");
      value += it->second;
    });
    f.emplace(a, std::move(value));
  });
  return f;
}

LinearOrder reveal_preference(const ChoiceDataset& data) {
  const Universe& u = data.universe();
  const int n = u.size();
  std::vector<int> beaten(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<bool>> above(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (Alt x = 0; x < n; ++x) {
    for (Alt y = x + 1; y < n; ++y) {
      const Menu pair = Menu::singleton(x).with(y);
      if (!data.has(pair, x) || !data.has(pair, y)) {
        throw RecoveryError("binary problems for " + u.describe(pair) +
                            " are missing; only the partial revealed relation is available");
      }
      const bool x_over_y = sgn(data.p(y, x, pair)) > 0;
      const bool y_over_x = sgn(data.p(x, y, pair)) > 0;
      if (x_over_y && y_over_x) {
        throw RecoveryError("revealed relation is not antisymmetric on " + u.describe(pair) + " (NCC fails)");
      }
      if (!x_over_y && !y_over_x) {
        throw RecoveryError("revealed relation is incomplete on " + u.describe(pair) + " (SQA fails)");
      }
      const Alt hi = x_over_y ? x : y;
      const Alt lo = x_over_y ? y : x;
      above[idx(hi)][idx(lo)] = true;
      ++beaten[idx(hi)];
    }
  }
  std::vector<Alt> ranking(static_cast<std::size_t>(n));
  for (Alt a = 0; a < n; ++a) ranking[idx(a)] = a;
  std::stable_sort(ranking.begin(), ranking.end(), [&](Alt a, Alt b) { return beaten[idx(a)] > beaten[idx(b)]; });
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    for (std::size_t j = i + 1; j < ranking.size(); ++j) {
      if (!above[idx(ranking[i])][idx(ranking[j])]) {
        throw RecoveryError("revealed relation is intransitive around " + u.label(ranking[i]) + " and " +
                            u.label(ranking[j]) + " (NCC fails)");
      }
    }
  }
  return LinearOrder(std::move(ranking));
}

GeneralAttention build_rdram(const ChoiceDataset& data) {
  require_complete(data);
  require_rdram(data);
  const Universe& u = data.universe();
  const LinearOrder pref = reveal_preference(data);
  GeneralAttention out{u, pref, {}, true};
  for (const auto& [s, r] : data.problems()) {
    auto& entries = out.mu[{s, r}];
    for_each_subset_between(Menu::singleton(r), s, [&](Menu d) {
      const Alt x = pref.best(d);
      const Menu top = pref.lower_contour(x) & s;
      const int free = top.size() - Menu::singleton(r).with(x).size();
      entries.emplace_back(d, data.p(r, x, s) / Rational(mpz_class(1) << free));
    });
  }
  validate_model(out);
  require_round_trip(out, data, "RD-RAM");
  return out;
}

IraRecovery build_ira(const ChoiceDataset& data) {
  require_complete(data);
  require_rdram(data);
  require(check_ida(data));
  require(check_rida(data));
  const Universe& u = data.universe();
  const int n = u.size();
  const LinearOrder pref = reveal_preference(data);
  const RevealedDominance dom(data);
  IraRecovery out{IraModel{u, pref, std::vector<std::vector<Rational>>(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)))},
                  MobiusTable{std::vector<MobiusTable::PerReference>(static_cast<std::size_t>(n))}};
  for (Alt r = 0; r < n; ++r) {
    auto& audit = out.table.references[idx(r)];
    audit.dominators = dom.dominators(r);
    for (Alt x = 0; x < n; ++x) {
      if (x == r) {
        out.model.gamma[idx(r)][idx(x)] = 1;
        continue;
      }
      const Menu pair = Menu::singleton(r).with(x);
      out.model.gamma[idx(r)][idx(x)] = std::max(data.p(r, x, pair), data.p(x, r, pair));
    }
    // κ(S) = 1 - p_r(x,S) scales choices when the dominant x leaves S.
    for (const auto& [s, ref] : data.problems()) {
      if (ref != r) continue;
      const Alt x = pref.best(s);
      if (x == r) continue;
      audit.kappa.emplace(std::make_pair(s, x), 1 - data.p(r, x, s));
    }
  }
  validate_model(out.model);
  require_round_trip(out.model, data, "IRA");
  return out;
}

LraRecovery build_lra(const ChoiceDataset& data) {
  require_complete(data);
  require_rdram(data);
  require(check_rida(data));
  require(check_dora(data, {}));
  const Universe& u = data.universe();
  const int n = u.size();
  const Menu all = u.all();
  const LinearOrder pref = reveal_preference(data);
  const RevealedDominance dom(data);
  const std::size_t menus = std::size_t{1} << n;
  LraRecovery out{LraModel{u, pref, std::vector<std::vector<Rational>>(static_cast<std::size_t>(n), std::vector<Rational>(menus))},
                  MobiusTable{std::vector<MobiusTable::PerReference>(static_cast<std::size_t>(n))}};

  for (Alt r = 0; r < n; ++r) {
    auto& audit = out.table.references[idx(r)];
    const Menu pr = dom.dominators(r);
    const Menu dr = dom.dominant_menu(r);
    audit.dominators = pr;
    auto& weights = out.model.weights[idx(r)];
    const Menu single = Menu::singleton(r);

    if (pr.empty()) {
      // r is never displaced: every weight reproduces p_r(r,S) = 1.
      const Rational share(1, mpz_class(1) << (n - 1));
      for_each_subset_between(single, all, [&](Menu d) {
        weights[idx(d)] = share;
        audit.lambda.emplace(d, share);
      });
      continue;
    }

    std::vector<Rational> lambda(menus);
    std::vector<bool> known(menus, false);
    auto alpha = [&](Menu t, Menu s) {
      auto key = std::make_pair(t, s);
      auto it = audit.alpha_t.find(key);
      if (it == audit.alpha_t.end()) it = audit.alpha_t.emplace(key, reference_alpha(data, r, t, s)).first;
      return it->second;
    };
    // Σ_{r ∈ D ⊊ T} λ(D ∪ A) for a dominator block A.
    auto lower_sum = [&](Menu t, Menu a) {
      Rational sum = 0;
      for_each_subset_between(single, t, [&](Menu d) {
        if (d != t) sum += lambda[idx(d | a)];
      });
      return sum;
    };

    // Dominant sets T (r ∈ T ⊆ D_r) by size; each fixes λ on T ∪ A for A ⊆ P_r.
    std::vector<Menu> dominant = subsets_between(single, dr);
    std::stable_sort(dominant.begin(), dominant.end(), [](Menu a, Menu b) { return a.size() < b.size(); });
    for (Menu t : dominant) {
      if (t == single) {
        lambda[idx(t)] = 1;
      } else {
        const Rational below = lower_sum(t, Menu());
        bool any = false;
        Rational bound;
        for_each_subset_between(Menu(), pr, [&](Menu a) {
          if (a.empty()) return;
          const Rational need = lower_sum(t, a) / alpha(t, t | a) - below;
          if (!any || need > bound) bound = need;
          any = true;
        });
        const Rational floor = any && bound > 1 ? bound : Rational(1);
        lambda[idx(t)] = 2 * floor;
        audit.slack.emplace_back(t, bound);
      }
      known[idx(t)] = true;
      const Rational lambda_tt = lambda[idx(t)] + lower_sum(t, Menu());
      audit.lambda_t.emplace(std::make_pair(t, t), lambda_tt);
      for_each_subset_between(Menu(), pr, [&](Menu a) {
        if (a.empty()) return;
        const Menu s = t | a;
        const Rational lambda_ts = lambda_tt * alpha(t, s);
        audit.lambda_t.emplace(std::make_pair(t, s), lambda_ts);
        lambda[idx(s)] = lambda_ts - lower_sum(t, a);
        known[idx(s)] = true;
        if (sgn(lambda[idx(s)]) <= 0) {
          throw RecoveryError("non-positive Luce weight for " + u.describe(s) + " under reference " + u.label(r));
        }
      });
    }

    // p_r(r,S) = λ^T(T) / Σ_{T⊆D⊆S} λ^T(D) with T = S ∖ P_r.
    for_each_subset_between(single, all, [&](Menu s) {
      const Menu t = s - pr;
      Rational denom = 0;
      for_each_subset_between(t, s, [&](Menu d) { denom += audit.lambda_t.at({t, d}); });
      if (audit.lambda_t.at({t, t}) / denom != data.p(r, r, s)) {
        throw RecoveryError("Luce weights do not reproduce p_" + u.label(r) + "(" + u.label(r) + ", " +
                            u.describe(s) + ")");
      }
    });

    Rational total = 0;
    for_each_subset_between(single, all, [&](Menu d) { total += lambda[idx(d)]; });
    for_each_subset_between(single, all, [&](Menu d) {
      audit.lambda.emplace(d, lambda[idx(d)]);
      weights[idx(d)] = lambda[idx(d)] / total;
    });
  }
  validate_model(out.model);
  require_round_trip(out.model, data, "LRA");
  return out;
}

CraRecovery build_cra(const ChoiceDataset& data) {
  require_complete(data);
  require_rdram(data);
  require(check_ida(data));
  require(check_dpcra(data, {}));
  const Universe& u = data.universe();
  const int n = u.size();
  const Menu all = u.all();
  const LinearOrder pref = reveal_preference(data);
  const RevealedDominance dom(data);
  const std::size_t menus = std::size_t{1} << n;
  CraRecovery out{CraModel{u, pref, std::vector<std::vector<Rational>>(static_cast<std::size_t>(n), std::vector<Rational>(menus))},
                  MobiusTable{std::vector<MobiusTable::PerReference>(static_cast<std::size_t>(n))}};

  for (Alt r = 0; r < n; ++r) {
    auto& audit = out.table.references[idx(r)];
    const Menu dr = dom.dominant_menu(r);
    audit.dominators = dom.dominators(r);
    for_each_subset_between(dr, all, [&](Menu s) {
      const Rational value = reference_lambda(data, r, dr, s);
      if (sgn(value) <= 0) {
        throw RecoveryError("non-positive constant-attention weight for " + u.describe(s) + " under reference " +
                            u.label(r));
      }
      audit.lambda.emplace(s, value);
    });
    // p_r(r,S) = Σ_{D_r ⊆ D ⊆ (X∖S) ∪ D_r} λ_r(D) for every S ⊇ D_r.
    for_each_subset_between(dr, all, [&](Menu s) {
      Rational sum = 0;
      for_each_subset_between(dr, (all - s) | dr, [&](Menu d) { sum += audit.lambda.at(d); });
      if (sum != data.p(r, r, s)) {
        throw RecoveryError("constant-attention weights do not reproduce p_" + u.label(r) + "(" + u.label(r) + ", " +
                            u.describe(s) + ")");
      }
    });
    // Spread λ_r(S) uniformly over {D : (S ∖ D_r) ∪ r ⊆ D ⊆ S}.
    const Rational spread(1, mpz_class(1) << (dr.size() - 1));
    auto& weights = out.model.weights[idx(r)];
    for (const auto& [s, value] : audit.lambda) {
      for_each_subset_between((s - dr).with(r), s, [&](Menu d) { weights[idx(d)] = value * spread; });
    }
  }
  validate_model(out.model);
  require_round_trip(out.model, data, "CRA");
  return out;
}

IraRecovery ira_from_lra_cra(const GeneralAttention& mu) {
  validate_model(mu);
  const Universe& u = mu.universe;
  const int n = u.size();
  const Menu all = u.all();
  for (Menu::Bits bits = 1; bits <= all.bits(); ++bits) {
    const Menu s(bits);
    for (Alt r : s) {
      const Menu single = Menu::singleton(r);
      // Ratios inside S must match those inside D ∪ D'.
      for_each_subset_between(single, s, [&](Menu d) {
        for_each_subset_between(single, s, [&](Menu d2) {
          if (d2 <= d) return;
          const Menu both = d | d2;
          if (mu.attention(r, d, s) * mu.attention(r, d2, both) != mu.attention(r, d2, s) * mu.attention(r, d, both)) {
            throw ValidationError("consideration-set ratios differ between " + u.describe(s) + " and " +
                                  u.describe(both) + " for reference " + u.label(r) + " (IIA property)");
          }
        });
      });
      // Marginal attention to x must not depend on the menu.
      for (Alt x : s.without(r)) {
        Rational marginal = 0;
        for_each_subset_between(single.with(x), s, [&](Menu d) { marginal += mu.attention(r, d, s); });
        const Menu pair = single.with(x);
        if (marginal != mu.attention(r, pair, pair)) {
          throw ValidationError("attention to " + u.label(x) + " differs between " + u.describe(s) + " and " +
                                u.describe(pair) + " for reference " + u.label(r) + " (menu-independent marginals)");
        }
      }
    }
  }
  IraRecovery out{IraModel{u, mu.preference, std::vector<std::vector<Rational>>(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)))},
                  MobiusTable{std::vector<MobiusTable::PerReference>(static_cast<std::size_t>(n))}};
  for (Alt r = 0; r < n; ++r) {
    for (Alt x = 0; x < n; ++x) {
      const Menu pair = Menu::singleton(r).with(x);
      out.model.gamma[idx(r)][idx(x)] = x == r ? Rational(1) : mu.attention(r, pair, pair);
    }
  }
  validate_model(out.model);
  const AttentionModel ira = out.model;
  for (const auto& [problem, entries] : mu.mu) {
    for_each_subset_between(Menu::singleton(problem.reference), problem.menu, [&](Menu d) {
      if (attention_prob(ira, problem.reference, d, problem.menu) != mu.attention(problem.reference, d, problem.menu)) {
        throw ValidationError("independent attention does not reproduce the attention to " + u.describe(d) + " in " +
                              problem_text(u, problem.menu, problem.reference));
      }
    });
  }
  return out;
}

}  // namespace refchoice
