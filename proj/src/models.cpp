#include "refchoice/models.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "refchoice/errors.hpp"

namespace refchoice {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Rational kZero = 0;

std::size_t idx(Alt a) { return static_cast<std::size_t>(a); }
std::size_t idx(Menu m) { return static_cast<std::size_t>(m.bits()); }

void require_problem(Alt r, Menu d, Menu s) {
  if (!d.contains(r) || !d.subset_of(s)) {
    throw std::invalid_argument("attention_prob requires r ∈ D ⊆ S");
  }
}

void check_common(const Universe& u, const LinearOrder& pref) {
  if (pref.size() != u.size()) throw ValidationError("preference does not rank the whole universe");
}

void check_weight_table(const Universe& u, const std::vector<Rational>& w, Alt r, bool require_positive,
                        const char* what) {
  const std::size_t expected = std::size_t{1} << u.size();
  if (w.size() != expected) throw ValidationError(std::string(what) + " weights have the wrong length");
  Rational total = 0;
  for (std::size_t bits = 0; bits < expected; ++bits) {
    const Menu d(static_cast<Menu::Bits>(bits));
    const bool admissible = r < 0 ? !d.empty() : d.contains(r);
    if (!admissible) {
      if (sgn(w[bits]) != 0) throw ValidationError(std::string(what) + " weight on an inadmissible set " + u.describe(d));
      continue;
    }
    if (sgn(w[bits]) < 0 || (require_positive && sgn(w[bits]) == 0)) {
      throw ValidationError(std::string(what) + " weight of " + u.describe(d) + " must be positive");
    }
    total += w[bits];
  }
  if (total != 1) throw ValidationError(std::string(what) + " weights sum to " + format_rational(total) + ", not 1");
}

// Σ_{r ∈ D' ⊆ S} w(D').
Rational luce_normalizer(const std::vector<Rational>& w, Alt r, Menu s) {
  Rational z = 0;
  for_each_subset_between(Menu::singleton(r), s, [&](Menu d) { z += w[idx(d)]; });
  return z;
}

Rational ira_attention(const std::vector<Rational>& gamma, Alt r, Menu d, Menu s) {
  Rational out = 1;
  for (Alt x : d.without(r)) out *= gamma[idx(x)];
  for (Alt y : s - d) out *= 1 - gamma[idx(y)];
  return out;
}

// p_r(x,S) when each y ≠ r is noticed independently with probability gamma[y]:
// x wins iff it is noticed and everything in S better than x is missed.
Rational ira_choice(const std::vector<Rational>& gamma, const LinearOrder& pref, Alt x, Menu s, Alt r) {
  if (x != r && !pref.prefers(x, r)) return 0;
  Rational out = x == r ? Rational(1) : gamma[idx(x)];
  for (Alt y : s & pref.strict_upper_contour(x)) out *= 1 - gamma[idx(y)];
  return out;
}

Rational cra_attention(const std::vector<Rational>& w, Menu all, Menu d, Menu s) {
  Rational out = 0;
  for_each_subset_between(d, d | (all - s), [&](Menu full) { out += w[idx(full)]; });
  return out;
}

}  // namespace

const Rational& GeneralAttention::attention(Alt r, Menu d, Menu s) const {
  auto it = mu.find({s, r});
  if (it == mu.end()) return kZero;
  auto pos = std::lower_bound(it->second.begin(), it->second.end(), d,
                              [](const auto& entry, Menu key) { return entry.first < key; });
  if (pos == it->second.end() || pos->first != d) return kZero;
  return pos->second;
}

bool CraModel::full_support() const {
  for (Alt r = 0; r < universe.size(); ++r) {
    bool ok = true;
    for_each_subset_between(Menu::singleton(r), universe.all(), [&](Menu d) {
      if (sgn(weights[idx(r)][idx(d)]) <= 0) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

const Universe& universe_of(const AttentionModel& model) {
  return std::visit([](const auto& m) -> const Universe& { return m.universe; }, model);
}

const LinearOrder& preference_of(const AttentionModel& model) {
  return std::visit([](const auto& m) -> const LinearOrder& { return m.preference; }, model);
}

const char* kind_name(const AttentionModel& model) {
  return std::visit(overloaded{
                        [](const GeneralAttention&) { return "general"; },
                        [](const IraModel&) { return "ira"; },
                        [](const LraModel&) { return "lra"; },
                        [](const CraModel&) { return "cra"; },
                        [](const RefIndependentModel& m) {
                          switch (m.kind) {
                            case RefIndependentKind::Ira:
                              return "ri-ira";
                            case RefIndependentKind::Lra:
                              return "ri-lra";
                            case RefIndependentKind::Cra:
                              return "ri-cra";
                          }
                          return "ri-ira";
                        },
                    },
                    model);
}

void validate_model(const AttentionModel& model) {
  std::visit(overloaded{
                 [](const GeneralAttention& m) {
                   check_common(m.universe, m.preference);
                   const Menu all = m.universe.all();
                   for (Menu::Bits bits = 1; bits <= all.bits(); ++bits) {
                     const Menu s(bits);
                     for (Alt r : s) {
                       auto it = m.mu.find({s, r});
                       if (it == m.mu.end()) {
                         throw ValidationError("attention rule missing problem (" + m.universe.describe(s) + ", " +
                                               m.universe.label(r) + ")");
                       }
                       Rational total = 0;
                       for (const auto& [d, value] : it->second) {
                         if (!d.contains(r) || !d.subset_of(s)) {
                           throw ValidationError("attention on inadmissible set " + m.universe.describe(d));
                         }
                         if (!is_probability(value)) throw ValidationError("attention probability outside [0,1]");
                         total += value;
                       }
                       if (total != 1) throw ValidationError("attention for (" + m.universe.describe(s) + ", " +
                                                             m.universe.label(r) + ") sums to " + format_rational(total));
                       if (m.full_support) {
                         for_each_subset_between(Menu::singleton(r), s, [&](Menu d) {
                           if (sgn(m.attention(r, d, s)) <= 0) {
                             throw ValidationError("full-support attention rule gives zero to " +
                                                   m.universe.describe(d) + " in " + m.universe.describe(s));
                           }
                         });
                       }
                     }
                   }
                 },
                 [](const IraModel& m) {
                   check_common(m.universe, m.preference);
                   const auto n = static_cast<std::size_t>(m.universe.size());
                   if (m.gamma.size() != n) throw ValidationError("gamma table has the wrong size");
                   for (std::size_t r = 0; r < n; ++r) {
                     if (m.gamma[r].size() != n) throw ValidationError("gamma table has the wrong size");
                     for (std::size_t x = 0; x < n; ++x) {
                       const Rational& g = m.gamma[r][x];
                       if (r == x ? g != 1 : (sgn(g) <= 0 || g >= 1)) {
                         throw ValidationError("gamma_" + m.universe.label(static_cast<Alt>(r)) + "(" +
                                               m.universe.label(static_cast<Alt>(x)) + ") = " + format_rational(g) +
                                               " is out of range");
                       }
                     }
                   }
                 },
                 [](const LraModel& m) {
                   check_common(m.universe, m.preference);
                   if (m.weights.size() != static_cast<std::size_t>(m.universe.size())) {
                     throw ValidationError("LRA needs one weight table per reference");
                   }
                   for (Alt r = 0; r < m.universe.size(); ++r) check_weight_table(m.universe, m.weights[idx(r)], r, true, "LRA");
                 },
                 [](const CraModel& m) {
                   check_common(m.universe, m.preference);
                   if (m.weights.size() != static_cast<std::size_t>(m.universe.size())) {
                     throw ValidationError("CRA needs one weight table per reference");
                   }
                   for (Alt r = 0; r < m.universe.size(); ++r) check_weight_table(m.universe, m.weights[idx(r)], r, false, "CRA");
                 },
                 [](const RefIndependentModel& m) {
                   check_common(m.universe, m.preference);
                   if (m.kind == RefIndependentKind::Ira) {
                     if (m.gamma.size() != static_cast<std::size_t>(m.universe.size())) {
                       throw ValidationError("gamma has the wrong size");
                     }
                     for (const auto& g : m.gamma) {
                       if (sgn(g) <= 0 || g >= 1) throw ValidationError("reference-independent gamma must lie in (0,1)");
                     }
                   } else {
                     check_weight_table(m.universe, m.weights, -1, true, "reference-independent");
                   }
                 },
             },
             model);
}

Rational attention_prob(const AttentionModel& model, Alt r, Menu d, Menu s) {
  require_problem(r, d, s);
  return std::visit(overloaded{
                        [&](const GeneralAttention& m) { return Rational(m.attention(r, d, s)); },
                        [&](const IraModel& m) { return ira_attention(m.gamma[idx(r)], r, d, s); },
                        [&](const LraModel& m) {
                          const auto& w = m.weights[idx(r)];
                          return Rational(w[idx(d)] / luce_normalizer(w, r, s));
                        },
                        [&](const CraModel& m) { return cra_attention(m.weights[idx(r)], m.universe.all(), d, s); },
                        [&](const RefIndependentModel& m) -> Rational {
                          switch (m.kind) {
                            case RefIndependentKind::Ira:
                              return ira_attention(m.gamma, r, d, s);
                            case RefIndependentKind::Lra:
                              return m.weights[idx(d)] / luce_normalizer(m.weights, r, s);
                            case RefIndependentKind::Cra: {
                              Rational out = 0;
                              const Menu all = m.universe.all();
                              for_each_subset_between(d, d | (all - s), [&](Menu full) {
                                out += m.weights[idx(full)] + m.weights[idx(full.without(r))];
                              });
                              return out;
                            }
                          }
                          return 0;
                        },
                    },
                    model);
}

Rational choice_prob(const AttentionModel& model, Alt x, Menu s, Alt r) {
  if (!s.contains(x) || !s.contains(r)) throw std::invalid_argument("choice_prob requires x, r ∈ S");
  const LinearOrder& pref = preference_of(model);
  if (x != r && !pref.prefers(x, r)) return 0;
  // Consideration sets D ⊆ S with r ∈ D whose best element is x are exactly
  // {r,x} ⊆ D ⊆ S ∩ lower_contour(x).
  const Menu low = Menu::singleton(r).with(x);
  const Menu high = s & pref.lower_contour(x);
  return std::visit(overloaded{
                        [&](const GeneralAttention& m) {
                          Rational out = 0;
                          for_each_subset_between(low, high, [&](Menu d) { out += m.attention(r, d, s); });
                          return out;
                        },
                        [&](const IraModel& m) { return ira_choice(m.gamma[idx(r)], pref, x, s, r); },
                        [&](const LraModel& m) {
                          const auto& w = m.weights[idx(r)];
                          Rational num = 0;
                          for_each_subset_between(low, high, [&](Menu d) { num += w[idx(d)]; });
                          return Rational(num / luce_normalizer(w, r, s));
                        },
                        [&](const CraModel& m) {
                          // Sum π'_r over full sets D' whose trace on S has x on top.
                          const auto& w = m.weights[idx(r)];
                          const Menu outside = m.universe.all() - s;
                          Rational out = 0;
                          for_each_subset_between(low, high | outside, [&](Menu full) { out += w[idx(full)]; });
                          return out;
                        },
                        [&](const RefIndependentModel& m) -> Rational {
                          switch (m.kind) {
                            case RefIndependentKind::Ira: {
                              Rational out = x == r ? Rational(1) : m.gamma[idx(x)];
                              for (Alt y : s & pref.strict_upper_contour(x)) out *= 1 - m.gamma[idx(y)];
                              return out;
                            }
                            case RefIndependentKind::Lra: {
                              Rational num = 0;
                              for_each_subset_between(low, high, [&](Menu d) { num += m.weights[idx(d)]; });
                              return num / luce_normalizer(m.weights, r, s);
                            }
                            case RefIndependentKind::Cra: {
                              const Menu outside = m.universe.all() - s;
                              Rational out = 0;
                              for_each_subset_between(low, high | outside, [&](Menu full) {
                                out += m.weights[idx(full)] + m.weights[idx(full.without(r))];
                              });
                              return out;
                            }
                          }
                          return 0;
                        },
                    },
                    model);
}

ChoiceDataset simulate_dataset(const AttentionModel& model) {
  validate_model(model);
  const Universe& u = universe_of(model);
  ChoiceDataset data(u, true);
  for (Menu::Bits bits = 1; bits <= u.all().bits(); ++bits) {
    const Menu s(bits);
    for (Alt r : s) {
      std::vector<Rational> row(static_cast<std::size_t>(u.size()));
      for (Alt x : s) row[idx(x)] = choice_prob(model, x, s, r);
      data.add({s, r}, std::move(row));
    }
  }
  return data;
}

namespace {

struct Outcome {
  Rational cumulative;
  Alt best;
};

std::vector<Outcome> outcome_table(const AttentionModel& model, const ChoiceProblem& problem) {
  const LinearOrder& pref = preference_of(model);
  std::vector<Outcome> table;
  Rational cumulative = 0;
  for_each_subset_between(Menu::singleton(problem.reference), problem.menu, [&](Menu d) {
    Rational mu = attention_prob(model, problem.reference, d, problem.menu);
    if (sgn(mu) == 0) return;
    cumulative += mu;
    table.push_back({cumulative, pref.best(d)});
  });
  return table;
}

Rational unit_draw(std::mt19937_64& gen) {
  const std::uint64_t k = gen() >> 11;
  Rational u(mpz_class(static_cast<unsigned long>(k)), mpz_class(1) << 53);
  u.canonicalize();
  return u;
}

Alt pick(const std::vector<Outcome>& table, const Rational& u) {
  auto it = std::upper_bound(table.begin(), table.end(), u,
                             [](const Rational& value, const Outcome& o) { return value < o.cumulative; });
  if (it == table.end()) --it;
  return it->best;
}

}  // namespace

Alt sample_choice(const AttentionModel& model, const ChoiceProblem& problem, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return pick(outcome_table(model, problem), unit_draw(gen));
}

std::vector<std::uint64_t> sample_counts(const AttentionModel& model, const ChoiceProblem& problem,
                                         std::uint64_t seed, std::uint64_t draws) {
  const auto table = outcome_table(model, problem);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(universe_of(model).size()), 0);
  std::mt19937_64 gen(seed);
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[idx(pick(table, unit_draw(gen)))];
  return counts;
}

AttentionModel to_reference_dependent(const RefIndependentModel& m) {
  const auto n = static_cast<std::size_t>(m.universe.size());
  const std::size_t menus = std::size_t{1} << n;
  switch (m.kind) {
    case RefIndependentKind::Ira: {
      IraModel out{m.universe, m.preference, std::vector<std::vector<Rational>>(n, m.gamma)};
      for (std::size_t r = 0; r < n; ++r) out.gamma[r][r] = 1;
      return out;
    }
    case RefIndependentKind::Lra: {
      LraModel out{m.universe, m.preference, std::vector<std::vector<Rational>>(n, std::vector<Rational>(menus))};
      for (Alt r = 0; r < m.universe.size(); ++r) {
        const Rational z = luce_normalizer(m.weights, r, m.universe.all());
        for_each_subset_between(Menu::singleton(r), m.universe.all(),
                                [&](Menu d) { out.weights[idx(r)][idx(d)] = m.weights[idx(d)] / z; });
      }
      return out;
    }
    case RefIndependentKind::Cra: {
      CraModel out{m.universe, m.preference, std::vector<std::vector<Rational>>(n, std::vector<Rational>(menus))};
      for (Alt r = 0; r < m.universe.size(); ++r) {
        for_each_subset_between(Menu::singleton(r), m.universe.all(), [&](Menu d) {
          out.weights[idx(r)][idx(d)] = m.weights[idx(d)] + m.weights[idx(d.without(r))];
        });
      }
      return out;
    }
  }
  throw std::logic_error("unknown reference-independent kind");
}

GeneralAttention attention_table(const AttentionModel& model) {
  if (const auto* g = std::get_if<GeneralAttention>(&model)) return *g;
  const Universe& u = universe_of(model);
  GeneralAttention out{u, preference_of(model), {}, true};
  if (const auto* cra = std::get_if<CraModel>(&model)) out.full_support = cra->full_support();
  for (Menu::Bits bits = 1; bits <= u.all().bits(); ++bits) {
    const Menu s(bits);
    for (Alt r : s) {
      auto& entries = out.mu[{s, r}];
      for_each_subset_between(Menu::singleton(r), s, [&](Menu d) {
        Rational value = attention_prob(model, r, d, s);
        if (sgn(value) != 0) entries.emplace_back(d, std::move(value));
      });
    }
  }
  return out;
}

}  // namespace refchoice
