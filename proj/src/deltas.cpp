#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "check_support.hpp"
#include "refchoice/axioms.hpp"
#include "refchoice/errors.hpp"

namespace refchoice {

namespace detail {

std::string describe_problem(const Universe& u, Menu s, Alt r) {
  return "(" + u.describe(s) + ", " + u.label(r) + ")";
}

namespace {

constexpr int kMaxOddsTraces = 4;

std::vector<DeltaPattern> build_odds_patterns(int k) {
  // Families are subsets of the 2^k - 1 non-empty traces. Peeling the lowest
  // trace V gives c_F(B) = c_F'(B) - Σ_{A ∪ V = B} c_F'(A).
  const int traces = (1 << k) - 1;
  const std::size_t cells = std::size_t{1} << k;
  const std::size_t families = std::size_t{1} << traces;
  std::vector<int> table(families * cells, 0);
  table[0] = 1;
  std::vector<DeltaPattern> out;
  std::map<std::vector<int>, std::size_t> seen;
  for (std::size_t f = 1; f < families; ++f) {
    const int low = std::countr_zero(f);
    const auto trace = static_cast<Menu::Bits>(low + 1);
    const std::size_t rest = f & (f - 1);
    int* dst = &table[f * cells];
    const int* src = &table[rest * cells];
    for (std::size_t a = 0; a < cells; ++a) {
      dst[a] += src[a];
      dst[a | trace] -= src[a];
    }
    std::vector<int> coeffs(dst, dst + cells);
    if (seen.contains(coeffs)) continue;
    DeltaPattern pattern{coeffs, {}};
    for (std::size_t bits = f; bits != 0; bits &= bits - 1) {
      pattern.family.push_back(static_cast<Menu::Bits>(std::countr_zero(bits) + 1));
    }
    seen.emplace(std::move(coeffs), out.size());
    out.push_back(std::move(pattern));
  }
  return out;
}

void disjoint_families(Menu::Bits remaining, std::vector<Menu::Bits>& current,
                       std::vector<std::vector<Menu::Bits>>& out) {
  if (remaining == 0) return;
  // Either the lowest remaining element is left uncovered, or it opens a new
  // block drawn from the remaining elements.
  const Menu::Bits low = remaining & (~remaining + 1);
  const Menu::Bits others = remaining & ~low;
  disjoint_families(others, current, out);
  Menu::Bits sub = 0;
  do {
    const Menu::Bits block = low | sub;
    current.push_back(block);
    out.push_back(current);
    disjoint_families(others & ~block, current, out);
    current.pop_back();
    sub = (sub - others) & others;
  } while (sub != 0);
}

}  // namespace

const std::vector<DeltaPattern>& odds_patterns(int k) {
  if (k < 1 || k > kMaxOddsTraces) {
    throw CapacityError("full odds-difference enumeration supports at most " + std::to_string(kMaxOddsTraces) +
                        " dominating alternatives per menu, got " + std::to_string(k));
  }
  static std::array<std::vector<DeltaPattern>, kMaxOddsTraces + 1> cache;
  static std::array<std::once_flag, kMaxOddsTraces + 1> flags;
  std::call_once(flags[static_cast<std::size_t>(k)],
                 [k] { cache[static_cast<std::size_t>(k)] = build_odds_patterns(k); });
  return cache[static_cast<std::size_t>(k)];
}

std::vector<DeltaPattern> choice_patterns(int k) {
  std::vector<std::vector<Menu::Bits>> families;
  std::vector<Menu::Bits> current;
  disjoint_families((Menu::Bits{1} << k) - 1, current, families);
  const std::size_t cells = std::size_t{1} << k;
  std::vector<DeltaPattern> out;
  std::map<std::vector<int>, bool> seen;
  for (auto& family : families) {
    // Δ_F p(S) = Σ_{G ⊆ F} (-1)^{|F∖G|} p(S ∖ ∪G).
    std::vector<int> coeffs(cells, 0);
    const std::size_t m = family.size();
    for (std::size_t g = 0; g < (std::size_t{1} << m); ++g) {
      Menu::Bits uni = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if ((g >> i) & 1U) uni |= family[i];
      }
      const int sign = ((m - static_cast<std::size_t>(std::popcount(g))) % 2 == 0) ? 1 : -1;
      coeffs[uni] += sign;
    }
    if (seen.emplace(coeffs, true).second) out.push_back({std::move(coeffs), std::move(family)});
  }
  return out;
}

}  // namespace detail

Rational reference_odds(const ChoiceDataset& data, Alt r, Menu s) {
  const Rational& p = data.p(r, r, s);
  if (sgn(p) == 0) throw std::domain_error("reference chosen with probability zero");
  return (1 - p) / p;
}

Rational odds_delta(const ChoiceDataset& data, Alt r, Menu s, std::span<const Menu> collection) {
  if (collection.empty()) return reference_odds(data, r, s);
  const auto rest = collection.subspan(1);
  return odds_delta(data, r, s, rest) - odds_delta(data, r, s - collection.front(), rest);
}

Rational choice_delta(const ChoiceDataset& data, Alt r, Menu s, std::span<const Menu> collection) {
  if (collection.empty()) return data.p(r, r, s);
  const auto rest = collection.subspan(1);
  return choice_delta(data, r, s - collection.front(), rest) - choice_delta(data, r, s, rest);
}

Rational reference_alpha(const ChoiceDataset& data, Alt r, Menu t, Menu s) {
  Rational out = 0;
  for_each_subset_between(t, s, [&](Menu d) {
    const Rational& p = data.p(r, r, d);
    if (sgn(p) == 0) throw std::domain_error("reference chosen with probability zero");
    if (mobius_sign(d, s) > 0) {
      out += 1 / p;
    } else {
      out -= 1 / p;
    }
  });
  return out;
}

Rational reference_lambda(const ChoiceDataset& data, Alt r, Menu dominant_menu, Menu s) {
  const Menu all = data.universe().all();
  Rational out = 0;
  for_each_subset_between(dominant_menu, s, [&](Menu d) {
    const Rational& p = data.p(r, r, (all - d) | dominant_menu);
    if (mobius_sign(d, s) > 0) {
      out += p;
    } else {
      out -= p;
    }
  });
  return out;
}

namespace {

using detail::VerdictBuilder;

void enforce_cap(const ChoiceDataset& data, const CheckOptions& options) {
  if (options.mode == CheckMode::Full && data.n() > options.full_mode_cap) {
    throw CapacityError("full-mode enumeration is capped at " + std::to_string(options.full_mode_cap) +
                        " alternatives; the universe has " + std::to_string(data.n()));
  }
}

Menu to_global(Menu::Bits local, const std::vector<Alt>& members) {
  Menu out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if ((local >> i) & 1U) out = out.with(members[i]);
  }
  return out;
}

std::vector<Menu> to_global(const std::vector<Menu::Bits>& family, const std::vector<Alt>& members) {
  std::vector<Menu> out;
  out.reserve(family.size());
  for (auto trace : family) out.push_back(to_global(trace, members));
  return out;
}

std::string describe_collection(const Universe& u, const std::vector<Menu>& collection) {
  std::string out = "{";
  for (std::size_t i = 0; i < collection.size(); ++i) {
    if (i > 0) out += ",";
    out += u.describe(collection[i]);
  }
  return out + "}";
}

Witness nre_witness(const ChoiceDataset& data, Menu s, Alt r) {
  return Witness{"nre",
                 "p_" + data.universe().label(r) + "(" + data.universe().label(r) + ", " +
                     data.universe().describe(s) + ") = 0, so the odds against the reference are undefined",
                 {{s, r}},
                 {r},
                 {},
                 {}};
}

}  // namespace

Verdict check_dora(const ChoiceDataset& data, const CheckOptions& options) {
  enforce_cap(data, options);
  const Universe& u = data.universe();
  const RevealedDominance dom(data);
  VerdictBuilder out("dora");
  for (const auto& [s, r] : data.problems()) {
    if (out.failed()) break;
    const Menu k_menu = s & dom.dominators(r);
    if (k_menu.empty()) continue;
    const auto members = k_menu.members();
    const int k = static_cast<int>(members.size());
    // f(A) = 𝒪^r_{S∖A} for every local removal set A.
    const std::size_t cells = std::size_t{1} << k;
    std::vector<Rational> odds(cells);
    bool ready = true;
    for (std::size_t a = 0; a < cells && !out.failed(); ++a) {
      const Menu sub = s - to_global(static_cast<Menu::Bits>(a), members);
      if (!out.require(data, sub, r)) {
        ready = false;
        continue;
      }
      const Rational& p = data.p(r, r, sub);
      if (sgn(p) == 0) {
        out.fail(nre_witness(data, sub, r));
        break;
      }
      odds[a] = (1 - p) / p;
    }
    if (!ready || out.failed()) continue;

    if (options.mode == CheckMode::Reduced) {
      // α_r^T(S) with T = S ∖ P_r equals the difference over the singletons
      // of S ∩ P_r.
      Rational alpha = 0;
      for (std::size_t a = 0; a < cells; ++a) {
        if (std::popcount(a) % 2 == 0) {
          alpha += odds[a];
        } else {
          alpha -= odds[a];
        }
      }
      const Menu t = s - k_menu;
      const std::string name = "alpha_" + u.label(r) + "^" + u.describe(t) + "(" + u.describe(s) + ")";
      if (options.record_values) out.record(name, alpha);
      if (sgn(alpha) <= 0) {
        std::vector<Menu> singletons;
        for (Alt x : members) singletons.push_back(Menu::singleton(x));
        out.fail(Witness{"dora",
                         name + " = " + format_rational(alpha) + " is not positive",
                         {{s, r}},
                         {r},
                         std::move(singletons),
                         {{name, alpha}}});
      }
      continue;
    }

    for (const auto& pattern : detail::odds_patterns(k)) {
      Rational delta = 0;
      for (std::size_t a = 0; a < cells; ++a) {
        if (pattern.coefficients[a] != 0) delta += pattern.coefficients[a] * odds[a];
      }
      if (!options.record_values && sgn(delta) > 0) continue;
      auto collection = to_global(pattern.family, members);
      const std::string name = "delta_" + describe_collection(u, collection) + " O_" + u.label(r) + "(" +
                               u.describe(s) + ")";
      if (options.record_values) out.record(name, delta);
      if (sgn(delta) <= 0) {
        out.fail(Witness{"dora",
                         name + " = " + format_rational(delta) + " is not positive",
                         {{s, r}},
                         {r},
                         std::move(collection),
                         {{name, delta}}});
        break;
      }
    }
  }
  return out.finish();
}

Verdict check_dpcra(const ChoiceDataset& data, const CheckOptions& options) {
  enforce_cap(data, options);
  const Universe& u = data.universe();
  const Menu all = u.all();
  const RevealedDominance dom(data);
  VerdictBuilder out("dpcra");

  if (options.mode == CheckMode::Reduced) {
    for (Alt r = 0; r < u.size() && !out.failed(); ++r) {
      const Menu dominators = dom.dominators(r);
      const Menu dr = dom.dominant_menu(r);
      bool ready = true;
      for_each_subset_between(Menu(), dominators, [&](Menu c) {
        if (!out.require(data, all - c, r)) ready = false;
      });
      if (!ready) continue;
      for_each_subset_between(dr, all, [&](Menu s) {
        if (out.failed()) return;
        const Rational lambda = reference_lambda(data, r, dr, s);
        const std::string name = "lambda_" + u.label(r) + "(" + u.describe(s) + ")";
        if (options.record_values) out.record(name, lambda);
        if (sgn(lambda) <= 0) {
          std::vector<Menu> singletons;
          for (Alt x : s & dominators) singletons.push_back(Menu::singleton(x));
          out.fail(Witness{"dpcra",
                           name + " = " + format_rational(lambda) + " is not positive",
                           {{all, r}},
                           {r},
                           std::move(singletons),
                           {{name, lambda}}});
        }
      });
    }
    return out.finish();
  }

  std::map<int, std::vector<detail::DeltaPattern>> patterns;
  for (const auto& [s, r] : data.problems()) {
    if (out.failed()) break;
    const Menu k_menu = s & dom.dominators(r);
    if (k_menu.empty()) continue;
    const auto members = k_menu.members();
    const int k = static_cast<int>(members.size());
    const std::size_t cells = std::size_t{1} << k;
    std::vector<const Rational*> prob(cells, nullptr);
    bool ready = true;
    for (std::size_t a = 0; a < cells; ++a) {
      const Menu sub = s - to_global(static_cast<Menu::Bits>(a), members);
      if (!out.require(data, sub, r)) {
        ready = false;
        continue;
      }
      prob[a] = &data.p(r, r, sub);
    }
    if (!ready) continue;
    auto it = patterns.find(k);
    if (it == patterns.end()) it = patterns.emplace(k, detail::choice_patterns(k)).first;
    for (const auto& pattern : it->second) {
      Rational delta = 0;
      for (std::size_t a = 0; a < cells; ++a) {
        if (pattern.coefficients[a] != 0) delta += pattern.coefficients[a] * *prob[a];
      }
      if (!options.record_values && sgn(delta) > 0) continue;
      auto collection = to_global(pattern.family, members);
      const std::string name = "delta_" + describe_collection(u, collection) + " p_" + u.label(r) + "(" +
                               u.label(r) + "," + u.describe(s) + ")";
      if (options.record_values) out.record(name, delta);
      if (sgn(delta) <= 0) {
        out.fail(Witness{"dpcra",
                         name + " = " + format_rational(delta) + " is not positive",
                         {{s, r}},
                         {r},
                         std::move(collection),
                         {{name, delta}}});
        break;
      }
    }
  }
  return out.finish();
}

}  // namespace refchoice
