#include <random>

#include "refchoice/axioms.hpp"
#include "refchoice/oracle.hpp"

namespace refchoice::oracle {

namespace {

std::size_t idx(Alt a) { return static_cast<std::size_t>(a); }
std::size_t idx(Menu m) { return static_cast<std::size_t>(m.bits()); }

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : gen_(seed) {}
  /// Uniform integer in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational grid(long lo, long hi, long den) {
    Rational out(between(lo, hi), den);
    out.canonicalize();
    return out;
  }
  std::vector<Alt> permutation(int n) {
    std::vector<Alt> out(static_cast<std::size_t>(n));
    for (Alt i = 0; i < n; ++i) out[idx(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(out[idx(i)], out[static_cast<std::size_t>(between(0, i))]);
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

Universe labels(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return Universe(std::move(names));
}

// Positive grid weights on {D : anchor ⊆ D ⊆ all}, normalized.
std::vector<Rational> positive_weights(Draw& draw, int n, Menu anchor, int grid) {
  std::vector<Rational> w(std::size_t{1} << n);
  Rational total = 0;
  for_each_subset_between(anchor, Menu::full(n), [&](Menu d) {
    if (d.empty()) return;
    w[idx(d)] = draw.between(1, grid);
    total += w[idx(d)];
  });
  for (auto& v : w) v /= total;
  return w;
}

std::vector<Rational> product_weights(const std::vector<Rational>& gamma, Alt r, int n) {
  std::vector<Rational> w(std::size_t{1} << n);
  for_each_subset_between(Menu::singleton(r), Menu::full(n), [&](Menu d) {
    Rational v = 1;
    for (Alt x = 0; x < n; ++x) {
      if (x == r) continue;
      v *= d.contains(x) ? gamma[idx(x)] : Rational(1 - gamma[idx(x)]);
    }
    w[idx(d)] = v;
  });
  return w;
}

bool rdram_valid(const ChoiceDataset& data) {
  return check_ncc(data).passed() && check_sqa(data).passed() && check_nre(data).passed();
}

}  // namespace

const char* class_name(ModelClass c) {
  switch (c) {
    case ModelClass::Ira:
      return "ira";
    case ModelClass::Lra:
      return "lra";
    case ModelClass::Cra:
      return "cra";
    case ModelClass::RefIndependentIra:
      return "ri-ira";
    case ModelClass::RefIndependentLra:
      return "ri-lra";
    case ModelClass::RefIndependentCra:
      return "ri-cra";
    case ModelClass::ProductLra:
      return "product-lra";
    case ModelClass::ProductCra:
      return "product-cra";
    case ModelClass::General:
      return "general";
  }
  return "unknown";
}

LinearOrder gen_order(int size, std::uint64_t seed) {
  Draw draw(mix(seed, 0xC0FFEE));
  return LinearOrder(draw.permutation(size));
}

AttentionModel gen_model(const GeneratorConfig& cfg) {
  const int n = cfg.size;
  const auto un = static_cast<std::size_t>(n);
  Draw draw(mix(cfg.seed, static_cast<std::uint64_t>(cfg.model_class) * 64 + static_cast<std::uint64_t>(n)));
  const Universe u = labels(n);
  const LinearOrder pref(draw.permutation(n));
  auto gamma_row = [&](Alt r) {
    std::vector<Rational> row(un);
    for (Alt x = 0; x < n; ++x) row[idx(x)] = x == r ? Rational(1) : draw.grid(1, cfg.grid - 1, cfg.grid);
    return row;
  };
  switch (cfg.model_class) {
    case ModelClass::Ira: {
      IraModel m{u, pref, {}};
      for (Alt r = 0; r < n; ++r) m.gamma.push_back(gamma_row(r));
      return m;
    }
    case ModelClass::Lra:
    case ModelClass::Cra: {
      std::vector<std::vector<Rational>> w;
      for (Alt r = 0; r < n; ++r) w.push_back(positive_weights(draw, n, Menu::singleton(r), cfg.grid));
      if (cfg.model_class == ModelClass::Lra) return LraModel{u, pref, std::move(w)};
      return CraModel{u, pref, std::move(w)};
    }
    case ModelClass::ProductLra:
    case ModelClass::ProductCra: {
      std::vector<std::vector<Rational>> w;
      for (Alt r = 0; r < n; ++r) w.push_back(product_weights(gamma_row(r), r, n));
      if (cfg.model_class == ModelClass::ProductLra) return LraModel{u, pref, std::move(w)};
      return CraModel{u, pref, std::move(w)};
    }
    case ModelClass::RefIndependentIra: {
      std::vector<Rational> gamma(un);
      for (auto& g : gamma) g = draw.grid(1, cfg.grid - 1, cfg.grid);
      return RefIndependentModel{RefIndependentKind::Ira, u, pref, std::move(gamma), {}};
    }
    case ModelClass::RefIndependentLra:
    case ModelClass::RefIndependentCra:
      return RefIndependentModel{cfg.model_class == ModelClass::RefIndependentLra ? RefIndependentKind::Lra
                                                                                   : RefIndependentKind::Cra,
                                 u, pref, {}, positive_weights(draw, n, Menu(), cfg.grid)};
    case ModelClass::General: {
      GeneralAttention g{u, pref, {}, true};
      for (Menu::Bits bits = 1; bits < (Menu::Bits{1} << n); ++bits) {
        const Menu s(bits);
        for (Alt r : s) {
          auto& sets = g.mu[{s, r}];
          Rational total = 0;
          for_each_subset_between(Menu::singleton(r), s, [&](Menu d) {
            sets.emplace_back(d, Rational(draw.between(1, cfg.grid)));
            total += sets.back().second;
          });
          for (auto& entry : sets) entry.second /= total;
        }
      }
      return g;
    }
  }
  throw std::invalid_argument("unknown model class");
}

std::optional<ChoiceDataset> gen_signed_lra_dataset(const GeneratorConfig& cfg) {
  const int n = cfg.size;
  Draw draw(mix(cfg.seed, 0x51A7ED00ULL + static_cast<std::uint64_t>(n)));
  const Universe u = labels(n);
  const LinearOrder pref(draw.permutation(n));
  std::vector<std::vector<Rational>> w(static_cast<std::size_t>(n), std::vector<Rational>(std::size_t{1} << n));
  for (Alt r = 0; r < n; ++r) {
    for_each_subset_between(Menu::singleton(r), u.all(), [&](Menu d) {
      // Singletons stay positive; larger sets may carry negative weight.
      w[idx(r)][idx(d)] = d.size() == 1 ? draw.grid(1, cfg.grid, cfg.grid) : draw.grid(-cfg.grid / 4, cfg.grid, cfg.grid);
    });
  }
  ChoiceDataset data(u, true);
  for (Menu::Bits bits = 1; bits < (Menu::Bits{1} << n); ++bits) {
    const Menu s(bits);
    for (Alt r : s) {
      std::vector<Rational> row(static_cast<std::size_t>(n));
      Rational z = 0;
      for_each_subset_between(Menu::singleton(r), s, [&](Menu d) {
        z += w[idx(r)][idx(d)];
        row[idx(pref.best(d))] += w[idx(r)][idx(d)];
      });
      if (sgn(z) <= 0) return std::nullopt;
      for (auto& v : row) {
        v /= z;
        if (!is_probability(v)) return std::nullopt;
      }
      data.add({s, r}, std::move(row));
    }
  }
  if (!rdram_valid(data)) return std::nullopt;
  return data;
}

std::optional<ChoiceDataset> gen_signed_cra_dataset(const GeneratorConfig& cfg) {
  const int n = cfg.size;
  Draw draw(mix(cfg.seed, 0xC4A00000ULL + static_cast<std::uint64_t>(n)));
  const Universe u = labels(n);
  const LinearOrder pref(draw.permutation(n));
  std::vector<std::vector<Rational>> w(static_cast<std::size_t>(n), std::vector<Rational>(std::size_t{1} << n));
  for (Alt r = 0; r < n; ++r) {
    Rational total = 0;
    for_each_subset_between(Menu::singleton(r), u.all(), [&](Menu d) {
      w[idx(r)][idx(d)] = draw.grid(-cfg.grid / 4, cfg.grid, cfg.grid);
      total += w[idx(r)][idx(d)];
    });
    if (sgn(total) <= 0) return std::nullopt;
    for (auto& v : w[idx(r)]) v /= total;
  }
  ChoiceDataset data(u, true);
  for (Menu::Bits bits = 1; bits < (Menu::Bits{1} << n); ++bits) {
    const Menu s(bits);
    for (Alt r : s) {
      std::vector<Rational> row(static_cast<std::size_t>(n));
      for_each_subset_between(Menu::singleton(r), u.all(), [&](Menu d) {
        row[idx(pref.best(d & s))] += w[idx(r)][idx(d)];
      });
      for (const auto& v : row) {
        if (!is_probability(v)) return std::nullopt;
      }
      data.add({s, r}, std::move(row));
    }
  }
  if (!rdram_valid(data)) return std::nullopt;
  return data;
}

StochasticChoiceRule gen_choice_rule(int size, std::uint64_t seed, int grid) {
  Draw draw(mix(seed, 0xC401CEULL + static_cast<std::uint64_t>(size)));
  StochasticChoiceRule rule{labels(size), {}};
  for (Menu::Bits bits = 1; bits < (Menu::Bits{1} << size); ++bits) {
    const Menu s(bits);
    std::vector<Rational> row(static_cast<std::size_t>(size));
    Rational total = 0;
    for (Alt x : s) {
      row[idx(x)] = draw.between(0, grid);
      total += row[idx(x)];
    }
    if (sgn(total) == 0) {
      row[idx(s.first())] = 1;
      total = 1;
    }
    for (auto& v : row) v /= total;
    rule.rows.emplace(s, std::move(row));
  }
  return rule;
}

ConstraintPopulation gen_population(int size, std::uint64_t seed, int types, int grid) {
  Draw draw(mix(seed, 0x9090ULL + static_cast<std::uint64_t>(size)));
  ConstraintPopulation pop{labels(size), {}};
  Rational total = 0;
  for (int t = 0; t < types; ++t) {
    ConstraintType type{Rational(draw.between(1, grid)), {}};
    total += type.weight;
    for (Alt r = 0; r < size; ++r) {
      type.constraint.push_back(Menu(static_cast<Menu::Bits>(draw.between(0, (1L << size) - 1))).with(r));
    }
    pop.types.push_back(std::move(type));
  }
  for (auto& type : pop.types) type.weight /= total;
  return pop;
}

}  // namespace refchoice::oracle
