#include "refchoice/fixtures.hpp"

#include <functional>
#include <stdexcept>

namespace refchoice {

namespace {

std::size_t idx(Alt a) { return static_cast<std::size_t>(a); }

const Universe& xyz() {
  static const Universe u({"x", "y", "z"});
  return u;
}

enum : Alt { X = 0, Y = 1, Z = 2 };

Rational q(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Menu set_of(std::initializer_list<Alt> members) { return Menu::of(members); }

IraModel uniform_ira(const Universe& u, const LinearOrder& pref, const Rational& g) {
  const auto n = static_cast<std::size_t>(u.size());
  IraModel m{u, pref, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, g))};
  for (std::size_t r = 0; r < n; ++r) m.gamma[r][r] = 1;
  return m;
}

// Uniform weights over the menus containing each reference.
std::vector<std::vector<Rational>> uniform_weights(const Universe& u) {
  const auto n = static_cast<std::size_t>(u.size());
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(std::size_t{1} << n));
  const Rational share(1, mpz_class(1) << (u.size() - 1));
  for (Alt r = 0; r < u.size(); ++r) {
    for_each_subset_between(Menu::singleton(r), u.all(), [&](Menu d) { w[idx(r)][d.bits()] = share; });
  }
  return w;
}

void set_weights(std::vector<Rational>& w, std::initializer_list<std::pair<Menu, Rational>> entries) {
  std::fill(w.begin(), w.end(), Rational(0));
  for (const auto& [d, value] : entries) w[d.bits()] = value;
}

AttentionModel ira_uniform() { return uniform_ira(xyz(), LinearOrder::identity(3), q(1, 2)); }

AttentionModel sqm_violation_ira() {
  IraModel m = uniform_ira(xyz(), LinearOrder::identity(3), q(1, 2));
  m.gamma[Y][X] = q(9, 10);
  m.gamma[Z][X] = q(1, 10);
  m.gamma[Z][Y] = q(1, 2);
  return m;
}

AttentionModel category_bias() {
  // Two categories {m, m'} and {v, v'}; attention is high inside the
  // reference's own category.
  const Universe u({"m", "m'", "v", "v'"});
  const LinearOrder pref({0, 2, 1, 3});
  const Rational high = q(3, 4);
  const Rational low = q(1, 4);
  IraModel m{u, pref, std::vector<std::vector<Rational>>(4, std::vector<Rational>(4))};
  for (Alt r = 0; r < 4; ++r) {
    for (Alt x = 0; x < 4; ++x) m.gamma[idx(r)][idx(x)] = x == r ? Rational(1) : (x / 2 == r / 2 ? high : low);
  }
  return m;
}

AttentionModel overload_lra() {
  LraModel m{xyz(), LinearOrder::identity(3), uniform_weights(xyz())};
  set_weights(m.weights[Y], {{set_of({Y}), q(1, 10)},
                             {set_of({X, Y}), q(4, 10)},
                             {set_of({Y, Z}), q(4, 10)},
                             {set_of({X, Y, Z}), q(1, 10)}});
  return m;
}

AttentionModel ida_violation_lra() {
  LraModel m{xyz(), LinearOrder::identity(3), uniform_weights(xyz())};
  set_weights(m.weights[Y], {{set_of({Y}), q(1, 6)},
                             {set_of({X, Y}), q(1, 6)},
                             {set_of({X, Y, Z}), q(1, 6)},
                             {set_of({Y, Z}), q(3, 6)}});
  return m;
}

AttentionModel rida_violation_cra() {
  CraModel m{xyz(), LinearOrder::identity(3), uniform_weights(xyz())};
  set_weights(m.weights[Z], {{set_of({Z}), q(1, 6)},
                             {set_of({X, Z}), q(1, 6)},
                             {set_of({Y, Z}), q(1, 6)},
                             {set_of({X, Y, Z}), q(1, 2)}});
  return m;
}

AttentionModel ri_lra_sqm_violation() {
  RefIndependentModel m{RefIndependentKind::Lra, xyz(), LinearOrder::identity(3), {}, std::vector<Rational>(8)};
  set_weights(m.weights, {{set_of({X}), q(1, 19)},
                          {set_of({Y}), q(1, 19)},
                          {set_of({Z}), q(1, 19)},
                          {set_of({X, Y}), q(10, 19)},
                          {set_of({X, Z}), q(1, 19)},
                          {set_of({Y, Z}), q(4, 19)},
                          {set_of({X, Y, Z}), q(1, 19)}});
  return m;
}

AttentionModel ri_cra_uniform() {
  RefIndependentModel m{RefIndependentKind::Cra, xyz(), LinearOrder::identity(3), {}, std::vector<Rational>(8, q(1, 7))};
  m.weights[0] = 0;
  return m;
}

using Row = std::initializer_list<std::pair<Alt, Rational>>;

// Dataset on {x,y,z} with x ≻ y ≻ z where p_x always picks x and singleton
// rows are trivial; the caller supplies the remaining rows.
ChoiceDataset top_fixed_dataset(std::initializer_list<std::tuple<Menu, Alt, Row>> rows) {
  ChoiceDataset data(xyz(), true);
  for_each_subset_between(Menu::singleton(X), xyz().all(), [&](Menu s) {
    std::vector<Rational> row(3);
    row[X] = 1;
    data.add({s, X}, std::move(row));
  });
  for (Alt a : {Y, Z}) {
    std::vector<Rational> row(3);
    row[idx(a)] = 1;
    data.add({Menu::singleton(a), a}, std::move(row));
  }
  for (const auto& [s, r, entries] : rows) {
    std::vector<Rational> row(3);
    for (const auto& [x, value] : entries) row[idx(x)] = value;
    data.add({s, r}, std::move(row));
  }
  return data;
}

ChoiceDataset insufficiency_rida() {
  return top_fixed_dataset({
      {set_of({X, Y}), Y, {{X, q(1, 2)}, {Y, q(1, 2)}}},
      {set_of({Y, Z}), Y, {{Y, 1}}},
      {set_of({X, Y, Z}), Y, {{X, q(1, 2)}, {Y, q(1, 2)}}},
      {set_of({X, Z}), Z, {{X, q(1, 2)}, {Z, q(1, 2)}}},
      {set_of({Y, Z}), Z, {{Y, q(1, 2)}, {Z, q(1, 2)}}},
      {set_of({X, Y, Z}), Z, {{X, q(1, 5)}, {Y, q(2, 5)}, {Z, q(2, 5)}}},
  });
}

ChoiceDataset insufficiency_ida() {
  return top_fixed_dataset({
      {set_of({X, Y}), Y, {{X, q(1, 2)}, {Y, q(1, 2)}}},
      {set_of({Y, Z}), Y, {{Y, 1}}},
      {set_of({X, Y, Z}), Y, {{X, q(1, 2)}, {Y, q(1, 2)}}},
      {set_of({X, Z}), Z, {{X, q(1, 4)}, {Z, q(3, 4)}}},
      {set_of({Y, Z}), Z, {{Y, q(3, 5)}, {Z, q(2, 5)}}},
      {set_of({X, Y, Z}), Z, {{X, q(1, 4)}, {Y, q(1, 4)}, {Z, q(1, 2)}}},
  });
}

ChoiceDataset ncc_cycle() {
  const Universe u({"x", "y"});
  ChoiceDataset data(u, true);
  data.add({Menu::singleton(0), 0}, {1, 0});
  data.add({Menu::singleton(1), 1}, {0, 1});
  data.add({Menu::of({0, 1}), 0}, {q(1, 2), q(1, 2)});
  data.add({Menu::of({0, 1}), 1}, {q(1, 2), q(1, 2)});
  return data;
}

struct Entry {
  FixtureInfo info;
  std::function<Fixture()> make;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {{"ira-uniform", "IRA on {x,y,z}, x > y > z, every attention probability 1/2"}, [] { return Fixture(ira_uniform()); }},
      {{"sqm-violation-ira", "IRA where p_y(y,X) = 1/10 < p_z(y,X) = 9/20"}, [] { return Fixture(sqm_violation_ira()); }},
      {{"category-bias", "two-category IRA with frequency reversals across references"},
       [] { return Fixture(category_bias()); }},
      {{"overload-lra", "Luce attention with choice overload: p_y(y,X) = 1/2 > p_y(y,{x,y}) = 1/5"},
       [] { return Fixture(overload_lra()); }},
      {{"ida-violation-lra", "Luce attention that breaks irrelevance of dominated alternatives"},
       [] { return Fixture(ida_violation_lra()); }},
      {{"rida-violation-cra", "constant attention that breaks ratio independence"},
       [] { return Fixture(rida_violation_cra()); }},
      {{"insufficiency-rida", "dataset satisfying RIDA but failing DORA with alpha = -1/2"},
       [] { return Fixture(insufficiency_rida()); }},
      {{"insufficiency-ida", "dataset satisfying IDA but failing DPCRA with lambda = -1/10"},
       [] { return Fixture(insufficiency_ida()); }},
      {{"ri-lra-sqm-violation", "reference-independent Luce attention that fails status quo monotonicity"},
       [] { return Fixture(ri_lra_sqm_violation()); }},
      {{"ri-cra-uniform", "reference-independent constant attention, weight 1/7 on every menu"},
       [] { return Fixture(ri_cra_uniform()); }},
      {{"ncc-cycle", "binary dataset where x and y reveal each other (2-cycle)"}, [] { return Fixture(ncc_cycle()); }},
  };
  return list;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_catalog() {
  static const std::vector<FixtureInfo> catalog = [] {
    std::vector<FixtureInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

Fixture make_fixture(std::string_view name) {
  for (const auto& e : entries()) {
    if (e.info.name == name) return e.make();
  }
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

ChoiceDataset fixture_dataset(std::string_view name) {
  Fixture f = make_fixture(name);
  if (auto* model = std::get_if<AttentionModel>(&f)) return simulate_dataset(*model);
  return std::get<ChoiceDataset>(std::move(f));
}

}  // namespace refchoice
