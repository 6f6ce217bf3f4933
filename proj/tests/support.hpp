#pragma once

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "refchoice/dataset.hpp"
#include "refchoice/rational.hpp"

namespace refchoice::testing {

inline Rational q(long num, long den = 1) {
  Rational v(num, den);
  v.canonicalize();
  return v;
}

/// Small datasets written with labels: add({"x","y"}, "y", {{"x", q(1,2)}, {"y", q(1,2)}}).
class DatasetBuilder {
 public:
  explicit DatasetBuilder(std::vector<std::string> labels) { raw_.universe = Universe(std::move(labels)); }

  Menu menu(std::initializer_list<const char*> labels) const {
    Menu s;
    for (const char* l : labels) s = s.with(raw_.universe.index_of(l));
    return s;
  }
  Alt at(const char* label) const { return raw_.universe.index_of(label); }

  DatasetBuilder& add(std::initializer_list<const char*> menu_labels, const char* reference,
                      std::initializer_list<std::pair<const char*, Rational>> choice) {
    RawEntry e{menu(menu_labels), at(reference), {}};
    for (const auto& [label, value] : choice) e.choice.emplace_back(at(label), value);
    raw_.entries.push_back(std::move(e));
    return *this;
  }

  /// Adds p_r(r,{r}) = 1 for every alternative.
  DatasetBuilder& singletons() {
    for (Alt a = 0; a < raw_.universe.size(); ++a) raw_.entries.push_back({Menu::singleton(a), a, {{a, Rational(1)}}});
    return *this;
  }

  RawDataset raw(bool complete = false) const {
    RawDataset r = raw_;
    r.complete = complete;
    return r;
  }
  ChoiceDataset build(bool complete = false) const { return make_dataset(raw(complete)); }

 private:
  RawDataset raw_;
};

/// Scratch directory removed at scope exit.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("refchoice-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace refchoice::testing
