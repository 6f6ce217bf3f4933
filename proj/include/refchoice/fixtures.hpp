#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "refchoice/dataset.hpp"
#include "refchoice/models.hpp"

namespace refchoice {

/// Bundled example: either a parametric model or a raw dataset.
using Fixture = std::variant<AttentionModel, ChoiceDataset>;

struct FixtureInfo {
  std::string name;
  std::string summary;
};

const std::vector<FixtureInfo>& fixture_catalog();

/// Throws std::out_of_range for unknown names.
Fixture make_fixture(std::string_view name);

/// Dataset of a fixture: the simulated dataset for models.
ChoiceDataset fixture_dataset(std::string_view name);

}  // namespace refchoice
