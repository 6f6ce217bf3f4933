#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "refchoice/axioms.hpp"
#include "refchoice/dataset.hpp"
#include "refchoice/extensions.hpp"
#include "refchoice/models.hpp"
#include "refchoice/recovery.hpp"

namespace refchoice {

using Json = nlohmann::ordered_json;

/// Parses JSON text, rejecting duplicate object keys whose values differ.
/// Duplicates that agree (for rationals: equal after reduction) are accepted.
Json parse_json(std::string_view text);

/// Canonical text: two-space indentation and a trailing newline.
std::string dump_json(const Json& j);

RawDataset raw_dataset_from_json(const Json& j);
/// Problems in canonical order, every menu member listed in index order.
Json dataset_to_json(const ChoiceDataset& data);

AttentionModel model_from_json(const Json& j);
Json model_to_json(const AttentionModel& model);

Json rdrum_to_json(const RdRumModel& model);

ConstraintPopulation population_from_json(const Json& j);
Json population_to_json(const ConstraintPopulation& pop);

StochasticChoiceRule choice_rule_from_json(const Json& j);

Json verdict_to_json(const Verdict& v, const Universe& u);
Json mobius_table_to_json(const MobiusTable& table, const Universe& u);

/// FNV-1a 64 over the canonical dataset text, as 16 hex digits.
std::string dataset_digest(const ChoiceDataset& data);

}  // namespace refchoice
