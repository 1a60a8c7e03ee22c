#pragma once

#include <json.hpp>

#include "charfield/acceptance.hpp"
#include "charfield/charfields.hpp"
#include "charfield/series.hpp"
#include "charfield/unicombinat.hpp"

namespace charfield::json_io {

using nlohmann::json;

json group_to_json(const GroupSpec& g);
// Accepts the "family", "n", "q" and optional "twist" keys of a class or group object.
GroupSpec group_from_json(const json& j);

// {"family","n","q","twist","orbits":[{"frac":"a/d","mult":m}],"plus_type","minus_type"}; orbits are
// written with canonical representatives in sorted order.
json class_to_json(const SemisimpleClass& s);
SemisimpleClass class_from_json(const json& j);

json field_to_json(const CharField& f);
json partition_to_json(const Partition& p);
json symbol_to_json(const LSymbol& s);
json criterion_to_json(const acceptance::CriterionResult& r);

}  // namespace charfield::json_io
