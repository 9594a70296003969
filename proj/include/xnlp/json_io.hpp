#pragma once

#include <string>

#include <json.hpp>

#include "xnlp/instances.hpp"

namespace xnlp {

using Json = nlohmann::ordered_json;

Json to_json(const Instance& inst);
// Parses and validates; throws ValidationError naming the first problem.
Instance instance_from_json(const Json& j);
Instance parse_instance(const std::string& text);
std::string dump(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

}  // namespace xnlp
