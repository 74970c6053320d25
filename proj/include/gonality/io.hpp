#pragma once

#include "gonality/construct.hpp"
#include "gonality/gluing.hpp"
#include "gonality/locus.hpp"
#include "gonality/tropical_morphism.hpp"

#include <json.hpp>

#include <string>

namespace gonality {

using Json = nlohmann::ordered_json;

// Structurally bad input; the CLI maps it to exit code 65.
class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& message) : Error("malformed-input", message) {}
};

Json to_json(const MetricGraph& g);
Json to_json(const GluingDatum& gd);  // copies 1-based
Json to_json(const TropicalMorphism& phi);
Json to_json(const Divisor& d);
Json to_json(const LocusCell& c);
Json to_json(const RHReport& r);
Json to_json(const GraphPoint& p);
Json to_json(const IntegralSet& s);

MetricGraph graph_from_json(const Json& j);
GluingDatum datum_from_json(const Json& j);
TropicalMorphism morphism_from_json(const Json& j);
Divisor divisor_from_json(const Json& j, int num_vertices);
LocusCell cell_from_json(const Json& j);
GraphPoint point_from_json(const Json& j);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

std::string to_dot(const MetricGraph& g, const std::string& name = "G");
std::string to_dot(const GluingDatum& gd);
std::string to_dot(const TropicalMorphism& phi);

}  // namespace gonality
