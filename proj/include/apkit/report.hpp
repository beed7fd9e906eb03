#pragma once

#include <string>

#include <json.hpp>

#include "apkit/constructions.hpp"
#include "apkit/detectors.hpp"
#include "apkit/generators.hpp"

namespace apkit {

using OrderedJson = nlohmann::ordered_json;

OrderedJson classification_to_json(const Classification& cls, const std::string& gaugeName,
                                   double window);
OrderedJson hull_to_json(const HullGroup& hull);
OrderedJson net_to_json(const EpsNet& net);
OrderedJson layered_report_to_json(const LayeredReport& rep);

/// One row per (eps, t, gaugeValue) over the profile, for external plotting.
std::string periods_csv(const std::vector<double>& epsGrid, const TranslateProfile& prof);

/// Deterministic shortest-roundtrip double formatting shared by all writers.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const OrderedJson& j);

/// JSON diagnostic for the error stream.
std::string error_diagnostic(const std::string& type, const std::string& message);

}  // namespace apkit
