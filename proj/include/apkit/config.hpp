#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "apkit/action.hpp"

namespace apkit {

/// One analysis run: the instance, the analyzed point, and the detector
/// parameters, as loaded from a JSON config file.
struct RunConfig {
    Instance instance;
    Point point;
    std::string analysisGauge;
    std::vector<double> epsGrid;  // empty -> default geometric grid
    double window = -1;           // analysis window; <0 -> instance default
    double rMax = 0;              // mixed-gauge shift budget when used
    std::string outDir = "out";
    std::uint64_t seed = 1;
    bool exact = false;
};

RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Rational from a JSON number or [num, den] pair.
Rational rational_from_json(const nlohmann::json& j);

TestFn testfn_from_json(const nlohmann::json& j);
GaugeSpec gauge_from_json(const nlohmann::json& j);

}  // namespace apkit
