#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "heisdens/constants.hpp"
#include "heisdens/density.hpp"
#include "heisdens/metric.hpp"
#include "heisdens/numerics/monte_carlo.hpp"
#include "heisdens/slice.hpp"

namespace heisdens {

std::string_view version() noexcept;

nlohmann::ordered_json to_json(const MetricSpec& m);
nlohmann::ordered_json to_json(const McEstimate& e);
nlohmann::ordered_json to_json(const DensityConstants& c);
nlohmann::ordered_json to_json(const SliceSection& s);
nlohmann::ordered_json to_json(const MapleReport& r);
nlohmann::ordered_json to_json(const ConvexReport& r);
nlohmann::ordered_json to_json(const DensityCurve& d);
nlohmann::ordered_json to_json(const FedererDensity& f);
nlohmann::ordered_json to_json(const InscribedRectangle& r);
nlohmann::ordered_json to_json(const CoverEstimate& c);
nlohmann::ordered_json to_json(const CompareReport& r);
nlohmann::ordered_json to_json(const MetricContractReport& r);

/// {"version": ..., "config": config, "result": result}
nlohmann::ordered_json wrap_output(const nlohmann::ordered_json& config,
                                   const nlohmann::ordered_json& result);

/// "# heisdens <version> <config as one-line JSON>\n", the header line of CSV files.
std::string provenance_line(const nlohmann::ordered_json& config);

/// Estimate curves as CSV with columns kind,r,estimate,halved_estimate,target.
std::string compare_to_csv(const CompareReport& r);

}  // namespace heisdens
