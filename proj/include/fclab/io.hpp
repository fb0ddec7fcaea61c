#pragma once

#include "fclab/density.hpp"
#include "fclab/rmt.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fclab {

inline constexpr const char* kSchemaId = "fc-lab/1";

/// Stable FNV-1a fingerprint of a canonical parameter string; ties output
/// files to the manifest of the run that produced them.
std::string run_id(const std::string& canonical);

/// CSV with columns x,value,error,method and leading "#" comment lines
/// carrying the schema id and manifest reference.
std::string density_to_csv(const DensityEstimate& estimate, const std::string& manifest_ref,
                           const std::string& id);

nlohmann::json density_to_json(const DensityEstimate& estimate, const std::string& manifest_ref,
                               const std::string& id);

nlohmann::json rmt_report_to_json(const RmtReport& report, const std::string& manifest_ref,
                                  const std::string& id);

/// CSV with columns bin_center,frequency,density.
std::string histogram_to_csv(const std::vector<HistogramRow>& table,
                             const std::string& manifest_ref, const std::string& id);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace fclab
