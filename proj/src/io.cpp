#include "fclab/io.hpp"

#include "fclab/combinatorics.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fclab {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string run_id(const std::string& canonical) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string density_to_csv(const DensityEstimate& estimate, const std::string& manifest_ref,
                           const std::string& id) {
  std::ostringstream out;
  out << "# schema: " << kSchemaId << "\n";
  out << "# manifest: " << manifest_ref << " run_id=" << id << "\n";
  out << "x,value,error,method\n";
  const char* method = to_string(estimate.method);
  for (Eigen::Index i = 0; i < estimate.x.size(); ++i)
    out << format_double(estimate.x[i]) << ',' << format_double(estimate.value[i]) << ','
        << format_double(estimate.error[i]) << ',' << method << "\n";
  return out.str();
}

nlohmann::json density_to_json(const DensityEstimate& estimate, const std::string& manifest_ref,
                               const std::string& id) {
  nlohmann::json j;
  j["schema"] = kSchemaId;
  j["kind"] = "density";
  j["manifest_ref"] = manifest_ref;
  j["run_id"] = id;
  j["params"] = {{"s", estimate.s},
                 {"method", to_string(estimate.method)},
                 {"resolution", estimate.resolution},
                 {"seed", estimate.seed},
                 {"support_edge", to_fraction_string(support_edge(estimate.s))}};
  j["x"] = std::vector<double>(estimate.x.data(), estimate.x.data() + estimate.x.size());
  j["value"] =
      std::vector<double>(estimate.value.data(), estimate.value.data() + estimate.value.size());
  j["error"] =
      std::vector<double>(estimate.error.data(), estimate.error.data() + estimate.error.size());
  return j;
}

nlohmann::json rmt_report_to_json(const RmtReport& report, const std::string& manifest_ref,
                                  const std::string& id) {
  nlohmann::json j;
  j["schema"] = kSchemaId;
  j["kind"] = "rmt_report";
  j["manifest_ref"] = manifest_ref;
  j["run_id"] = id;
  j["config"] = {{"s", report.config.s},
                 {"n", report.config.n_dim},
                 {"trials", report.config.trials},
                 {"seed", report.config.seed},
                 {"variant", to_string(report.config.variant)},
                 {"k_max", report.config.k_max}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& m : report.moments) {
    rows.push_back({{"k", m.k},
                    {"mean", m.mean},
                    {"std_error", m.std_error},
                    {"reference", to_fraction_string(Rational(fuss_catalan(report.config.s, m.k)))},
                    {"relative_deviation", m.relative_deviation}});
  }
  j["empirical_moments"] = rows;
  return j;
}

std::string histogram_to_csv(const std::vector<HistogramRow>& table,
                             const std::string& manifest_ref, const std::string& id) {
  std::ostringstream out;
  out << "# schema: " << kSchemaId << "\n";
  out << "# manifest: " << manifest_ref << " run_id=" << id << "\n";
  out << "bin_center,frequency,density\n";
  for (const auto& row : table)
    out << format_double(row.bin_center) << ',' << format_double(row.frequency) << ','
        << format_double(row.density_reference) << "\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fclab
