#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qfuse/pipeline.hpp"

namespace qfuse {

enum class StageFilter { All, Time, Reliability, Tdqbf, Final };

StageFilter parse_stage(const std::string& name);

// "0.8500∠0.9294": magnitude and phase at four decimals.
std::string format_polar(const ComplexAmplitude& a);
// Four decimals, switching to scientific notation for tiny nonzero values.
std::string format_classic(double p);

nlohmann::json report_to_json(const RunReport& report, StageFilter stage = StageFilter::All);
// Rebuilds a full (unfiltered) report from report_to_json output.
RunReport report_from_json(const nlohmann::json& doc);

std::string emit(const RunReport& report, OutputFormat format,
                 StageFilter stage = StageFilter::All);

// Side-by-side classic distributions of the pipeline and the baseline.
std::string emit_comparison(const RunReport& report);

}  // namespace qfuse
