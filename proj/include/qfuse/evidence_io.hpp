#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qfuse/ordinal_frame.hpp"
#include "qfuse/pictorial.hpp"
#include "qfuse/xg_rules.hpp"

namespace qfuse {

struct EvidenceRecord {
    std::string id;
    OqfdtiEvidence evidence;
    ReliabilityQbpa reliability;
    UrgencyGrade urgency;
};

struct EvidenceSet {
    Frame frame;
    std::vector<EvidenceRecord> evidences;
    std::vector<std::string> warnings;  // data-quality notes raised while ingesting
};

// Four-decimal input rows should have sum(psi^2) within kIngestTolerance of 1.
// Rows up to kIngestRejectTolerance off are accepted with a warning.
inline constexpr double kIngestTolerance = 1e-3;
inline constexpr double kIngestRejectTolerance = 5e-2;

// Parses an evidence document. Propositions are sorted by moment; a
// reordering is reported through `warnings`. Throws ParseError for malformed
// documents and ValidationError for domain violations.
EvidenceSet parse_evidence(const nlohmann::json& doc);
EvidenceSet ingest(const std::filesystem::path& path);

// Inverse of parse_evidence (propositions in stored, i.e. ascending, order).
nlohmann::json evidence_to_json(const EvidenceSet& set);

enum class OutputFormat { Table, Csv, Json };

struct PipelineConfig {
    ConnectionGrades grades;
    IntervalPolicy policy;
    double tolerance = kValidationTolerance;
    double report_tolerance = kReportTolerance;
    OutputFormat format = OutputFormat::Table;
};

PipelineConfig parse_config(const nlohmann::json& doc);
PipelineConfig load_config(const std::filesystem::path& path);
nlohmann::json config_to_json(const PipelineConfig& cfg);

OutputFormat parse_format(const std::string& name);
std::string format_name(OutputFormat f);

// Reads and parses a JSON file, mapping I/O and syntax failures to ParseError.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace qfuse
