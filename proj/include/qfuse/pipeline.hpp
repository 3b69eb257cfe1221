#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfuse/evidence_io.hpp"
#include "qfuse/tdqbf.hpp"
#include "qfuse/xg_rules.hpp"

namespace qfuse {

// Everything one evidence goes through before the cross-evidence fusion.
struct EvidenceStages {
    std::string id;
    UrgencyGrade urgency;
    Qbpa original;
    std::vector<double> time_weights;  // proposition (moment) order
    Qbpa time_modified;
    ReliabilityQbpa reliability;
    HesitancySplit split;
    RedistributedReliability redistributed;
    FusedBody fused;
};

struct BaselineResult {
    Qbpa body;
    std::vector<double> conflicts;  // one per fold step
};

struct RunReport {
    Frame frame;
    PipelineConfig config;
    std::vector<EvidenceStages> evidences;
    FinalDistribution final;
    std::optional<BaselineResult> baseline;  // needs at least two evidences
    std::vector<std::string> warnings;
};

// Single-evidence stages, exposed so each can be replayed on recorded input.
EvidenceStages run_evidence_stages(const EvidenceRecord& record, const PipelineConfig& cfg);

// Time rule, DHDF/QPDR and TDQBF fusion per evidence, then XG fusion.
RunReport run_pipeline(const EvidenceSet& data, const PipelineConfig& cfg);

// Left fold of the untouched evidence bodies through the quantum Dempster rule.
BaselineResult run_baseline(const EvidenceSet& data);

}  // namespace qfuse
