#include "qfuse/pipeline.hpp"

#include "qfuse/error.hpp"

namespace qfuse {

namespace {

template <typename F>
auto stage(const char* name, const std::string& id, F&& f) {
    try {
        return f();
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(name, id, e.what());
    }
}

void require_valid(const Qbpa& q, double tolerance, const char* name, const std::string& id) {
    const auto report = validate(q, tolerance);
    if (!report.ok()) {
        throw StageError(name, id, report.violations.front());
    }
}

}  // namespace

EvidenceStages run_evidence_stages(const EvidenceRecord& record, const PipelineConfig& cfg) {
    const std::string& id = record.id;
    EvidenceStages out{id,
                       record.urgency,
                       record.evidence.body(),
                       {},
                       Qbpa(record.evidence.frame()),
                       record.reliability,
                       {},
                       {},
                       {Qbpa(record.evidence.frame()), Qbpa(record.evidence.frame()), 0.0}};

    out.time_weights = stage("time", id, [&] {
        return time_weights(record.evidence, cfg.policy, cfg.grades);
    });
    out.time_modified = stage("time", id, [&] {
        return apply_time_rule(record.evidence, out.time_weights);
    });
    require_valid(out.time_modified, cfg.tolerance, "time", id);

    out.split = stage("reliability", id, [&] { return dhdf(record.reliability); });
    out.redistributed = stage("reliability", id, [&] { return qpdr(record.reliability, out.split); });

    out.fused = stage("tdqbf", id, [&] {
        return combine_tdqbf(Tdqbf{out.time_modified, out.redistributed});
    });
    require_valid(out.fused.body, cfg.tolerance, "tdqbf", id);
    return out;
}

RunReport run_pipeline(const EvidenceSet& data, const PipelineConfig& cfg) {
    if (data.evidences.empty()) {
        throw ValidationError("no evidences");
    }
    cfg.grades.check();

    RunReport report{data.frame, cfg, {}, {Qbpa(data.frame), Qbpa(data.frame), {}, {}},
                     std::nullopt, data.warnings};
    std::vector<FusedBody> fused;
    std::vector<UrgencyGrade> grades;
    for (const auto& rec : data.evidences) {
        report.evidences.push_back(run_evidence_stages(rec, cfg));
        fused.push_back(report.evidences.back().fused);
        grades.push_back(rec.urgency);
    }

    report.final = stage("final", "all", [&] { return xg_fuse(fused, grades); });
    require_valid(report.final.fin, cfg.tolerance, "final", "all");

    if (data.evidences.size() >= 2) {
        // The baseline is a comparison aid; its failure must not sink the run.
        try {
            report.baseline = run_baseline(data);
        } catch (const StageError& e) {
            report.warnings.push_back(std::string("baseline omitted: ") + e.what());
        }
    }
    return report;
}

BaselineResult run_baseline(const EvidenceSet& data) {
    if (data.evidences.size() < 2) {
        throw ValidationError("baseline needs at least two evidences");
    }
    BaselineResult out{data.evidences.front().evidence.body(), {}};
    std::string folded = data.evidences.front().id;
    for (std::size_t i = 1; i < data.evidences.size(); ++i) {
        const auto& rec = data.evidences[i];
        try {
            auto step = dempster_combine(out.body, rec.evidence.body());
            out.conflicts.push_back(step.conflict);
            out.body = std::move(step.body);
        } catch (const Error& e) {
            throw StageError("baseline", rec.id,
                             std::string(e.what()) + " between [" + folded + "] and " + rec.id);
        }
        folded += "," + rec.id;
    }
    return out;
}

}  // namespace qfuse
