#include "qfuse/xg_rules.hpp"

#include <cmath>

#include "qfuse/error.hpp"

namespace qfuse {

std::string grade_label(double e) {
    if (!(e > 0.0) || !std::isfinite(e)) {
        throw ValidationError("invalid urgency exponent");
    }
    if (e < 0.5) return "Ignorable event";
    if (e < 1.0) return "More or less ignorable event";
    if (e == 1.0) return "Normal event";
    if (e < 2.0) return "More or less urgent event";
    if (e == 2.0) return "Urgent event";
    if (e < 2.5) return "Quite urgent event";
    if (e < 3.0) return "Very urgent event";
    if (e < 5.0) return "Quite very urgent event";
    return "Very very urgent event";
}

Qbpa::MassMap mid(const std::vector<FusedBody>& fused, const std::vector<UrgencyGrade>& grades) {
    if (fused.empty()) {
        throw ValidationError("no evidences to aggregate");
    }
    if (fused.size() != grades.size()) {
        throw ValidationError("one urgency grade per evidence is required");
    }
    const Frame& frame = fused.front().body.frame();
    std::map<FocalSet, Complex> sums;
    for (std::size_t i = 0; i < fused.size(); ++i) {
        if (!(fused[i].body.frame() == frame)) {
            throw ValidationError("fused bodies span different frames");
        }
        if (!(grades[i].exponent > 0.0)) {
            throw ValidationError("invalid urgency exponent");
        }
        for (const auto& [s, a] : fused[i].body.masses()) {
            sums[s] += grades[i].exponent * a.to_complex();
        }
    }
    Qbpa::MassMap out;
    for (const auto& [s, z] : sums) out.emplace(s, ComplexAmplitude::from_complex(z));
    return out;
}

Qbpa nor(const Frame& frame, const Qbpa::MassMap& mid_map) {
    const Qbpa raw(frame, mid_map);
    if (!(raw.total_probability() > 0.0)) {
        throw Error("degenerate MID");
    }
    return normalize(raw);
}

FinalDistribution xg_fuse(const std::vector<FusedBody>& fused,
                          const std::vector<UrgencyGrade>& grades) {
    const auto mid_map = mid(fused, grades);
    Qbpa nor_body = nor(fused.front().body.frame(), mid_map);

    Qbpa fin = nor_body;
    std::vector<double> conflicts;
    for (std::size_t i = 1; i < fused.size(); ++i) {
        auto step = dempster_combine(fin, nor_body);
        conflicts.push_back(step.conflict);
        fin = std::move(step.body);
    }

    std::map<FocalSet, double> classic;
    for (const auto& [s, a] : fin.masses()) classic.emplace(s, a.probability());
    return {std::move(fin), std::move(nor_body), std::move(classic), std::move(conflicts)};
}

}  // namespace qfuse
