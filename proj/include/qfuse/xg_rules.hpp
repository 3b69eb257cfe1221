#pragma once

#include <map>
#include <string>
#include <vector>

#include "qfuse/qbpa.hpp"
#include "qfuse/tdqbf.hpp"

namespace qfuse {

// Label of the urgency band holding exponent e (e > 0). Exact points 1 and 2
// take precedence over the half-open bands around them.
std::string grade_label(double exponent);

struct UrgencyGrade {
    double exponent;
    std::string label;

    static UrgencyGrade from_exponent(double exponent) { return {exponent, grade_label(exponent)}; }
};

// MID(p) = sum_i e_i * m_X^(i)(p) over the normalized fused bodies.
Qbpa::MassMap mid(const std::vector<FusedBody>& fused, const std::vector<UrgencyGrade>& grades);

// Amplitude normalization of a MID map.
Qbpa nor(const Frame& frame, const Qbpa::MassMap& mid_map);

struct FinalDistribution {
    Qbpa fin;
    Qbpa nor;
    std::map<FocalSet, double> classic;
    std::vector<double> conflicts;  // one per self-combination step
};

// nor(mid(...)) combined with itself n - 1 times.
FinalDistribution xg_fuse(const std::vector<FusedBody>& fused,
                          const std::vector<UrgencyGrade>& grades);

}  // namespace qfuse
