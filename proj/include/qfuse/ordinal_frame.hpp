#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qfuse/qbpa.hpp"

namespace qfuse {

struct TimedProposition {
    FocalSet focal;
    ComplexAmplitude amplitude;
    double moment;  // seconds since the forecast started
};

// Evidence whose propositions were raised in strictly increasing moments.
class OqfdtiEvidence {
public:
    OqfdtiEvidence(Frame frame, std::vector<TimedProposition> propositions);

    const Frame& frame() const { return frame_; }
    const std::vector<TimedProposition>& propositions() const { return propositions_; }

    Qbpa body() const;

private:
    Frame frame_;
    std::vector<TimedProposition> propositions_;
};

// Multipliers for short, midpoint and long gaps; strong > moderate > weak > 0.
struct ConnectionGrades {
    double strong = 1.5;
    double moderate = 1.0;
    double weak = 0.5;

    void check() const;
};

struct IntervalBounds {
    double lower;
    double upper;
};

struct IntervalPolicy {
    enum class Mode { PerEvidenceMinMax, Explicit };

    Mode mode = Mode::PerEvidenceMinMax;
    // One entry per consecutive pair, or a single entry shared by all pairs.
    std::vector<IntervalBounds> explicit_bounds;

    static IntervalPolicy per_evidence_minmax() { return {}; }
    static IntervalPolicy explicit_intervals(std::vector<IntervalBounds> bounds);
};

// Piecewise grade for a gap inside [lower, upper]: strong below the midpoint,
// moderate at it (1e-9 relative), weak above.
double classify_gap(double gap, IntervalBounds bounds, const ConnectionGrades& grades);

// Chained weights: the first proposition weighs 1, every later one inherits
// its predecessor's weight times the grade of the gap between them.
std::vector<double> time_weights(const OqfdtiEvidence& ev, const IntervalPolicy& policy,
                                 const ConnectionGrades& grades);

// Scales each proposition's magnitude by its weight and renormalizes.
Qbpa apply_time_rule(const OqfdtiEvidence& ev, const std::vector<double>& weights);

struct GradeSweepResult {
    ConnectionGrades grades;
    double rms_error;  // over magnitudes, in proposition order
};

// Grid search for the grade triple whose time-rule output best matches
// `target_magnitudes`. Exploratory only; used to probe unpublished parameters.
GradeSweepResult sweep_grades(const OqfdtiEvidence& ev, const IntervalPolicy& policy,
                              const std::vector<double>& target_magnitudes,
                              const std::vector<double>& grid);

}  // namespace qfuse
