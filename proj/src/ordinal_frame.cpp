#include "qfuse/ordinal_frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qfuse/error.hpp"

namespace qfuse {

OqfdtiEvidence::OqfdtiEvidence(Frame frame, std::vector<TimedProposition> propositions)
    : frame_(std::move(frame)), propositions_(std::move(propositions)) {
    if (propositions_.empty()) {
        throw ValidationError("evidence needs at least one proposition");
    }
    for (std::size_t i = 0; i < propositions_.size(); ++i) {
        const auto& p = propositions_[i];
        if (!frame_.contains(p.focal)) {
            throw ValidationError("proposition focal set outside frame");
        }
        if (!(p.moment >= 0.0) || !std::isfinite(p.moment)) {
            throw ValidationError("moments must be finite and non-negative");
        }
        if (i > 0 && !(p.moment > propositions_[i - 1].moment)) {
            throw ValidationError("not ordinal");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (propositions_[j].focal == p.focal) {
                throw ValidationError("focal set " + frame_.name(p.focal) + " raised twice");
            }
        }
    }
}

Qbpa OqfdtiEvidence::body() const {
    Qbpa q(frame_);
    for (const auto& p : propositions_) q.set(p.focal, p.amplitude);
    return q;
}

void ConnectionGrades::check() const {
    if (!(strong > moderate && moderate > weak && weak > 0.0)) {
        throw ValidationError("connection grades must satisfy strong > moderate > weak > 0");
    }
}

IntervalPolicy IntervalPolicy::explicit_intervals(std::vector<IntervalBounds> bounds) {
    if (bounds.empty()) {
        throw ValidationError("explicit interval policy needs bounds");
    }
    for (const auto& b : bounds) {
        if (!(b.lower < b.upper)) {
            throw ValidationError("degenerate interval");
        }
    }
    return {Mode::Explicit, std::move(bounds)};
}

double classify_gap(double gap, IntervalBounds bounds, const ConnectionGrades& grades) {
    if (!(bounds.lower < bounds.upper)) {
        throw Error("degenerate interval");
    }
    const double mid = 0.5 * (bounds.lower + bounds.upper);
    const double tol = 1e-9 * std::max(std::abs(mid), std::numeric_limits<double>::min());
    if (std::abs(gap - mid) <= tol) return grades.moderate;
    return gap < mid ? grades.strong : grades.weak;
}

std::vector<double> time_weights(const OqfdtiEvidence& ev, const IntervalPolicy& policy,
                                 const ConnectionGrades& grades) {
    grades.check();
    const auto& props = ev.propositions();
    std::vector<double> weights{1.0};
    if (props.size() == 1) {
        return weights;
    }

    std::vector<double> gaps;
    for (std::size_t i = 1; i < props.size(); ++i) {
        gaps.push_back(props[i].moment - props[i - 1].moment);
    }

    std::vector<IntervalBounds> bounds;
    if (policy.mode == IntervalPolicy::Mode::PerEvidenceMinMax) {
        const auto [lo, hi] = std::minmax_element(gaps.begin(), gaps.end());
        bounds.assign(gaps.size(), IntervalBounds{*lo, *hi});
    } else if (policy.explicit_bounds.size() == 1) {
        bounds.assign(gaps.size(), policy.explicit_bounds.front());
    } else if (policy.explicit_bounds.size() == gaps.size()) {
        bounds = policy.explicit_bounds;
    } else {
        throw ValidationError("explicit interval policy has " +
                              std::to_string(policy.explicit_bounds.size()) + " bounds for " +
                              std::to_string(gaps.size()) + " gaps");
    }

    for (std::size_t i = 0; i < gaps.size(); ++i) {
        const auto b = bounds[i];
        double grade = grades.moderate;
        // Equal min and max gap: every gap sits on the midpoint.
        if (b.lower < b.upper) {
            grade = classify_gap(std::clamp(gaps[i], b.lower, b.upper), b, grades);
        }
        weights.push_back(weights.back() * grade);
    }
    return weights;
}

Qbpa apply_time_rule(const OqfdtiEvidence& ev, const std::vector<double>& weights) {
    const auto& props = ev.propositions();
    if (weights.size() != props.size()) {
        throw ValidationError("weight count does not match proposition count");
    }
    Qbpa inter(ev.frame());
    for (std::size_t i = 0; i < props.size(); ++i) {
        if (!(weights[i] > 0.0)) {
            throw ValidationError("time weights must be positive");
        }
        const auto& a = props[i].amplitude;
        inter.set(props[i].focal, ComplexAmplitude(a.magnitude() * weights[i], a.phase()));
    }
    return normalize(inter);
}

GradeSweepResult sweep_grades(const OqfdtiEvidence& ev, const IntervalPolicy& policy,
                              const std::vector<double>& target_magnitudes,
                              const std::vector<double>& grid) {
    const auto& props = ev.propositions();
    if (target_magnitudes.size() != props.size()) {
        throw ValidationError("target count does not match proposition count");
    }
    GradeSweepResult best{{}, std::numeric_limits<double>::infinity()};
    for (double s : grid) {
        for (double m : grid) {
            for (double w : grid) {
                const ConnectionGrades g{s, m, w};
                if (!(s > m && m > w && w > 0.0)) continue;
                const Qbpa out = apply_time_rule(ev, time_weights(ev, policy, g));
                double sq = 0.0;
                for (std::size_t i = 0; i < props.size(); ++i) {
                    const double d = out.at(props[i].focal).magnitude() - target_magnitudes[i];
                    sq += d * d;
                }
                const double rms = std::sqrt(sq / static_cast<double>(props.size()));
                if (rms < best.rms_error) best = {g, rms};
            }
        }
    }
    if (!std::isfinite(best.rms_error)) {
        throw ValidationError("grid holds no ordered grade triple");
    }
    return best;
}

}  // namespace qfuse
