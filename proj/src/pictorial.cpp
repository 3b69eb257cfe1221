#include "qfuse/pictorial.hpp"

#include <cmath>

#include "qfuse/error.hpp"

namespace qfuse {

namespace {

bool unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

PictureFuzzyElement::PictureFuzzyElement(double membership, double hesitancy,
                                         double non_membership)
    : membership_(membership), hesitancy_(hesitancy), non_membership_(non_membership) {
    if (!unit_interval(membership) || !unit_interval(hesitancy) ||
        !unit_interval(non_membership)) {
        throw ValidationError("picture fuzzy grades must lie in [0, 1]");
    }
    if (membership + hesitancy + non_membership > 1.0 + 1e-12) {
        throw ValidationError("picture fuzzy grades must sum to at most 1");
    }
}

double pfs_refusal(const PictureFuzzyElement& e) {
    const double refusal = 1.0 - (e.membership() + e.hesitancy() + e.non_membership());
    return refusal < 0.0 ? 0.0 : refusal;
}

ReliabilityQbpa to_reliability(const PictureFuzzyElement& e) {
    return {ComplexAmplitude(std::sqrt(e.membership()), 0.0),
            ComplexAmplitude(std::sqrt(e.non_membership()), 0.0),
            ComplexAmplitude(std::sqrt(e.hesitancy()), 0.0),
            ComplexAmplitude(std::sqrt(pfs_refusal(e)), 0.0)};
}

HesitancySplit dhdf(const ReliabilityQbpa& m2) {
    const double p = m2.y.probability();
    const double q = m2.n.probability();
    if (m2.h.is_zero()) {
        if (p + q == 0.0) return {};
        const double denom = p + q + 2.0 * p * q;
        return {{}, {}, p / denom, q / denom};
    }
    if (p + q == 0.0) {
        throw Error("undistributable hesitancy");
    }
    const double denom = p + q + 2.0 * p * q;
    HesitancySplit split;
    split.ratio_yes = p / denom;
    split.ratio_no = q / denom;
    split.to_yes = ComplexAmplitude(split.ratio_yes * m2.h.magnitude(), m2.h.phase());
    split.to_no = ComplexAmplitude(split.ratio_no * m2.h.magnitude(), m2.h.phase());
    return split;
}

PignisticCoefficients pignistic_coefficients(const ReliabilityQbpa& m2) {
    const double p2 = m2.y.probability() * m2.y.probability();
    const double q2 = m2.n.probability() * m2.n.probability();
    if (p2 + q2 == 0.0) {
        throw Error("undefined pignistic ratio");
    }
    return {std::sqrt(p2 / (p2 + q2)), std::sqrt(q2 / (p2 + q2))};
}

RedistributedReliability qpdr(const ReliabilityQbpa& m2, const HesitancySplit& split) {
    const auto c = pignistic_coefficients(m2);
    RedistributedReliability out;
    out.zy = c.yes * split.to_yes + m2.y;
    out.zn = c.no * split.to_no + m2.n;
    const double residual = split.residual_ratio();
    out.residual_h = m2.h.is_zero() ? ComplexAmplitude{}
                                    : ComplexAmplitude(residual * m2.h.magnitude(), m2.h.phase());
    out.r = m2.r;
    return out;
}

RedistributedReliability redistribute(const ReliabilityQbpa& m2) { return qpdr(m2, dhdf(m2)); }

}  // namespace qfuse
