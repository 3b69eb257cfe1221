#pragma once

#include "qfuse/amplitude.hpp"

namespace qfuse {

// Picture fuzzy element: membership u, hesitancy (neutral) eps and
// non-membership v with u + eps + v <= 1. The remainder is refusal.
class PictureFuzzyElement {
public:
    PictureFuzzyElement(double membership, double hesitancy, double non_membership);

    double membership() const { return membership_; }
    double hesitancy() const { return hesitancy_; }
    double non_membership() const { return non_membership_; }

private:
    double membership_;
    double hesitancy_;
    double non_membership_;
};

double pfs_refusal(const PictureFuzzyElement& e);

// Reliability body over the fixed frame {Y, N, H, R}: support, opposition,
// hesitancy and refusal.
struct ReliabilityQbpa {
    ComplexAmplitude y;
    ComplexAmplitude n;
    ComplexAmplitude h;
    ComplexAmplitude r;

    double total_probability() const {
        return y.probability() + n.probability() + h.probability() + r.probability();
    }

    friend bool operator==(const ReliabilityQbpa&, const ReliabilityQbpa&) = default;
};

// Phase-zero embedding with psi^2 equal to the fuzzy grades.
ReliabilityQbpa to_reliability(const PictureFuzzyElement& e);

struct HesitancySplit {
    ComplexAmplitude to_yes;  // m_Y(H)
    ComplexAmplitude to_no;   // m_N(H)
    double ratio_yes = 0.0;
    double ratio_no = 0.0;

    double residual_ratio() const { return 1.0 - ratio_yes - ratio_no; }
};

// Dynamic hesitancy distribution. With p = psi_Y^2 and q = psi_N^2 the ratios
// are p / (p + q + 2pq) and q / (p + q + 2pq); H keeps its phase.
HesitancySplit dhdf(const ReliabilityQbpa& m2);

struct RedistributedReliability {
    ComplexAmplitude zy;          // m_Z(Y)
    ComplexAmplitude zn;          // m_Z(N)
    ComplexAmplitude residual_h;  // hesitancy left after the split
    ComplexAmplitude r;           // refusal, copied through

    friend bool operator==(const RedistributedReliability&,
                           const RedistributedReliability&) = default;
};

// sqrt(p^2 / (p^2 + q^2)) and sqrt(q^2 / (p^2 + q^2)); squares sum to 1.
struct PignisticCoefficients {
    double yes;
    double no;
};
PignisticCoefficients pignistic_coefficients(const ReliabilityQbpa& m2);

// Quantum pignistic redistribution of a DHDF split back onto Y and N.
RedistributedReliability qpdr(const ReliabilityQbpa& m2, const HesitancySplit& split);

// dhdf followed by qpdr.
RedistributedReliability redistribute(const ReliabilityQbpa& m2);

}  // namespace qfuse
