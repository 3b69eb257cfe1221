#pragma once

#include <map>
#include <string>
#include <vector>

#include "qfuse/amplitude.hpp"
#include "qfuse/frame.hpp"

namespace qfuse {

inline constexpr double kValidationTolerance = 1e-9;
inline constexpr double kReportTolerance = 1e-3;
inline constexpr double kAlgebraTolerance = 1e-12;

// Quantum basic probability assignment: focal sets of one frame mapped to
// complex amplitudes. The container itself does not force sum(psi^2) == 1 so
// that raw intermediate bodies can be represented; `validate` checks it.
class Qbpa {
public:
    using MassMap = std::map<FocalSet, ComplexAmplitude>;

    explicit Qbpa(Frame frame, MassMap masses = {});

    const Frame& frame() const { return frame_; }
    const MassMap& masses() const { return masses_; }

    // Absent keys read as zero amplitude.
    ComplexAmplitude at(FocalSet s) const;
    bool contains(FocalSet s) const { return masses_.count(s) != 0; }

    void set(FocalSet s, ComplexAmplitude a);

    double total_probability() const;

    friend bool operator==(const Qbpa&, const Qbpa&) = default;

private:
    Frame frame_;
    MassMap masses_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    double probability_sum = 0.0;

    bool ok() const { return violations.empty(); }
};

// Squared magnitude of the stored amplitude; zero when `s` is absent.
double classic_probability(const Qbpa& q, FocalSet s);

ValidationReport validate(const Qbpa& q, double tolerance = kValidationTolerance);

// Divides every magnitude by sqrt(sum psi^2); phases are kept.
Qbpa normalize(const Qbpa& raw);

struct Combination {
    Qbpa body;
    double conflict = 0.0;  // sum of |Q1(B) Q2(C)|^2 over disjoint B, C
};

// Quantum Dempster rule: complex products summed per intersection, then
// amplitude renormalization. Symmetric in its arguments bit for bit.
Combination dempster_combine(const Qbpa& q1, const Qbpa& q2);

// Left fold of k + 1 copies of q through dempster_combine.
Qbpa self_combine(const Qbpa& q, std::size_t k);

}  // namespace qfuse
