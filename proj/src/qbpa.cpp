#include "qfuse/qbpa.hpp"

#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "qfuse/error.hpp"

namespace qfuse {

Qbpa::Qbpa(Frame frame, MassMap masses) : frame_(std::move(frame)), masses_(std::move(masses)) {
    for (const auto& [s, a] : masses_) {
        if (!frame_.contains(s)) {
            throw ValidationError("focal set is not a subset of the frame");
        }
    }
}

ComplexAmplitude Qbpa::at(FocalSet s) const {
    const auto it = masses_.find(s);
    return it == masses_.end() ? ComplexAmplitude{} : it->second;
}

void Qbpa::set(FocalSet s, ComplexAmplitude a) {
    if (!frame_.contains(s)) {
        throw ValidationError("focal set is not a subset of the frame");
    }
    masses_.insert_or_assign(s, a);
}

double Qbpa::total_probability() const {
    double sum = 0.0;
    for (const auto& [s, a] : masses_) sum += a.probability();
    return sum;
}

double classic_probability(const Qbpa& q, FocalSet s) { return q.at(s).probability(); }

ValidationReport validate(const Qbpa& q, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw ValidationError("validation tolerance must be positive");
    }
    ValidationReport report;
    report.probability_sum = q.total_probability();
    for (const auto& [s, a] : q.masses()) {
        if (!q.frame().contains(s)) {
            report.violations.push_back("focal set " + q.frame().name(s) + " outside frame");
        }
    }
    if (std::abs(report.probability_sum - 1.0) > tolerance) {
        std::ostringstream msg;
        msg << std::setprecision(12) << "sum of squared magnitudes is " << report.probability_sum
            << ", expected 1 within " << tolerance;
        report.violations.push_back(msg.str());
    }
    return report;
}

Qbpa normalize(const Qbpa& raw) {
    const double total = raw.total_probability();
    if (!(total > 0.0)) {
        throw Error("degenerate body");
    }
    const double scale = std::sqrt(total);
    Qbpa::MassMap out;
    for (const auto& [s, a] : raw.masses()) {
        out.emplace(s, ComplexAmplitude(a.magnitude() / scale, a.phase()));
    }
    return Qbpa(raw.frame(), std::move(out));
}

Combination dempster_combine(const Qbpa& q1, const Qbpa& q2) {
    if (!(q1.frame() == q2.frame())) {
        throw ValidationError("cannot combine bodies over different frames");
    }
    // Visit unordered key pairs in canonical order and add the two cross
    // products of a pair together first, so swapping q1 and q2 yields the
    // same floating-point operations.
    std::set<FocalSet> keys;
    for (const auto& [s, a] : q1.masses()) keys.insert(s);
    for (const auto& [s, a] : q2.masses()) keys.insert(s);
    const std::vector<FocalSet> ordered(keys.begin(), keys.end());

    std::map<FocalSet, Complex> raw;
    double conflict = 0.0;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        for (std::size_t j = i; j < ordered.size(); ++j) {
            const FocalSet b = ordered[i];
            const FocalSet c = ordered[j];
            Complex term = q1.at(b).to_complex() * q2.at(c).to_complex();
            double term_conflict = std::norm(term);
            if (i != j) {
                const Complex swapped = q1.at(c).to_complex() * q2.at(b).to_complex();
                term_conflict = term_conflict + std::norm(swapped);
                term = term + swapped;
            }
            const std::uint64_t meet = b.bits() & c.bits();
            if (meet == 0) {
                conflict += term_conflict;
            } else {
                raw[FocalSet(meet)] += term;
            }
        }
    }

    Qbpa::MassMap masses;
    for (const auto& [s, z] : raw) {
        masses.emplace(s, ComplexAmplitude::from_complex(z));
    }
    Qbpa body(q1.frame(), std::move(masses));
    if (!(body.total_probability() > 0.0)) {
        throw Error("complete conflict");
    }
    return {normalize(body), conflict};
}

Qbpa self_combine(const Qbpa& q, std::size_t k) {
    Qbpa acc = q;
    for (std::size_t i = 0; i < k; ++i) {
        acc = dempster_combine(acc, q).body;
    }
    return acc;
}

}  // namespace qfuse
