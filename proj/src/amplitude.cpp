#include "qfuse/amplitude.hpp"

#include <cmath>
#include <numbers>

#include "qfuse/error.hpp"

namespace qfuse {

double canonical_phase(double phase) {
    if (!std::isfinite(phase)) {
        throw ValidationError("phase must be finite");
    }
    constexpr double pi = std::numbers::pi;
    if (phase > -pi && phase <= pi) {
        return phase;
    }
    double wrapped = std::remainder(phase, 2.0 * pi);  // [-pi, pi]
    if (wrapped <= -pi) {
        wrapped += 2.0 * pi;
    }
    return wrapped;
}

ComplexAmplitude::ComplexAmplitude(double magnitude, double phase)
    : magnitude_(magnitude), phase_(canonical_phase(phase)) {
    if (!(magnitude >= 0.0) || !std::isfinite(magnitude)) {
        throw ValidationError("amplitude magnitude must be finite and non-negative");
    }
}

ComplexAmplitude ComplexAmplitude::from_complex(Complex z) {
    const double magnitude = std::abs(z);
    if (magnitude == 0.0) {
        return {};
    }
    return {magnitude, std::arg(z)};
}

ComplexAmplitude operator+(const ComplexAmplitude& a, const ComplexAmplitude& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    return ComplexAmplitude::from_complex(a.to_complex() + b.to_complex());
}

ComplexAmplitude operator*(const ComplexAmplitude& a, const ComplexAmplitude& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.magnitude() * b.magnitude(), a.phase() + b.phase()};
}

ComplexAmplitude operator*(double scale, const ComplexAmplitude& a) {
    return ComplexAmplitude::from_complex(scale * a.to_complex());
}

}  // namespace qfuse
