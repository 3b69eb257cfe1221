#pragma once

#include <complex>

namespace qfuse {

using Complex = std::complex<double>;

// Maps any finite angle into (-pi, pi].
double canonical_phase(double phase);

// Polar complex mass value psi * e^{i theta}. Magnitude is non-negative and the
// phase is kept in (-pi, pi]. Arithmetic goes through rectangular form.
class ComplexAmplitude {
public:
    ComplexAmplitude() = default;
    ComplexAmplitude(double magnitude, double phase);

    static ComplexAmplitude from_complex(Complex z);

    double magnitude() const { return magnitude_; }
    double phase() const { return phase_; }

    // psi^2, the classic probability carried by this amplitude.
    double probability() const { return magnitude_ * magnitude_; }

    Complex to_complex() const { return std::polar(magnitude_, phase_); }

    bool is_zero() const { return magnitude_ == 0.0; }

    friend bool operator==(const ComplexAmplitude&, const ComplexAmplitude&) = default;

private:
    double magnitude_ = 0.0;
    double phase_ = 0.0;
};

ComplexAmplitude operator+(const ComplexAmplitude& a, const ComplexAmplitude& b);
ComplexAmplitude operator*(const ComplexAmplitude& a, const ComplexAmplitude& b);
ComplexAmplitude operator*(double scale, const ComplexAmplitude& a);

}  // namespace qfuse
