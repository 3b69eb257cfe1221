#include "qfuse/tdqbf.hpp"

#include "qfuse/error.hpp"

namespace qfuse {

SubsetPartition multisubset_partition(const Frame& frame, const std::set<FocalSet>& keys) {
    SubsetPartition out;
    const FocalSet full = frame.full();
    for (const FocalSet s : keys) {
        if (!frame.contains(s)) {
            throw ValidationError("focal set outside frame");
        }
        if (s.size() == 1) {
            out.singletons.push_back(s);
        } else if (s == full) {
            out.theta = s;
        } else {
            out.multisubsets.push_back(s);
        }
    }
    return out;
}

FusedBody combine_tdqbf(const Tdqbf& t) {
    const Qbpa& m1 = t.m1;
    const Frame& frame = m1.frame();
    const Complex y = t.m2.zy.to_complex();
    const Complex n = t.m2.zn.to_complex();
    const Complex r = t.m2.r.to_complex();

    std::set<FocalSet> keys;
    for (const auto& [s, a] : m1.masses()) keys.insert(s);
    for (std::size_t i = 0; i < frame.size(); ++i) keys.insert(FocalSet::singleton(i));
    const SubsetPartition parts = multisubset_partition(frame, keys);

    const Complex theta_mass = parts.theta ? m1.at(*parts.theta).to_complex() : Complex{};

    Qbpa raw(frame);
    for (const FocalSet x : parts.singletons) {
        const Complex mx = m1.at(x).to_complex();
        Complex sum = mx * y + (1.0 - mx) * n;
        for (const FocalSet a : parts.multisubsets) {
            const Complex ma = m1.at(a).to_complex();
            sum += x.is_subset_of(a) ? ma * y : ma * n;
        }
        raw.set(x, ComplexAmplitude::from_complex(sum));
    }
    for (const FocalSet a : parts.multisubsets) {
        raw.set(a, ComplexAmplitude::from_complex(m1.at(a).to_complex() * y + theta_mass * y));
    }
    if (parts.theta) {
        raw.set(*parts.theta, ComplexAmplitude::from_complex(theta_mass * r));
    }

    const double total = raw.total_probability();
    if (!(total > 0.0)) {
        throw Error("annihilating fusion");
    }
    return {raw, normalize(raw), total};
}

}  // namespace qfuse
