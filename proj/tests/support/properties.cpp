#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "published_tables.hpp"
#include "qfuse/error.hpp"
#include "qfuse/pipeline.hpp"
#include "qfuse/tdqbf.hpp"
#include "qfuse/xg_rules.hpp"

#ifndef QFUSE_DATA_DIR
#error "QFUSE_DATA_DIR must point at the bundled datasets"
#endif

namespace props {

using namespace qfuse;
using gen::Rng;

namespace {

std::string str(double x) {
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

bool canonical(double phase) { return phase > -std::numbers::pi && phase <= std::numbers::pi; }

oracle::RealMasses classic_masses(const Qbpa& q) {
    oracle::RealMasses out;
    for (const auto& [s, a] : q.masses()) out[s.bits()] = a.probability();
    return out;
}

oracle::ComplexMasses complex_masses(const Qbpa& q) {
    oracle::ComplexMasses out;
    for (const auto& [s, a] : q.masses()) out[s.bits()] = a.to_complex();
    return out;
}

// --------------------------------------------------------------- qbpa_core

Result i1_closure(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const Frame f = gen::frame(rng, 1, 4);
        Qbpa raw(f);
        for (const auto s : gen::focal_sets(rng, f, 6)) {
            raw.set(s, ComplexAmplitude(gen::uniform(rng, 0.01, 10.0), gen::uniform(rng, -4, 4)));
        }
        const Qbpa a = gen::body(rng, f, true);
        const Qbpa b = gen::body(rng, f, true);
        const auto k = static_cast<std::size_t>(gen::integer(rng, 0, 4));
        try {
            for (const Qbpa& q : {normalize(raw), dempster_combine(a, b).body, self_combine(a, k)}) {
                const double dev = std::abs(q.total_probability() - 1.0);
                if (dev > kAlgebraTolerance) r.fail("sum psi^2 off by " + str(dev));
            }
        } catch (const Error&) {
            // Complete conflict between a and b is legitimate; closure is
            // about returned bodies only.
        }
    }
    return r;
}

Result i2_non_additive(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    const ComplexAmplitude a(1.0, 0.0);
    const ComplexAmplitude b(1.0, std::numbers::pi);
    if (!((a + b).magnitude() < 1e-12 && a.magnitude() + b.magnitude() == 2.0)) {
        r.fail("1∠0 + 1∠π did not cancel");
    }
    ++r.cases;
    int witnesses = 0;
    for (int c = 1; c < cases; ++c, ++r.cases) {
        const ComplexAmplitude x(gen::uniform(rng, 0.1, 1), gen::uniform(rng, -3, 3));
        const ComplexAmplitude y(gen::uniform(rng, 0.1, 1), gen::uniform(rng, -3, 3));
        const double sum = (x + y).magnitude();
        if (sum > x.magnitude() + y.magnitude() + 1e-12) r.fail("triangle inequality broken");
        if (std::abs(sum - (x.magnitude() + y.magnitude())) > 1e-9) ++witnesses;
    }
    if (witnesses == 0) r.fail("no non-additive pair found");
    return r;
}

Result i3_degeneration(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const Frame f = gen::frame(rng, 1, 4);
        const Qbpa a = gen::body(rng, f, false);
        const Qbpa b = gen::body(rng, f, false);
        const auto expected = oracle::classical_dempster(classic_masses(a), classic_masses(b));
        if (expected.empty()) continue;  // total conflict, nothing to compare
        const Qbpa got = dempster_combine(a, b).body;
        for (const auto& [mask, p] : expected) {
            const double d = std::abs(classic_probability(got, FocalSet(mask)) - p);
            if (d > 1e-10) {
                r.fail("case " + std::to_string(c) + ": focal " + f.name(FocalSet(mask)) +
                       " quantum psi^2 " + str(classic_probability(got, FocalSet(mask))) +
                       " vs classical " + str(p));
            }
        }
    }
    return r;
}

Result i4_commutative(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const Frame f = gen::frame(rng, 1, 4);
        const Qbpa a = gen::body(rng, f, true);
        const Qbpa b = gen::body(rng, f, true);
        try {
            const auto ab = dempster_combine(a, b);
            const auto ba = dempster_combine(b, a);
            if (!(ab.body == ba.body) || ab.conflict != ba.conflict) {
                r.fail("case " + std::to_string(c) + " differs between argument orders");
            }
        } catch (const Error&) {
            bool threw = false;
            try {
                dempster_combine(b, a);
            } catch (const Error&) {
                threw = true;
            }
            if (!threw) r.fail("conflict detected in one argument order only");
        }
    }
    return r;
}

Result i5_phases(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const ComplexAmplitude a(1.0, gen::uniform(rng, -50.0, 50.0));
        if (!canonical(a.phase())) r.fail("constructor left phase " + str(a.phase()));
        const Frame f = gen::frame(rng, 1, 4);
        const Qbpa x = gen::body(rng, f, true);
        const Qbpa y = gen::body(rng, f, true);
        try {
            const Qbpa combined = dempster_combine(x, y).body;
            for (const auto& [s, v] : combined.masses()) {
                if (!canonical(v.phase())) r.fail("combined phase " + str(v.phase()));
            }
        } catch (const Error&) {
        }
    }
    if (ComplexAmplitude(1.0, -std::numbers::pi).phase() != std::numbers::pi) {
        r.fail("-pi must map to +pi");
    }
    return r;
}

// ------------------------------------------------------------ ordinal_frame

Result i6_phase_kept(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const auto ev = gen::timed_evidence(rng, gen::frame(rng, 1, 4), true);
        std::vector<double> w;
        for (std::size_t i = 0; i < ev.propositions().size(); ++i) w.push_back(gen::uniform(rng, 0.1, 5));
        const Qbpa out = apply_time_rule(ev, w);
        for (const auto& p : ev.propositions()) {
            if (out.at(p.focal).phase() != p.amplitude.phase()) r.fail("phase changed");
        }
    }
    return r;
}

Result i7_equal_weights(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const auto ev = gen::timed_evidence(rng, gen::frame(rng, 1, 4), true);
        const std::vector<double> w(ev.propositions().size(), gen::uniform(rng, 0.1, 5));
        const Qbpa out = apply_time_rule(ev, w);
        const auto& p = ev.propositions();
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (p[i].amplitude.magnitude() < p[j].amplitude.magnitude() &&
                    !(out.at(p[i].focal).magnitude() <= out.at(p[j].focal).magnitude())) {
                    r.fail("ranking changed under equal weights");
                }
            }
        }
    }
    return r;
}

Result i8_time_valid(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const auto ev = gen::timed_evidence(rng, gen::frame(rng, 1, 4), true);
        const ConnectionGrades g{gen::uniform(rng, 2, 3), gen::uniform(rng, 1, 2), gen::uniform(rng, 0.1, 1)};
        const Qbpa out = apply_time_rule(ev, time_weights(ev, IntervalPolicy::per_evidence_minmax(), g));
        if (!validate(out, kAlgebraTolerance).ok()) r.fail("time rule output not normalized");
    }
    return r;
}

Result i9_monotone(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const auto ev = gen::timed_evidence(rng, gen::frame(rng, 2, 4), true);
        const auto& p = ev.propositions();
        if (p.size() < 2) {  // a lone proposition always holds the whole share
            --c;
            --r.cases;
            continue;
        }
        std::vector<double> w;
        for (std::size_t i = 0; i < p.size(); ++i) w.push_back(gen::uniform(rng, 0.1, 5));
        const Qbpa before = apply_time_rule(ev, w);
        const auto k = static_cast<std::size_t>(gen::integer(rng, 0, static_cast<int>(p.size()) - 1));
        w[k] *= gen::uniform(rng, 1.01, 3.0);
        const Qbpa after = apply_time_rule(ev, w);
        if (!(after.at(p[k].focal).probability() > before.at(p[k].focal).probability())) {
            r.fail("case " + std::to_string(c) + ": raised weight did not raise its share (" + std::to_string(p.size()) + " propositions, " + str(before.at(p[k].focal).probability()) + " -> " + str(after.at(p[k].focal).probability()) + ")");
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i != k && after.at(p[i].focal).probability() > before.at(p[i].focal).probability() + 1e-15) {
                r.fail("another share grew");
            }
        }
    }
    return r;
}

// ---------------------------------------------------------- pictorial_check

Result i10_conservation(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const auto m2 = gen::reliability(rng, true);
        if (m2.h.is_zero()) continue;
        const auto coef = pignistic_coefficients(m2);
        if (std::abs(coef.yes * coef.yes + coef.no * coef.no - 1.0) > 1e-12) {
            r.fail("coefficient squares do not sum to 1");
        }
        const double split = (coef.yes * m2.h).probability() + (coef.no * m2.h).probability();
        if (std::abs(split - m2.h.probability()) > 1e-12) r.fail("quantum probability lost");
    }
    return r;
}

Result i11_reduction(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const auto m2 = gen::reliability(rng, true);
        if (m2.h.is_zero()) continue;
        const auto z = redistribute(m2);
        if (!(z.residual_h.magnitude() < m2.h.magnitude())) r.fail("hesitancy not reduced");
    }
    return r;
}

Result i12_refusal_kept(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const auto m2 = gen::reliability(rng, true);
        if (!(redistribute(m2).r == m2.r)) r.fail("R changed");
    }
    return r;
}

Result i13_residual_goldens(std::uint64_t, int) {
    Result r;
    const std::pair<const char*, const std::vector<double>*> sets[] = {
        {"application1", &tables::kResidualH1}, {"application2", &tables::kResidualH2}};
    for (const auto& [name, expected] : sets) {
        const auto data = bundled(name);
        if (data.evidences.size() != expected->size()) {
            r.fail(std::string(name) + ": evidence count mismatch");
            continue;
        }
        for (std::size_t i = 0; i < expected->size(); ++i, ++r.cases) {
            const auto split = dhdf(data.evidences[i].reliability);
            const double residual = split.residual_ratio() * data.evidences[i].reliability.h.magnitude();
            if (std::abs(residual - (*expected)[i]) > 1e-3) {
                r.fail(std::string(name) + " " + data.evidences[i].id + ": residual H " + str(residual) +
                       " vs printed " + str((*expected)[i]));
            }
        }
    }
    return r;
}

Result i14_fixpoint(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        auto m2 = gen::reliability(rng, true);
        m2.h = ComplexAmplitude{};
        const auto z = redistribute(m2);
        if (!(z.zy == m2.y && z.zn == m2.n)) r.fail("zero hesitancy moved Y or N");
    }
    return r;
}

// -------------------------------------------------------------------- tdqbf

RedistributedReliability random_redistributed(Rng& rng, bool with_phase) {
    return redistribute(gen::reliability(rng, with_phase));
}

Result i15_oracle(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const Frame f = gen::frame(rng, 1, 3);
        const Qbpa m1 = gen::body(rng, f, true);
        const auto m2 = random_redistributed(rng, true);
        FusedBody fused{Qbpa(f), Qbpa(f), 0.0};
        try {
            fused = combine_tdqbf({m1, m2});
        } catch (const Error&) {
            continue;
        }
        const auto expected = oracle::tdqbf_direct(static_cast<int>(f.size()), complex_masses(m1),
                                                   m2.zy.to_complex(), m2.zn.to_complex(),
                                                   m2.r.to_complex());
        if (expected.size() != fused.raw.masses().size()) {
            r.fail("case " + std::to_string(c) + ": key sets differ");
            continue;
        }
        for (const auto& [mask, z] : expected) {
            const double d = std::abs(fused.raw.at(FocalSet(mask)).to_complex() - z);
            if (d > 1e-12) r.fail("case " + std::to_string(c) + ": deviation " + str(d));
        }
    }
    return r;
}

Result i16_damping(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const Frame f = gen::frame(rng, 2, 4);
        Qbpa m1 = gen::body(rng, f, true);
        m1.set(f.full(), ComplexAmplitude(gen::uniform(rng, 0.05, 1), gen::uniform(rng, -3, 3)));
        m1 = normalize(m1);
        const auto m2 = random_redistributed(rng, true);
        if (m2.r.magnitude() > 1.0) r.fail("|m_Z(R)| above 1");
        const auto fused = combine_tdqbf({m1, m2});
        const double raw_theta = fused.raw.at(f.full()).magnitude();
        if (raw_theta > m1.at(f.full()).magnitude() * m2.r.magnitude() + 1e-12) {
            r.fail("raw Theta exceeds m1(Theta) |R|");
        }
    }
    return r;
}

Result i17_support_monotone(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const Frame f = gen::frame(rng, 2, 4);
        Qbpa m1 = gen::body(rng, f, false);
        m1.set(f.full(), ComplexAmplitude(gen::uniform(rng, 0.05, 1), 0.0));
        m1 = normalize(m1);
        auto m2 = random_redistributed(rng, false);
        const auto before = combine_tdqbf({m1, m2});
        m2.zy = ComplexAmplitude(m2.zy.magnitude() * gen::uniform(rng, 1.01, 2.0), m2.zy.phase());
        const auto after = combine_tdqbf({m1, m2});
        const double theta_before = before.raw.at(f.full()).magnitude();
        const double theta_after = after.raw.at(f.full()).magnitude();
        for (std::size_t i = 0; i < f.size(); ++i) {
            const FocalSet x = FocalSet::singleton(i);
            const double rb = before.raw.at(x).magnitude() / theta_before;
            const double ra = after.raw.at(x).magnitude() / theta_after;
            if (ra < rb * (1.0 - 1e-12)) r.fail("singleton share fell as support grew");
        }
    }
    return r;
}

// ----------------------------------------------------------------- xg_rules

Result i18_argmax(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const Frame f = gen::frame(rng, 2, 4);
        const Qbpa nor_body = gen::singleton_body(rng, f, false);
        auto argmax = [](const Qbpa& q) {
            return std::max_element(q.masses().begin(), q.masses().end(), [](const auto& a, const auto& b) {
                       return a.second.magnitude() < b.second.magnitude();
                   })->first;
        };
        const int n = gen::integer(rng, 1, 6);
        if (!(argmax(self_combine(nor_body, static_cast<std::size_t>(n - 1))) == argmax(nor_body))) {
            r.fail("argmax moved");
        }
    }
    return r;
}

Result i19_concentration(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const Frame f = gen::frame(rng, 2, 4);
        const Qbpa nor_body = gen::singleton_body(rng, f, false);
        std::vector<double> psi;
        for (const auto& [s, a] : nor_body.masses()) psi.push_back(a.magnitude());
        double previous = 0.0;
        for (int n = 1; n <= 6; ++n) {
            const Qbpa fin = self_combine(nor_body, static_cast<std::size_t>(n - 1));
            const auto expected = oracle::power_normalize(psi, n);
            double top = 0.0;
            std::size_t i = 0;
            for (const auto& [s, a] : fin.masses()) {
                if (std::abs(a.probability() - expected[i]) > 1e-10) r.fail("disagrees with power oracle");
                top = std::max(top, a.probability());
                ++i;
            }
            if (top < previous - 1e-15) r.fail("maximum fell with n");
            previous = top;
        }
    }
    return r;
}

Result i20_bands(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    const std::pair<double, const char*> points[] = {
        {0.25, "Ignorable event"},          {0.5, "More or less ignorable event"},
        {0.999, "More or less ignorable event"}, {1.0, "Normal event"},
        {1.5, "More or less urgent event"},  {2.0, "Urgent event"},
        {2.25, "Quite urgent event"},        {2.5, "Very urgent event"},
        {3.0, "Quite very urgent event"},    {3.1741, "Quite very urgent event"},
        {4.999, "Quite very urgent event"},  {5.0, "Very very urgent event"},
        {100.0, "Very very urgent event"}};
    for (const auto& [e, label] : points) {
        ++r.cases;
        if (grade_label(e) != label) r.fail(str(e) + " labelled " + grade_label(e));
    }
    const std::vector<std::string> order = {
        "Ignorable event",         "More or less ignorable event", "Normal event",
        "More or less urgent event", "Urgent event",                "Quite urgent event",
        "Very urgent event",       "Quite very urgent event",      "Very very urgent event"};
    auto rank = [&](const std::string& l) { return std::find(order.begin(), order.end(), l) - order.begin(); };
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const double a = gen::uniform(rng, 1e-6, 8.0);
        const double b = gen::uniform(rng, 1e-6, 8.0);
        const auto la = grade_label(std::min(a, b));
        const auto lb = grade_label(std::max(a, b));
        if (rank(la) > rank(lb)) r.fail("bands not monotone");
    }
    return r;
}

Result i21_scale_invariance(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    for (int c = 0; c < cases; ++c, ++r.cases) {
        const auto set = gen::evidence_set(rng, 3, 4);
        const auto report = run_pipeline(set, PipelineConfig{});
        std::vector<FusedBody> fused;
        std::vector<UrgencyGrade> scaled;
        const double k = gen::uniform(rng, 0.05, 20.0);
        for (const auto& e : report.evidences) {
            fused.push_back(e.fused);
            scaled.push_back({e.urgency.exponent * k, ""});
        }
        const auto again = xg_fuse(fused, scaled);
        for (const auto& [s, a] : report.final.nor.masses()) {
            const double d = std::abs(again.nor.at(s).to_complex() - a.to_complex());
            if (d > 1e-12) r.fail("nor moved by " + str(d) + " under scaling by " + str(k));
        }
        for (const auto& [s, a] : report.final.fin.masses()) {
            if (std::abs(again.fin.at(s).probability() - a.probability()) > 1e-10) r.fail("fin moved");
        }
    }
    return r;
}

// ------------------------------------------------------------- pipeline_cli

Result i22_conservation(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    auto check = [&](const RunReport& report, const std::string& what) {
        double sum = 0.0;
        for (const auto& [s, p] : report.final.classic) sum += p;
        if (std::abs(sum - 1.0) > 1e-9) r.fail(what + ": classic sum " + str(sum));
    };
    for (const char* name : {"application1", "application2"}) {
        check(run_pipeline(bundled(name), PipelineConfig{}), name);
        ++r.cases;
    }
    for (int c = 0; c < cases; ++c, ++r.cases) {
        check(run_pipeline(gen::evidence_set(rng, 4, 5), PipelineConfig{}), "random " + std::to_string(c));
    }
    return r;
}

Result i23_isolation(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Result r;
    auto replay = [&](const EvidenceSet& set) {
        const PipelineConfig cfg;
        const auto report = run_pipeline(set, cfg);
        std::vector<FusedBody> fused;
        std::vector<UrgencyGrade> grades;
        for (std::size_t i = 0; i < set.evidences.size(); ++i) {
            const auto& rec = set.evidences[i];
            const auto& st = report.evidences[i];
            if (time_weights(rec.evidence, cfg.policy, cfg.grades) != st.time_weights) r.fail("time weights");
            if (!(apply_time_rule(rec.evidence, st.time_weights) == st.time_modified)) r.fail("time rule");
            const auto split = dhdf(st.reliability);
            if (!(split.to_yes == st.split.to_yes && split.to_no == st.split.to_no &&
                  split.ratio_yes == st.split.ratio_yes && split.ratio_no == st.split.ratio_no)) {
                r.fail("dhdf");
            }
            if (!(qpdr(st.reliability, st.split) == st.redistributed)) r.fail("qpdr");
            const auto f = combine_tdqbf({st.time_modified, st.redistributed});
            if (!(f.raw == st.fused.raw && f.body == st.fused.body)) r.fail("tdqbf");
            fused.push_back(st.fused);
            grades.push_back(st.urgency);
        }
        const auto fin = xg_fuse(fused, grades);
        if (!(fin.fin == report.final.fin && fin.nor == report.final.nor)) r.fail("xg");
        if (report.baseline && !(run_baseline(set).body == report.baseline->body)) r.fail("baseline");
    };
    for (const char* name : {"application1", "application2"}) {
        replay(bundled(name));
        ++r.cases;
    }
    for (int c = 0; c < cases; ++c, ++r.cases) replay(gen::evidence_set(rng, 4, 4));
    return r;
}

Result i24_fidelity(std::uint64_t, int) {
    Result r;
    const std::pair<const char*, const std::vector<tables::Row>*> sets[] = {
        {"application1", &tables::kApplication1}, {"application2", &tables::kApplication2}};
    auto near4 = [](double a, double b) { return std::abs(a - b) < 5e-5; };
    for (const auto& [name, rows] : sets) {
        const auto data = bundled(name);
        // Re-serialize and ingest again: the round trip must be lossless.
        const auto again = parse_evidence(evidence_to_json(data));
        if (data.evidences.size() != rows->size()) {
            r.fail(std::string(name) + ": evidence count");
            continue;
        }
        for (std::size_t i = 0; i < rows->size(); ++i) {
            const auto& row = (*rows)[i];
            for (const auto* rec : {&data.evidences[i], &again.evidences[i]}) {
                ++r.cases;
                const std::string at = std::string(name) + " " + rec->id;
                if (!near4(rec->urgency.exponent, row.urgency)) r.fail(at + ": urgency");
                const ComplexAmplitude rel[] = {rec->reliability.y, rec->reliability.n,
                                                rec->reliability.h, rec->reliability.r};
                for (int k = 0; k < 4; ++k) {
                    if (!near4(rel[k].magnitude(), row.reliability[k].mag) ||
                        !near4(rel[k].phase(), row.reliability[k].phase)) {
                        r.fail(at + ": reliability column " + std::to_string(k));
                    }
                }
                const auto& props = rec->evidence.propositions();
                if (props.size() != row.propositions.size()) {
                    r.fail(at + ": proposition count");
                    continue;
                }
                for (const auto& cell : row.propositions) {
                    const auto it = std::find_if(props.begin(), props.end(), [&](const TimedProposition& p) {
                        return data.frame.name(p.focal) == cell.focal;
                    });
                    if (it == props.end()) {
                        r.fail(at + ": missing " + cell.focal);
                        continue;
                    }
                    if (!near4(it->amplitude.magnitude(), cell.mag) || !near4(it->amplitude.phase(), cell.phase) ||
                        !near4(it->moment, cell.moment)) {
                        r.fail(at + ": cell " + cell.focal);
                    }
                }
            }
            if (!(data.evidences[i].evidence.body() == again.evidences[i].evidence.body())) {
                r.fail(std::string(name) + ": round trip changed a body");
            }
        }
    }
    return r;
}

}  // namespace

EvidenceSet bundled(const std::string& name) {
    return ingest(std::string(QFUSE_DATA_DIR) + "/" + name + ".json");
}

const std::vector<Property>& all() {
    static const std::vector<Property> registry = {
        {"I1", "normalization closure", i1_closure},
        {"I2", "non-additivity witness", i2_non_additive},
        {"I3", "classical degeneration of the combiner", i3_degeneration},
        {"I4", "commutativity", i4_commutative},
        {"I5", "phase canonicalization", i5_phases},
        {"I6", "time rule keeps phases", i6_phase_kept},
        {"I7", "order preserved under equal weights", i7_equal_weights},
        {"I8", "time rule output validity", i8_time_valid},
        {"I9", "weight monotonicity", i9_monotone},
        {"I10", "pignistic split conserves quantum probability", i10_conservation},
        {"I11", "hesitancy reduction", i11_reduction},
        {"I12", "refusal untouched", i12_refusal_kept},
        {"I13", "residual hesitancy goldens", i13_residual_goldens},
        {"I14", "zero-hesitancy fixpoint", i14_fixpoint},
        {"I15", "TDQBF direct-summation oracle", i15_oracle},
        {"I16", "uncertainty damping", i16_damping},
        {"I17", "singleton monotonicity in support (phase-zero)", i17_support_monotone},
        {"I18", "argmax stability", i18_argmax},
        {"I19", "concentration vs power oracle", i19_concentration},
        {"I20", "urgency band partition", i20_bands},
        {"I21", "urgency scale invariance", i21_scale_invariance},
        {"I22", "end-to-end conservation", i22_conservation},
        {"I23", "stage isolation", i23_isolation},
        {"I24", "dataset fidelity", i24_fidelity},
    };
    return registry;
}

Result run(const std::string& id, std::uint64_t seed, int cases) {
    for (const auto& p : all()) {
        if (p.id == id) return p.run(seed, cases);
    }
    Result r;
    r.fail("unknown property " + id);
    return r;
}

}  // namespace props
