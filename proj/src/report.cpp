#include "qfuse/report.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "qfuse/error.hpp"

namespace qfuse {

using nlohmann::json;

StageFilter parse_stage(const std::string& name) {
    if (name == "all") return StageFilter::All;
    if (name == "time") return StageFilter::Time;
    if (name == "reliability") return StageFilter::Reliability;
    if (name == "tdqbf") return StageFilter::Tdqbf;
    if (name == "final") return StageFilter::Final;
    throw ParseError("unknown stage '" + name + "'");
}

std::string format_polar(const ComplexAmplitude& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f∠%.4f", a.magnitude(), a.phase());
    return buf;
}

std::string format_classic(double p) {
    char buf[32];
    if (p != 0.0 && std::abs(p) < 5e-5) {
        std::snprintf(buf, sizeof buf, "%.5e", p);
    } else {
        std::snprintf(buf, sizeof buf, "%.4f", p);
    }
    return buf;
}

namespace {

bool wants(StageFilter filter, StageFilter stage) {
    return filter == StageFilter::All || filter == stage;
}

// ---------------------------------------------------------------- JSON

json amp_json(const ComplexAmplitude& a) { return {{"mag", a.magnitude()}, {"phase", a.phase()}}; }

ComplexAmplitude amp_from(const json& j) {
    return {j.at("mag").get<double>(), j.at("phase").get<double>()};
}

json body_json(const Qbpa& q) {
    json rows = json::array();
    for (const auto& [s, a] : q.masses()) {
        rows.push_back({{"focal", q.frame().name(s)},
                        {"members", q.frame().members(s)},
                        {"mag", a.magnitude()},
                        {"phase", a.phase()},
                        {"classic", a.probability()}});
    }
    return rows;
}

Qbpa body_from(const Frame& frame, const json& rows) {
    Qbpa q(frame);
    for (const auto& row : rows) {
        q.set(frame.focal(row.at("members").get<std::vector<std::string>>()), amp_from(row));
    }
    return q;
}

json reliability_json(const ReliabilityQbpa& r) {
    return {{"Y", amp_json(r.y)}, {"N", amp_json(r.n)}, {"H", amp_json(r.h)}, {"R", amp_json(r.r)}};
}

ReliabilityQbpa reliability_from(const json& j) {
    return {amp_from(j.at("Y")), amp_from(j.at("N")), amp_from(j.at("H")), amp_from(j.at("R"))};
}

json redistributed_json(const RedistributedReliability& r) {
    return {{"Y", amp_json(r.zy)},
            {"N", amp_json(r.zn)},
            {"H", amp_json(r.residual_h)},
            {"R", amp_json(r.r)}};
}

RedistributedReliability redistributed_from(const json& j) {
    return {amp_from(j.at("Y")), amp_from(j.at("N")), amp_from(j.at("H")), amp_from(j.at("R"))};
}

// ---------------------------------------------------------------- tables

std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) ++w;
    }
    return w;
}

class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void render(std::ostream& out) const {
        std::vector<std::size_t> widths;
        for (const auto& row : rows_) {
            if (widths.size() < row.size()) widths.resize(row.size(), 0);
            for (std::size_t i = 0; i < row.size(); ++i) {
                widths[i] = std::max(widths[i], display_width(row[i]));
            }
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                line += row[i];
                if (i + 1 < row.size()) line += std::string(widths[i] - display_width(row[i]) + 2, ' ');
            }
            out << "  " << line << "\n";
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::vector<FocalSet> columns_of(const std::vector<const Qbpa*>& bodies) {
    std::set<FocalSet> keys;
    for (const Qbpa* q : bodies) {
        for (const auto& [s, a] : q->masses()) keys.insert(s);
    }
    return {keys.begin(), keys.end()};
}

void body_rows(TextTable& table, const std::string& name, const Qbpa& q,
               const std::vector<FocalSet>& cols) {
    std::vector<std::string> row{name};
    for (const FocalSet s : cols) row.push_back(q.contains(s) ? format_polar(q.at(s)) : "-");
    table.add(std::move(row));
}

std::vector<std::string> header_for(const std::string& first, const Frame& frame,
                                    const std::vector<FocalSet>& cols) {
    std::vector<std::string> h{first};
    for (const FocalSet s : cols) h.push_back(frame.name(s));
    return h;
}

std::string join(const std::vector<double>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ", ";
        out << xs[i];
    }
    return out.str();
}

void render_table(const RunReport& r, StageFilter filter, std::ostream& out) {
    const auto& p = r.config;
    out << "frame: {";
    for (std::size_t i = 0; i < r.frame.size(); ++i) out << (i ? ", " : "") << r.frame.label(i);
    out << "}\n";
    out << "parameters: upsilon strong=" << p.grades.strong << " moderate=" << p.grades.moderate
        << " weak=" << p.grades.weak << "; interval policy "
        << (p.policy.mode == IntervalPolicy::Mode::PerEvidenceMinMax ? "per-evidence-minmax"
                                                                     : "explicit")
        << "; tolerance " << p.tolerance << "\n";
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";

    if (wants(filter, StageFilter::Time)) {
        std::vector<const Qbpa*> bodies;
        for (const auto& e : r.evidences) bodies.push_back(&e.time_modified);
        const auto cols = columns_of(bodies);
        out << "\n[time] first dimension after the time quantitative rule\n";
        auto header = header_for("evidence", r.frame, cols);
        header.push_back("weights");
        TextTable t(std::move(header));
        for (const auto& e : r.evidences) {
            std::vector<std::string> row{e.id};
            for (const FocalSet s : cols) {
                row.push_back(e.time_modified.contains(s) ? format_polar(e.time_modified.at(s)) : "-");
            }
            row.push_back(join(e.time_weights));
            t.add(std::move(row));
        }
        t.render(out);
    }

    if (wants(filter, StageFilter::Reliability)) {
        out << "\n[reliability] second dimension redistributed by DHDF and QPDR\n";
        TextTable t({"evidence", "Y", "N", "H", "R", "ratio Y", "ratio N"});
        for (const auto& e : r.evidences) {
            const auto& z = e.redistributed;
            t.add({e.id, format_polar(z.zy), format_polar(z.zn), format_polar(z.residual_h),
                   format_polar(z.r), format_classic(e.split.ratio_yes),
                   format_classic(e.split.ratio_no)});
        }
        t.render(out);
    }

    if (wants(filter, StageFilter::Tdqbf)) {
        std::vector<const Qbpa*> bodies;
        for (const auto& e : r.evidences) bodies.push_back(&e.fused.raw);
        const auto cols = columns_of(bodies);
        out << "\n[tdqbf] fused bodies (raw, then normalized)\n";
        TextTable t(header_for("evidence", r.frame, cols));
        for (const auto& e : r.evidences) body_rows(t, e.id + " raw", e.fused.raw, cols);
        for (const auto& e : r.evidences) body_rows(t, e.id, e.fused.body, cols);
        t.render(out);
    }

    if (wants(filter, StageFilter::Final)) {
        out << "\n[final] urgency\n";
        TextTable u({"evidence", "exponent", "band"});
        for (const auto& e : r.evidences) {
            std::ostringstream ex;
            ex << e.urgency.exponent;
            u.add({e.id, ex.str(), e.urgency.label});
        }
        u.render(out);

        std::vector<const Qbpa*> bodies{&r.final.nor, &r.final.fin};
        if (r.baseline) bodies.push_back(&r.baseline->body);
        const auto cols = columns_of(bodies);

        out << "\n[final] quantum values\n";
        TextTable q(header_for("proposition", r.frame, cols));
        body_rows(q, "normalized MID", r.final.nor, cols);
        body_rows(q, "improved", r.final.fin, cols);
        if (r.baseline) body_rows(q, "baseline", r.baseline->body, cols);
        q.render(out);

        out << "\n[final] classic probability\n";
        TextTable c(header_for("proposition", r.frame, cols));
        auto classic_row = [&](const std::string& name, const Qbpa& body) {
            std::vector<std::string> row{name};
            for (const FocalSet s : cols) row.push_back(format_classic(classic_probability(body, s)));
            c.add(std::move(row));
        };
        classic_row("improved", r.final.fin);
        if (r.baseline) classic_row("baseline", r.baseline->body);
        c.render(out);
    }
}

void csv_body(std::ostream& out, const std::string& stage, const std::string& evidence,
              const Qbpa& q) {
    for (const auto& [s, a] : q.masses()) {
        out << stage << "," << evidence << "," << q.frame().name(s) << "," << a.magnitude() << ","
            << a.phase() << "," << a.probability() << "\n";
    }
}

void csv_amp(std::ostream& out, const std::string& stage, const std::string& evidence,
             const char* focal, const ComplexAmplitude& a) {
    out << stage << "," << evidence << "," << focal << "," << a.magnitude() << "," << a.phase()
        << "," << a.probability() << "\n";
}

void render_csv(const RunReport& r, StageFilter filter, std::ostream& out) {
    out.precision(10);
    out << "stage,evidence,focal,magnitude,phase,classic\n";
    for (const auto& e : r.evidences) {
        if (wants(filter, StageFilter::Time)) csv_body(out, "time", e.id, e.time_modified);
    }
    for (const auto& e : r.evidences) {
        if (!wants(filter, StageFilter::Reliability)) break;
        csv_amp(out, "reliability", e.id, "Y", e.redistributed.zy);
        csv_amp(out, "reliability", e.id, "N", e.redistributed.zn);
        csv_amp(out, "reliability", e.id, "H", e.redistributed.residual_h);
        csv_amp(out, "reliability", e.id, "R", e.redistributed.r);
    }
    if (wants(filter, StageFilter::Tdqbf)) {
        for (const auto& e : r.evidences) csv_body(out, "tdqbf_raw", e.id, e.fused.raw);
        for (const auto& e : r.evidences) csv_body(out, "tdqbf", e.id, e.fused.body);
    }
    if (wants(filter, StageFilter::Final)) {
        csv_body(out, "nor", "all", r.final.nor);
        csv_body(out, "final", "all", r.final.fin);
        if (r.baseline) csv_body(out, "baseline", "all", r.baseline->body);
    }
}

}  // namespace

json report_to_json(const RunReport& r, StageFilter filter) {
    json evs = json::array();
    for (const auto& e : r.evidences) {
        json ev{{"id", e.id},
                {"urgency", {{"exponent", e.urgency.exponent}, {"label", e.urgency.label}}}};
        if (wants(filter, StageFilter::Time)) {
            ev["time"] = {{"input", body_json(e.original)},
                          {"weights", e.time_weights},
                          {"output", body_json(e.time_modified)}};
        }
        if (wants(filter, StageFilter::Reliability)) {
            ev["reliability"] = {{"input", reliability_json(e.reliability)},
                                 {"ratio_yes", e.split.ratio_yes},
                                 {"ratio_no", e.split.ratio_no},
                                 {"to_yes", amp_json(e.split.to_yes)},
                                 {"to_no", amp_json(e.split.to_no)},
                                 {"output", redistributed_json(e.redistributed)}};
        }
        if (wants(filter, StageFilter::Tdqbf)) {
            ev["tdqbf"] = {{"raw", body_json(e.fused.raw)},
                           {"raw_probability", e.fused.raw_probability},
                           {"normalized", body_json(e.fused.body)}};
        }
        evs.push_back(std::move(ev));
    }

    json doc{{"frame", r.frame.labels()},
             {"parameters", config_to_json(r.config)},
             {"warnings", r.warnings},
             {"evidences", std::move(evs)}};
    if (wants(filter, StageFilter::Final)) {
        doc["final"] = {{"nor", body_json(r.final.nor)},
                        {"fin", body_json(r.final.fin)},
                        {"conflicts", r.final.conflicts}};
        if (r.baseline) {
            doc["baseline"] = {{"body", body_json(r.baseline->body)},
                               {"conflicts", r.baseline->conflicts}};
        } else {
            doc["baseline"] = nullptr;
        }
    }
    return doc;
}

RunReport report_from_json(const json& doc) {
    try {
        const Frame frame(doc.at("frame").get<std::vector<std::string>>());
        RunReport r{frame,
                    parse_config(doc.at("parameters")),
                    {},
                    {Qbpa(frame), Qbpa(frame), {}, {}},
                    std::nullopt,
                    doc.at("warnings").get<std::vector<std::string>>()};
        for (const auto& ev : doc.at("evidences")) {
            const auto& time = ev.at("time");
            const auto& rel = ev.at("reliability");
            const auto& td = ev.at("tdqbf");
            EvidenceStages e{ev.at("id").get<std::string>(),
                             {ev.at("urgency").at("exponent").get<double>(),
                              ev.at("urgency").at("label").get<std::string>()},
                             body_from(frame, time.at("input")),
                             time.at("weights").get<std::vector<double>>(),
                             body_from(frame, time.at("output")),
                             reliability_from(rel.at("input")),
                             {amp_from(rel.at("to_yes")), amp_from(rel.at("to_no")),
                              rel.at("ratio_yes").get<double>(), rel.at("ratio_no").get<double>()},
                             redistributed_from(rel.at("output")),
                             {body_from(frame, td.at("raw")), body_from(frame, td.at("normalized")),
                              td.at("raw_probability").get<double>()}};
            r.evidences.push_back(std::move(e));
        }
        const auto& fin = doc.at("final");
        r.final.nor = body_from(frame, fin.at("nor"));
        r.final.fin = body_from(frame, fin.at("fin"));
        r.final.conflicts = fin.at("conflicts").get<std::vector<double>>();
        for (const auto& [s, a] : r.final.fin.masses()) r.final.classic.emplace(s, a.probability());
        if (!doc.at("baseline").is_null()) {
            r.baseline = BaselineResult{body_from(frame, doc.at("baseline").at("body")),
                                        doc.at("baseline").at("conflicts").get<std::vector<double>>()};
        }
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

std::string emit(const RunReport& report, OutputFormat format, StageFilter stage) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Json: out << report_to_json(report, stage).dump(2) << "\n"; break;
        case OutputFormat::Csv: render_csv(report, stage, out); break;
        case OutputFormat::Table: render_table(report, stage, out); break;
    }
    return out.str();
}

std::string emit_comparison(const RunReport& r) {
    std::ostringstream out;
    if (!r.baseline) {
        throw ValidationError("no baseline to compare: it needs at least two evidences without complete conflict");
    }
    std::vector<const Qbpa*> bodies{&r.final.fin, &r.baseline->body};
    const auto cols = columns_of(bodies);
    TextTable t(header_for("proposition", r.frame, cols));
    for (const auto& [name, body] :
         {std::pair<std::string, const Qbpa*>{"improved", &r.final.fin}, {"baseline", &r.baseline->body}}) {
        std::vector<std::string> row{name};
        for (const FocalSet s : cols) row.push_back(format_classic(classic_probability(*body, s)));
        t.add(std::move(row));
    }
    out << "classic probability, improved pipeline vs baseline Dempster fold\n";
    t.render(out);

    out << "\nmultisubset mass (improved < baseline):\n";
    for (const FocalSet s : cols) {
        if (s.size() < 2) continue;
        const double improved = classic_probability(r.final.fin, s);
        const double baseline = classic_probability(r.baseline->body, s);
        out << "  " << r.frame.name(s) << ": " << format_classic(improved) << " vs "
            << format_classic(baseline) << (improved < baseline ? "  reduced" : "  NOT reduced")
            << "\n";
    }
    return out.str();
}

}  // namespace qfuse
