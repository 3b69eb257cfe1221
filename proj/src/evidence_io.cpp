#include "qfuse/evidence_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qfuse/error.hpp"

namespace qfuse {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(where + ": missing field '" + key + "'");
    }
    return *it;
}

double number(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number()) {
        throw ParseError(where + "." + key + ": expected a number");
    }
    return v.get<double>();
}

std::string text(const json& v, const std::string& where) {
    if (!v.is_string()) {
        throw ParseError(where + ": expected a string");
    }
    return v.get<std::string>();
}

ComplexAmplitude amplitude(const json& obj, const std::string& where) {
    const double mag = number(obj, "mag", where);
    const double phase = number(obj, "phase", where);
    try {
        return ComplexAmplitude(mag, phase);
    } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

json amplitude_json(const ComplexAmplitude& a) {
    return json{{"mag", a.magnitude()}, {"phase", a.phase()}};
}

void check_sum(double sum, const std::string& where, std::vector<std::string>& warnings) {
    const double deviation = std::abs(sum - 1.0);
    if (deviation <= kIngestTolerance) {
        return;
    }
    std::ostringstream msg;
    msg << where << ": sum of squared magnitudes is " << sum;
    if (deviation > kIngestRejectTolerance) {
        msg << ", not 1 within " << kIngestRejectTolerance;
        throw ValidationError(msg.str());
    }
    msg << ", off by more than four-decimal rounding; the time rule renormalizes it";
    warnings.push_back(msg.str());
}

EvidenceRecord parse_record(const Frame& frame, const json& ev, std::size_t index,
                            std::vector<std::string>& warnings) {
    const std::string where = "evidences[" + std::to_string(index) + "]";
    const std::string id = text(require(ev, "id", where), where + ".id");
    const std::string at = "evidence '" + id + "'";

    const double exponent = number(ev, "urgency_exponent", where);
    UrgencyGrade urgency{};
    try {
        urgency = UrgencyGrade::from_exponent(exponent);
    } catch (const ValidationError& e) {
        throw ValidationError(at + ": " + e.what());
    }

    const json& rel = require(ev, "reliability", where);
    const ReliabilityQbpa reliability{
        amplitude(require(rel, "Y", where + ".reliability"), at + " reliability Y"),
        amplitude(require(rel, "N", where + ".reliability"), at + " reliability N"),
        amplitude(require(rel, "H", where + ".reliability"), at + " reliability H"),
        amplitude(require(rel, "R", where + ".reliability"), at + " reliability R")};
    check_sum(reliability.total_probability(), at + " reliability", warnings);

    const json& props = require(ev, "propositions", where);
    if (!props.is_array() || props.empty()) {
        throw ParseError(where + ".propositions: expected a nonempty array");
    }
    std::vector<TimedProposition> timed;
    for (std::size_t j = 0; j < props.size(); ++j) {
        const std::string pw = where + ".propositions[" + std::to_string(j) + "]";
        const json& members = require(props[j], "members", pw);
        if (!members.is_array()) {
            throw ParseError(pw + ".members: expected an array");
        }
        std::vector<std::string> labels;
        for (const auto& m : members) labels.push_back(text(m, pw + ".members"));
        FocalSet focal = FocalSet::singleton(0);
        try {
            focal = frame.focal(labels);
        } catch (const ValidationError& e) {
            throw ValidationError(at + " proposition " + std::to_string(j) + ": " + e.what());
        }
        timed.push_back({focal, amplitude(props[j], pw), number(props[j], "moment", pw)});
    }

    const bool ascending = std::is_sorted(timed.begin(), timed.end(), [](const auto& a, const auto& b) {
        return a.moment < b.moment;
    });
    if (!ascending) {
        std::stable_sort(timed.begin(), timed.end(),
                         [](const auto& a, const auto& b) { return a.moment < b.moment; });
        warnings.push_back(at + ": propositions listed out of moment order; sorted by moment");
    }

    try {
        OqfdtiEvidence evidence(frame, std::move(timed));
        check_sum(evidence.body().total_probability(), at + " propositions", warnings);
        return {id, std::move(evidence), reliability, urgency};
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        if (msg.rfind(at, 0) == 0) throw;
        throw ValidationError(at + ": " + msg);
    }
}

}  // namespace

EvidenceSet parse_evidence(const json& doc) {
    const json& labels = require(doc, "frame", "document");
    if (!labels.is_array()) {
        throw ParseError("document.frame: expected an array of labels");
    }
    std::vector<std::string> names;
    for (const auto& l : labels) names.push_back(text(l, "document.frame"));
    EvidenceSet set{Frame(std::move(names)), {}, {}};

    const json& evs = require(doc, "evidences", "document");
    if (!evs.is_array()) {
        throw ParseError("document.evidences: expected an array");
    }
    if (evs.empty()) {
        throw ValidationError("no evidences");
    }
    for (std::size_t i = 0; i < evs.size(); ++i) {
        set.evidences.push_back(parse_record(set.frame, evs[i], i, set.warnings));
        for (std::size_t k = 0; k + 1 < set.evidences.size(); ++k) {
            if (set.evidences[k].id == set.evidences.back().id) {
                throw ValidationError("duplicate evidence id '" + set.evidences.back().id + "'");
            }
        }
    }
    return set;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

EvidenceSet ingest(const std::filesystem::path& path) { return parse_evidence(read_json_file(path)); }

json evidence_to_json(const EvidenceSet& set) {
    json evs = json::array();
    for (const auto& rec : set.evidences) {
        json props = json::array();
        for (const auto& p : rec.evidence.propositions()) {
            props.push_back({{"members", set.frame.members(p.focal)},
                             {"mag", p.amplitude.magnitude()},
                             {"phase", p.amplitude.phase()},
                             {"moment", p.moment}});
        }
        evs.push_back({{"id", rec.id},
                       {"urgency_exponent", rec.urgency.exponent},
                       {"reliability",
                        {{"Y", amplitude_json(rec.reliability.y)},
                         {"N", amplitude_json(rec.reliability.n)},
                         {"H", amplitude_json(rec.reliability.h)},
                         {"R", amplitude_json(rec.reliability.r)}}},
                       {"propositions", std::move(props)}});
    }
    return {{"frame", set.frame.labels()}, {"evidences", std::move(evs)}};
}

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ParseError("unknown output format '" + name + "'");
}

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Table: return "table";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
    }
    return "table";
}

PipelineConfig parse_config(const json& doc) {
    if (!doc.is_object()) {
        throw ParseError("config: expected an object");
    }
    PipelineConfig cfg;
    if (doc.contains("upsilon")) {
        const json& u = doc["upsilon"];
        cfg.grades = {number(u, "strong", "config.upsilon"), number(u, "moderate", "config.upsilon"),
                      number(u, "weak", "config.upsilon")};
    }
    cfg.grades.check();

    if (doc.contains("interval_policy")) {
        const json& p = doc["interval_policy"];
        const std::string mode = text(require(p, "mode", "config.interval_policy"),
                                      "config.interval_policy.mode");
        if (mode == "per-evidence-minmax") {
            cfg.policy = IntervalPolicy::per_evidence_minmax();
        } else if (mode == "explicit") {
            const json& b = require(p, "bounds", "config.interval_policy");
            if (!b.is_array()) {
                throw ParseError("config.interval_policy.bounds: expected an array of pairs");
            }
            std::vector<IntervalBounds> bounds;
            for (const auto& pair : b) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                    !pair[1].is_number()) {
                    throw ParseError("config.interval_policy.bounds: expected [lower, upper] pairs");
                }
                bounds.push_back({pair[0].get<double>(), pair[1].get<double>()});
            }
            cfg.policy = IntervalPolicy::explicit_intervals(std::move(bounds));
        } else {
            throw ParseError("config.interval_policy.mode: unknown mode '" + mode + "'");
        }
    }
    if (doc.contains("tolerance")) {
        cfg.tolerance = number(doc, "tolerance", "config");
        if (!(cfg.tolerance > 0.0)) throw ValidationError("config.tolerance must be positive");
    }
    if (doc.contains("report_tolerance")) {
        cfg.report_tolerance = number(doc, "report_tolerance", "config");
        if (!(cfg.report_tolerance > 0.0)) {
            throw ValidationError("config.report_tolerance must be positive");
        }
    }
    if (doc.contains("format")) {
        cfg.format = parse_format(text(doc["format"], "config.format"));
    }
    return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path) {
    return parse_config(read_json_file(path));
}

json config_to_json(const PipelineConfig& cfg) {
    json policy;
    if (cfg.policy.mode == IntervalPolicy::Mode::PerEvidenceMinMax) {
        policy = {{"mode", "per-evidence-minmax"}};
    } else {
        json bounds = json::array();
        for (const auto& b : cfg.policy.explicit_bounds) bounds.push_back({b.lower, b.upper});
        policy = {{"mode", "explicit"}, {"bounds", std::move(bounds)}};
    }
    return {{"upsilon",
             {{"strong", cfg.grades.strong},
              {"moderate", cfg.grades.moderate},
              {"weak", cfg.grades.weak}}},
            {"interval_policy", std::move(policy)},
            {"tolerance", cfg.tolerance},
            {"report_tolerance", cfg.report_tolerance},
            {"format", format_name(cfg.format)}};
}

}  // namespace qfuse
