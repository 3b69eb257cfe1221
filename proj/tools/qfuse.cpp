// qfuse: command-line front end for the quantum evidence fusion pipeline.
//
//   qfuse validate <evidence-file>
//   qfuse run <evidence-file> [--config <file>] [--format table|csv|json] [--stage ...]
//   qfuse compare <evidence-file> [--config <file>]
//   qfuse grade <e>
//   qfuse sweep <evidence-file> --evidence <id> --targets <m1,m2,...>
//
// Exit codes: 0 success, 1 validation or domain failure, 2 parse error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qfuse/error.hpp"
#include "qfuse/evidence_io.hpp"
#include "qfuse/pipeline.hpp"
#include "qfuse/report.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;

qfuse::PipelineConfig config_from(const std::string& path) {
    return path.empty() ? qfuse::PipelineConfig{} : qfuse::load_config(path);
}

int cmd_validate(const std::string& file) {
    const auto set = qfuse::ingest(file);
    for (const auto& w : set.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "ok: " << set.evidences.size() << " evidences over frame {";
    for (std::size_t i = 0; i < set.frame.size(); ++i) {
        std::cout << (i ? ", " : "") << set.frame.label(i);
    }
    std::cout << "}\n";
    return 0;
}

int cmd_run(const std::string& file, const std::string& config, const std::optional<std::string>& format,
            const std::string& stage) {
    auto cfg = config_from(config);
    if (format) cfg.format = qfuse::parse_format(*format);
    const auto filter = qfuse::parse_stage(stage);
    const auto report = qfuse::run_pipeline(qfuse::ingest(file), cfg);
    std::cout << qfuse::emit(report, cfg.format, filter);
    return 0;
}

int cmd_compare(const std::string& file, const std::string& config) {
    const auto report = qfuse::run_pipeline(qfuse::ingest(file), config_from(config));
    std::cout << qfuse::emit_comparison(report);
    return 0;
}

int cmd_grade(double exponent) {
    std::cout << qfuse::grade_label(exponent) << "\n";
    return 0;
}

int cmd_sweep(const std::string& file, const std::string& config, const std::string& id,
              const std::vector<double>& targets) {
    const auto set = qfuse::ingest(file);
    const auto cfg = config_from(config);
    for (const auto& rec : set.evidences) {
        if (rec.id != id) continue;
        std::vector<double> grid;
        for (int i = 1; i <= 40; ++i) grid.push_back(0.1 * i);
        const auto best = qfuse::sweep_grades(rec.evidence, cfg.policy, targets, grid);
        std::cout << "best grades: strong=" << best.grades.strong
                  << " moderate=" << best.grades.moderate << " weak=" << best.grades.weak
                  << " rms=" << best.rms_error << "\n";
        return 0;
    }
    throw qfuse::ValidationError("no evidence with id '" + id + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum evidence fusion with time intervals and reliability"};
    app.require_subcommand(1);

    std::string file;
    std::string config;
    std::optional<std::string> format;
    std::string stage = "all";
    double exponent = 0.0;
    std::string evidence_id;
    std::vector<double> targets;

    auto* validate = app.add_subcommand("validate", "Check an evidence file");
    validate->add_option("evidence-file", file)->required();

    auto* run = app.add_subcommand("run", "Run the fusion pipeline");
    run->add_option("evidence-file", file)->required();
    run->add_option("--config", config, "Pipeline config (JSON)");
    run->add_option("--format", format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    run->add_option("--stage", stage, "Limit output to one stage")
        ->check(CLI::IsMember({"all", "time", "reliability", "tdqbf", "final"}));

    auto* compare = app.add_subcommand("compare", "Pipeline against the baseline combiner");
    compare->add_option("evidence-file", file)->required();
    compare->add_option("--config", config, "Pipeline config (JSON)");

    auto* grade = app.add_subcommand("grade", "Urgency band of an exponent");
    grade->add_option("e", exponent)->required();

    auto* sweep = app.add_subcommand("sweep", "Search connection grades matching target magnitudes");
    sweep->add_option("evidence-file", file)->required();
    sweep->add_option("--config", config, "Pipeline config (JSON)");
    sweep->add_option("--evidence", evidence_id)->required();
    sweep->add_option("--targets", targets, "Target magnitudes in moment order")
        ->required()
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;  // --help exits 0
    }

    try {
        if (*validate) return cmd_validate(file);
        if (*run) return cmd_run(file, config, format, stage);
        if (*compare) return cmd_compare(file, config);
        if (*grade) return cmd_grade(exponent);
        if (*sweep) return cmd_sweep(file, config, evidence_id, targets);
    } catch (const qfuse::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qfuse::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
