// systo: build and verify the gluing pipeline on finite truncations.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 input/config
// error, 3 search/move budget exhausted.

#include <cstdio>
#include <exception>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "systolic/errors.hpp"
#include "systolic/io.hpp"
#include "systolic/pipeline.hpp"

namespace {

using systolic::json;

struct ConfigFlags {
    std::string config_path;
    int rho = -1;
    int R_override = -2;
    int interior_margin = -1;
    int nullhomotopy_budget = -1;
    int max_moves = -1;
    std::string output_dir;
    bool emit_timestamps = false;
    std::vector<std::string> allow_unknown;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f) {
    cmd->add_option("config", f.config_path, "Run configuration file (JSON)")
        ->required();
    cmd->add_option("--rho", f.rho, "Ball radius in the subgroup (overrides config)");
    cmd->add_option("--R-override", f.R_override,
                    "Use this R instead of the certificate (must be >= computed R)");
    cmd->add_option("--interior-margin", f.interior_margin,
                    "Boundary margin for interior claims (overrides config)");
    cmd->add_option("--nullhomotopy-budget", f.nullhomotopy_budget,
                    "State budget per contraction; 0 = automatic (overrides config)");
    cmd->add_option("--max-moves", f.max_moves, "Saturation move budget (overrides config)");
    cmd->add_option("--out", f.output_dir, "Artifact directory (overrides config)");
    cmd->add_flag("--emit-timestamps", f.emit_timestamps,
                  "Embed wall-clock data in reports (off by default, keeps runs byte-identical)");
    cmd->add_option("--allow-unknown", f.allow_unknown,
                    "Stage name whose Unknown verdict should not fail the run (repeatable)");
}

systolic::RunConfig make_config(const ConfigFlags& f) {
    systolic::RunConfig cfg = systolic::load_run_config(f.config_path);
    if (f.rho >= 0) cfg.rho = f.rho;
    if (f.R_override >= -1) cfg.R_override = f.R_override;
    if (f.interior_margin >= 0) cfg.interior_margin = f.interior_margin;
    if (f.nullhomotopy_budget >= 0) cfg.nullhomotopy_budget = f.nullhomotopy_budget;
    if (f.max_moves >= 0) cfg.max_moves = f.max_moves;
    if (!f.output_dir.empty()) cfg.output_dir = f.output_dir;
    if (f.emit_timestamps) cfg.emit_timestamps = true;
    for (const std::string& s : f.allow_unknown) cfg.allow_unknown.push_back(s);
    return cfg;
}

void print_stage_lines(const systolic::Report& rep) {
    for (const systolic::StageResult& s : rep.stages)
        std::cout << s.name << ": " << systolic::verdict_name(s.verdict) << "\n";
    std::cout << "result: " << (rep.pass ? "pass" : "fail") << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Glued-ball complexes over a finite patch: construction and verification"};
    app.require_subcommand(1);
    app.footer("Input files named in a config resolve against the config's directory,\n"
               "then against $SYSTO_DATA when that is set.");

    // check
    auto* c_check = app.add_subcommand("check", "Flagness, m-largeness and H1 of a complex file");
    std::string check_file;
    int check_m = 6;
    c_check->add_option("complex", check_file, "Complex file (JSON)")->required();
    c_check->add_option("--m", check_m, "Largeness threshold (default 6)");

    ConfigFlags f_gamma, f_loops, f_radius, f_y, f_sat, f_verify, f_pipe;
    auto* c_gamma =
        app.add_subcommand("build-gamma", "Translated generator paths over the ball");
    add_config_flags(c_gamma, f_gamma);
    auto* c_loops = app.add_subcommand("short-loops",
                                       "Relator, stabilizer and crossing loops");
    add_config_flags(c_loops, f_loops);
    auto* c_radius = app.add_subcommand("compute-r", "Containment radius certificate");
    add_config_flags(c_radius, f_radius);
    auto* c_y = app.add_subcommand("build-y", "Glued ball complex");
    add_config_flags(c_y, f_y);
    auto* c_sat = app.add_subcommand("saturate", "Diagonal saturation move log");
    add_config_flags(c_sat, f_sat);
    auto* c_verify = app.add_subcommand("verify", "Full run; consolidated report on stdout");
    add_config_flags(c_verify, f_verify);
    auto* c_pipe = app.add_subcommand("pipeline", "Full run; artifacts written to the output directory");
    add_config_flags(c_pipe, f_pipe);

    // export-dot
    auto* c_dot = app.add_subcommand("export-dot", "Graphviz text for a complex or artifact");
    std::string dot_file, dot_moves, dot_name = "G";
    bool dot_labels = false;
    c_dot->add_option("complex", dot_file, "Complex file or y/w artifact (JSON)")->required();
    c_dot->add_option("--moves", dot_moves, "Move log artifact: style its added edges");
    c_dot->add_flag("--labels", dot_labels, "Label vertices with their f-images (artifacts only)");
    c_dot->add_option("--name", dot_name, "Graph name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*c_check) {
        systolic::CheckResult res = systolic::run_check(systolic::load_json_file(check_file), check_m);
        std::cout << systolic::canonical_text(res.report.to_json());
        return res.exit_code;
    }

    auto partial = [&](const ConfigFlags& f, systolic::StopAfter stop,
                       const json systolic::PipelineResult::*artifact) {
        systolic::PipelineResult res = systolic::run_pipeline(make_config(f), stop);
        const json& j = res.*artifact;
        std::cout << systolic::canonical_text(j.is_null() ? res.report.to_json() : j);
        return res.exit_code;
    };

    if (*c_gamma) return partial(f_gamma, systolic::StopAfter::Gamma, &systolic::PipelineResult::gamma);
    if (*c_loops)
        return partial(f_loops, systolic::StopAfter::ShortLoops,
                       &systolic::PipelineResult::short_loops);
    if (*c_radius)
        return partial(f_radius, systolic::StopAfter::Radius, &systolic::PipelineResult::radius);
    if (*c_y) return partial(f_y, systolic::StopAfter::Y, &systolic::PipelineResult::y);
    if (*c_sat)
        return partial(f_sat, systolic::StopAfter::Saturate, &systolic::PipelineResult::moves);

    if (*c_verify) {
        systolic::PipelineResult res = systolic::run_pipeline(make_config(f_verify));
        std::cout << systolic::canonical_text(res.report.to_json());
        return res.exit_code;
    }
    if (*c_pipe) {
        systolic::RunConfig cfg = make_config(f_pipe);
        if (cfg.output_dir.empty()) cfg.output_dir = "out";
        systolic::PipelineResult res = systolic::run_pipeline(cfg);
        print_stage_lines(res.report);
        std::cout << "report: " << cfg.output_dir << "/report.json\n";
        return res.exit_code;
    }

    if (*c_dot) {
        json j = systolic::load_json_file(dot_file);
        json cj = j.contains("complex") ? j.at("complex") : j;
        systolic::ComplexInput ci = systolic::complex_from_json(cj);
        std::vector<int> labels;
        const std::vector<int>* labels_ptr = nullptr;
        if (dot_labels) {
            if (!j.contains("f_image_ids"))
                throw systolic::InputError("--labels: the input has no \"f_image_ids\" field");
            for (const json& e : j.at("f_image_ids")) labels.push_back(e.get<int>());
            if (static_cast<int>(labels.size()) != ci.graph.size())
                throw systolic::InputError("--labels: f_image_ids length does not match the vertex count");
            labels_ptr = &labels;
        }
        std::set<std::pair<int, int>> added;
        if (!dot_moves.empty()) {
            json mj = systolic::load_json_file(dot_moves);
            const json& moves = mj.contains("moves") ? mj.at("moves") : mj;
            for (const json& m : moves)
                for (const json& e : m.at("orbit"))
                    added.insert({e[0].get<int>(), e[1].get<int>()});
        }
        std::cout << systolic::export_dot(ci.graph, labels_ptr, added, dot_name);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const systolic::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const systolic::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const systolic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
