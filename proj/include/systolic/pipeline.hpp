#pragma once

#include <optional>
#include <string>
#include <vector>

#include "systolic/io.hpp"

namespace systolic {

enum class Verdict { Pass, Fail, Unknown };
const char* verdict_name(Verdict v);

struct StageResult {
    std::string name;
    Verdict verdict = Verdict::Pass;
    json details;  // counts, witnesses, failure messages
};

struct Report {
    bool pass = true;  // every stage passes, or is Unknown and allowed by config
    std::vector<StageResult> stages;
    json config_echo;
    json input_digests;

    const StageResult* stage(const std::string& name) const;
    json to_json() const;
};

// How far to run. Every prefix is a valid run; later artifacts are absent.
enum class StopAfter { Inputs, Gamma, ShortLoops, Radius, Y, VerifyY, Saturate, Full };

struct PipelineResult {
    Report report;
    int exit_code = 0;  // 0 pass, 1 verification failure (2/3 arrive as exceptions)
    // Artifacts, present up to the requested stage.
    json gamma;
    json short_loops;
    json radius;
    json y;
    json moves;
    json w;
};

// Runs validate -> Gamma -> short loops -> R -> Y -> section/factorization/
// connectivity checks -> saturation -> final verification, collecting one
// StageResult per stage. Input and config problems throw InputError (exit 2),
// exhausted budgets throw BudgetExceeded (exit 3); verification failures are
// reported, not thrown. With a nonempty output_dir the artifacts and the
// report are also written there as canonical JSON.
PipelineResult run_pipeline(const RunConfig& cfg, StopAfter stop = StopAfter::Full);

// A complex file alone: flagness (when maximal simplices are listed),
// m-largeness of the (derived) skeleton, and H1. Exit 0 iff all pass.
struct CheckResult {
    Report report;
    int exit_code = 0;
};
CheckResult run_check(const json& complex_json, int m);

}  // namespace systolic
