#pragma once

#include "upq/qnum.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace upq {

// Process exit codes shared by run_job/run_sweep and the CLI front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSingular = 3;

inline constexpr int kSchemaVersion = 1;

enum class Command {
    RepBuild,
    RepCheck,
    Casimir,
    FindimScan,
    SpinForDim,
    Limits,
    Unitarity,
    Sweep
};

const char* command_name(Command c);
Command command_from_name(const std::string& name);

// One job: a command plus the full set of inputs, in the same shape as the
// JSON config file.  Fields irrelevant to a command keep their defaults.
struct JobSpec {
    Command command = Command::RepCheck;
    Complex p{2.0, 0.0};
    Complex q{3.0, 0.0};
    Complex two_j{1.0, 0.0};
    int trunc = 32;
    double tol = 1e-10;
    int n_max = 1000;
    int branch_range = 5;
    int dim = 1;           // spin-for-dim target dimension
    double epsilon = 1e-6; // limits classical offset
    std::string format = "json";
    std::string out; // empty = stdout
};

// One sweep axis: a rectangle in the complex plane for one input variable,
// traversed re-major (re outer loop, im inner loop).
struct SweepAxis {
    std::string var; // "p" | "q" | "two_j"
    double re_from = 0.0, re_to = 0.0;
    int re_count = 1;
    double im_from = 0.0, im_to = 0.0;
    int im_count = 1;
};

struct SweepSpec {
    JobSpec base;                                 // fixed inputs + output options
    Command point_command = Command::FindimScan;  // run at every grid point
    std::vector<SweepAxis> axes;                  // 1 or 2 axes, distinct vars
};

struct JobResult {
    int exit_code = kExitOk;
    nlohmann::ordered_json report; // full report object (empty on failure)
    std::string rendered;          // report in the requested format
    std::string error;             // diagnostic for nonzero exit codes
};

JobResult run_job(const JobSpec& spec);
JobResult run_sweep(const SweepSpec& spec);

// Config-file form; missing fields keep defaults.  Throws DomainError on
// malformed content.
JobSpec job_from_json(const nlohmann::ordered_json& j);
SweepSpec sweep_from_json(const nlohmann::ordered_json& j);

} // namespace upq
