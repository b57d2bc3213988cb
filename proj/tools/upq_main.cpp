#include "upq/jobs.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

nlohmann::ordered_json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw upq::DomainError("config: cannot open '" + path + "'");
    }
    try {
        return nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw upq::DomainError("config: " + std::string(e.what()));
    }
}

int emit(const upq::JobResult& result, const std::string& out_path) {
    if (result.exit_code != upq::kExitOk) {
        std::cerr << "error: " << result.error << "\n";
        return result.exit_code;
    }
    if (out_path.empty()) {
        std::cout << result.rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot open output file '" << out_path << "'\n";
            return upq::kExitInternal;
        }
        out << result.rendered;
    }
    return upq::kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"upq: representations of the two-parameter quantum group U_{p,q}[sl(2)]"};
    app.require_subcommand(1);

    double p_re = 0, p_im = 0, q_re = 0, q_im = 0, two_j_re = 0, two_j_im = 0;
    double tol = 0, epsilon = 0;
    int trunc = 0, nmax = 0, branches = 0, dim = 0;
    std::string format, out_path, config_path;

    app.add_option("--p-re", p_re, "real part of p");
    app.add_option("--p-im", p_im, "imaginary part of p");
    app.add_option("--q-re", q_re, "real part of q");
    app.add_option("--q-im", q_im, "imaginary part of q");
    app.add_option("--two-j-re", two_j_re, "real part of 2j");
    app.add_option("--two-j-im", two_j_im, "imaginary part of 2j");
    app.add_option("--trunc", trunc, "truncation N of the weight ladder");
    app.add_option("--tol", tol, "residual tolerance");
    app.add_option("--nmax", nmax, "integer root scan limit");
    app.add_option("--branches", branches, "log branch range K (k = -K..K)");
    app.add_option("--dim", dim, "target dimension D for spin-for-dim");
    app.add_option("--epsilon", epsilon, "classical-limit offset for limits");
    app.add_option("--format", format, "output format: json or csv");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--config", config_path, "JSON config file mirroring the job spec");

    app.add_subcommand("rep-build", "build a truncated realization and export matrices")
        ->fallthrough();
    app.add_subcommand("rep-check", "verify the defining relations on a realization")
        ->fallthrough();
    app.add_subcommand("casimir", "verify Casimir scalarity and centrality")->fallthrough();
    app.add_subcommand("findim-scan", "scan for integer roots / finite dimensionality")
        ->fallthrough();
    app.add_subcommand("spin-for-dim", "complex spins for a prescribed dimension")
        ->fallthrough();
    app.add_subcommand("limits", "compare against the one-parameter and classical limits")
        ->fallthrough();
    app.add_subcommand("unitarity", "normalization ratio positivity verdict")->fallthrough();
    app.add_subcommand("sweep", "run a point command over a parameter grid")->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string sub = app.get_subcommands().front()->get_name();
        const upq::Command command = upq::command_from_name(sub);

        nlohmann::ordered_json config = nlohmann::ordered_json::object();
        if (app.count("--config") > 0) {
            config = load_config(config_path);
        }

        upq::SweepSpec sweep;
        upq::JobSpec job;
        const bool is_sweep = command == upq::Command::Sweep;
        if (is_sweep) {
            sweep = upq::sweep_from_json(config);
        } else {
            job = upq::job_from_json(config);
            job.command = command;
        }
        upq::JobSpec& base = is_sweep ? sweep.base : job;

        // CLI flags override config values.
        if (app.count("--p-re")) base.p = upq::Complex(p_re, base.p.imag());
        if (app.count("--p-im")) base.p = upq::Complex(base.p.real(), p_im);
        if (app.count("--q-re")) base.q = upq::Complex(q_re, base.q.imag());
        if (app.count("--q-im")) base.q = upq::Complex(base.q.real(), q_im);
        if (app.count("--two-j-re")) base.two_j = upq::Complex(two_j_re, base.two_j.imag());
        if (app.count("--two-j-im")) base.two_j = upq::Complex(base.two_j.real(), two_j_im);
        if (app.count("--trunc")) base.trunc = trunc;
        if (app.count("--tol")) base.tol = tol;
        if (app.count("--nmax")) base.n_max = nmax;
        if (app.count("--branches")) base.branch_range = branches;
        if (app.count("--dim")) base.dim = dim;
        if (app.count("--epsilon")) base.epsilon = epsilon;
        if (app.count("--format")) base.format = format;
        if (app.count("--out")) base.out = out_path;

        const upq::JobResult result = is_sweep ? upq::run_sweep(sweep) : upq::run_job(job);
        return emit(result, base.out);
    } catch (const upq::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return upq::kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return upq::kExitInternal;
    }
}
