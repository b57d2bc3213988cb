#include "upq/jobs.hpp"

#include "upq/findim.hpp"
#include "upq/ladder.hpp"
#include "upq/repmat.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace upq {

using ordered_json = nlohmann::ordered_json;

namespace {

struct CommandName {
    Command command;
    const char* name;
};

constexpr std::array<CommandName, 8> kCommandNames{{
    {Command::RepBuild, "rep-build"},
    {Command::RepCheck, "rep-check"},
    {Command::Casimir, "casimir"},
    {Command::FindimScan, "findim-scan"},
    {Command::SpinForDim, "spin-for-dim"},
    {Command::Limits, "limits"},
    {Command::Unitarity, "unitarity"},
    {Command::Sweep, "sweep"},
}};

// Shortest round-trip decimal form, used for every CSV number so output is
// byte-stable.
std::string num_str(double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

ordered_json jcx(Complex z) {
    return ordered_json::array({z.real(), z.imag()});
}

Complex cx_from_json(const ordered_json& j, const char* field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw DomainError(std::string("config: field '") + field +
                          "' must be a [re, im] number pair");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

ordered_json jmatrix(const ComplexMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(jcx(m(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

void validate_jobspec(const JobSpec& s) {
    if (!is_finite(s.p) || !is_finite(s.q) || !is_finite(s.two_j)) {
        throw DomainError("job: p, q and two_j must be finite");
    }
    if (!(s.tol > 0.0) || !std::isfinite(s.tol)) {
        throw DomainError("job: tol must be positive and finite");
    }
    if (s.trunc < 1) {
        throw DomainError("job: trunc must be >= 1");
    }
    if (s.n_max < 0) {
        throw DomainError("job: nmax must be >= 0");
    }
    if (s.branch_range < 0) {
        throw DomainError("job: branches must be >= 0");
    }
    if (s.dim < 1) {
        throw DomainError("job: dim must be >= 1");
    }
    if (!(s.epsilon > 0.0) || !std::isfinite(s.epsilon)) {
        throw DomainError("job: epsilon must be positive and finite");
    }
    if (s.format != "json" && s.format != "csv") {
        throw DomainError("job: format must be 'json' or 'csv'");
    }
}

struct PointOutcome {
    ordered_json results;
    bool p2_eq_q2 = false;
};

ordered_json findim_results(const FiniteDimReport& report) {
    ordered_json roots = ordered_json::array();
    for (const IntegerRoot& r : report.roots) {
        roots.push_back({{"n", r.n}, {"scaled_residual", r.scaled_residual}});
    }
    ordered_json out;
    out["scan_limit"] = report.scan_limit;
    out["verdict"] =
        report.verdict == FiniteDimVerdict::Finite ? "FINITE" : "NO_ROOT_UP_TO";
    out["smallest_root"] =
        report.smallest_root ? ordered_json(*report.smallest_root) : ordered_json(nullptr);
    out["dimension"] =
        report.dimension ? ordered_json(*report.dimension) : ordered_json(nullptr);
    out["roots"] = roots;
    return out;
}

PointOutcome execute(Command cmd, const JobSpec& s) {
    PointOutcome out;
    const Spin spin(s.two_j);
    switch (cmd) {
    case Command::RepBuild: {
        const DeformationParams params = validate_params(s.p, s.q, s.tol);
        out.p2_eq_q2 = params.p2_eq_q2;
        const RepRealization rep = build_rep(deformed_ladder(spin, params, s.trunc));
        ordered_json coeffs = ordered_json::array();
        for (Complex c : rep.spectrum.coeffs) {
            coeffs.push_back(jcx(c));
        }
        out.results["trunc"] = s.trunc;
        out.results["coeffs"] = coeffs;
        out.results["H"] = jmatrix(rep.H);
        out.results["Eplus"] = jmatrix(rep.Eplus);
        out.results["Eminus"] = jmatrix(rep.Eminus);
        break;
    }
    case Command::RepCheck: {
        const DeformationParams params = validate_params(s.p, s.q, s.tol);
        out.p2_eq_q2 = params.p2_eq_q2;
        const RepRealization rep = build_rep(deformed_ladder(spin, params, s.trunc));
        const RelationReport report = check_relations(rep, params, s.tol);
        out.results["trunc"] = s.trunc;
        out.results["max_residual_h_epm"] = report.max_residual_h_epm;
        out.results["max_residual_epem_interior"] = report.max_residual_epem_interior;
        out.results["boundary_defect"] = report.boundary_defect;
        out.results["boundary_predicted"] = report.boundary_predicted;
        out.results["scale_epem"] = report.scale_epem;
        out.results["interior_count"] = report.interior_count;
        out.results["pass_h_epm"] = report.pass_h_epm;
        out.results["pass_epem_interior"] = report.pass_epem_interior;
        out.results["pass"] = report.pass_h_epm && report.pass_epem_interior;
        break;
    }
    case Command::Casimir: {
        const DeformationParams params = validate_params(s.p, s.q, s.tol);
        out.p2_eq_q2 = params.p2_eq_q2;
        const RepRealization rep = build_rep(deformed_ladder(spin, params, s.trunc));
        const CasimirReport report = check_casimir(rep, params, s.tol);
        out.results["eigenvalue"] = jcx(report.eigenvalue);
        out.results["max_offdiag"] = report.max_offdiag;
        out.results["max_diag_deviation"] = report.max_diag_deviation;
        out.results["max_commutator_residual"] = report.max_commutator_residual;
        out.results["scale"] = report.scale;
        out.results["pass"] = report.pass;
        break;
    }
    case Command::FindimScan: {
        const DeformationParams params = validate_params(s.p, s.q, s.tol);
        out.p2_eq_q2 = params.p2_eq_q2;
        out.results = findim_results(scan_integer_roots(spin, params, s.n_max, s.tol));
        break;
    }
    case Command::SpinForDim: {
        const DeformationParams params = validate_params(s.p, s.q, s.tol);
        out.p2_eq_q2 = params.p2_eq_q2;
        const SpinSolutionSet set =
            spin_for_dimension(s.dim, params, s.branch_range, s.tol);
        ordered_json solutions = ordered_json::array();
        for (const BranchSolution& sol : set.branch_solutions) {
            solutions.push_back(
                {{"k", sol.k}, {"two_j", jcx(sol.two_j)}, {"residual", sol.residual}});
        }
        out.results["dim"] = s.dim;
        out.results["solutions"] = solutions;
        break;
    }
    case Command::Limits: {
        // p is unused here; the reduction point is (q, q).
        const DeformationParams params = validate_params(s.q, s.q, s.tol);
        out.p2_eq_q2 = params.p2_eq_q2;
        const LimitComparison cmp = limit_compare(spin, s.q, s.trunc, s.epsilon);
        out.results["epsilon"] = s.epsilon;
        out.results["one_param_max_rel_dev"] = cmp.one_param_max_rel_dev;
        out.results["classical_max_rel_dev"] = cmp.classical_max_rel_dev;
        break;
    }
    case Command::Unitarity: {
        const DeformationParams params = validate_params(s.p, s.q, s.tol);
        out.p2_eq_q2 = params.p2_eq_q2;
        const std::vector<Complex> ratios = unitarizability_ratios(spin, params, s.trunc);
        const UnitarizabilityReport report = unitarizability_verdict(ratios, s.tol);
        ordered_json jr = ordered_json::array();
        for (Complex r : ratios) {
            jr.push_back(jcx(r));
        }
        out.results["count"] = s.trunc;
        out.results["verdict"] = report.verdict == UnitarizabilityVerdict::UnitarizableUpTo
                                     ? "UNITARIZABLE_UP_TO"
                                     : "NOT_UNITARIZABLE";
        out.results["up_to"] = report.up_to;
        out.results["ratios"] = jr;
        break;
    }
    case Command::Sweep:
        throw DomainError("execute: sweep is not a point command");
    }
    return out;
}

ordered_json inputs_json(const JobSpec& s) {
    ordered_json inputs;
    inputs["p"] = jcx(s.p);
    inputs["q"] = jcx(s.q);
    inputs["two_j"] = jcx(s.two_j);
    inputs["trunc"] = s.trunc;
    inputs["tol"] = s.tol;
    inputs["nmax"] = s.n_max;
    inputs["branches"] = s.branch_range;
    inputs["dim"] = s.dim;
    inputs["epsilon"] = s.epsilon;
    return inputs;
}

ordered_json envelope(Command cmd, const ordered_json& inputs, const ordered_json& flags,
                      const ordered_json& results) {
    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = command_name(cmd);
    report["inputs"] = inputs;
    report["flags"] = flags;
    report["results"] = results;
    return report;
}

void append_row(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += csv_escape(fields[i]);
    }
    out += '\n';
}

std::string opt_int_str(const ordered_json& v) {
    return v.is_null() ? std::string() : num_str(v.get<double>());
}

std::string bool_str(const ordered_json& v) {
    return v.get<bool>() ? "true" : "false";
}

// Flat per-point columns used by sweep CSV rows; lists are summarized.
std::vector<std::string> sweep_flat_header(Command cmd) {
    switch (cmd) {
    case Command::FindimScan:
        return {"verdict", "smallest_root", "dimension", "n_roots"};
    case Command::RepCheck:
        return {"max_residual_h_epm", "max_residual_epem_interior", "boundary_defect",
                "boundary_predicted", "pass"};
    case Command::Casimir:
        return {"eigenvalue_re", "eigenvalue_im", "max_offdiag", "max_diag_deviation",
                "max_commutator_residual", "pass"};
    case Command::SpinForDim:
        return {"k0_two_j_re", "k0_two_j_im", "k0_residual", "n_solutions"};
    case Command::Unitarity:
        return {"verdict", "up_to"};
    case Command::Limits:
        return {"one_param_max_rel_dev", "classical_max_rel_dev"};
    case Command::RepBuild:
        return {"trunc"};
    case Command::Sweep:
        break;
    }
    throw DomainError("sweep: unsupported point command");
}

std::vector<std::string> sweep_flat_fields(Command cmd, const ordered_json& r) {
    switch (cmd) {
    case Command::FindimScan:
        return {r["verdict"].get<std::string>(), opt_int_str(r["smallest_root"]),
                opt_int_str(r["dimension"]), num_str(static_cast<double>(r["roots"].size()))};
    case Command::RepCheck:
        return {num_str(r["max_residual_h_epm"].get<double>()),
                num_str(r["max_residual_epem_interior"].get<double>()),
                num_str(r["boundary_defect"].get<double>()),
                num_str(r["boundary_predicted"].get<double>()), bool_str(r["pass"])};
    case Command::Casimir:
        return {num_str(r["eigenvalue"][0].get<double>()),
                num_str(r["eigenvalue"][1].get<double>()),
                num_str(r["max_offdiag"].get<double>()),
                num_str(r["max_diag_deviation"].get<double>()),
                num_str(r["max_commutator_residual"].get<double>()), bool_str(r["pass"])};
    case Command::SpinForDim: {
        std::string re, im, res;
        for (const auto& sol : r["solutions"]) {
            if (sol["k"].get<int>() == 0) {
                re = num_str(sol["two_j"][0].get<double>());
                im = num_str(sol["two_j"][1].get<double>());
                res = num_str(sol["residual"].get<double>());
                break;
            }
        }
        return {re, im, res, num_str(static_cast<double>(r["solutions"].size()))};
    }
    case Command::Unitarity:
        return {r["verdict"].get<std::string>(), num_str(r["up_to"].get<double>())};
    case Command::Limits:
        return {num_str(r["one_param_max_rel_dev"].get<double>()),
                num_str(r["classical_max_rel_dev"].get<double>())};
    case Command::RepBuild:
        return {num_str(r["trunc"].get<double>())};
    case Command::Sweep:
        break;
    }
    throw DomainError("sweep: unsupported point command");
}

std::string render_csv(Command cmd, const ordered_json& results) {
    std::string out;
    switch (cmd) {
    case Command::RepBuild: {
        append_row(out, {"n", "c_re", "c_im"});
        int n = 0;
        for (const auto& c : results["coeffs"]) {
            append_row(out, {num_str(n), num_str(c[0].get<double>()),
                             num_str(c[1].get<double>())});
            ++n;
        }
        break;
    }
    case Command::RepCheck:
        append_row(out, {"trunc", "max_residual_h_epm", "max_residual_epem_interior",
                         "boundary_defect", "boundary_predicted", "scale_epem",
                         "interior_count", "pass_h_epm", "pass_epem_interior", "pass"});
        append_row(out, {num_str(results["trunc"].get<double>()),
                         num_str(results["max_residual_h_epm"].get<double>()),
                         num_str(results["max_residual_epem_interior"].get<double>()),
                         num_str(results["boundary_defect"].get<double>()),
                         num_str(results["boundary_predicted"].get<double>()),
                         num_str(results["scale_epem"].get<double>()),
                         num_str(results["interior_count"].get<double>()),
                         bool_str(results["pass_h_epm"]),
                         bool_str(results["pass_epem_interior"]), bool_str(results["pass"])});
        break;
    case Command::Casimir:
        append_row(out, {"eigenvalue_re", "eigenvalue_im", "max_offdiag",
                         "max_diag_deviation", "max_commutator_residual", "scale", "pass"});
        append_row(out, {num_str(results["eigenvalue"][0].get<double>()),
                         num_str(results["eigenvalue"][1].get<double>()),
                         num_str(results["max_offdiag"].get<double>()),
                         num_str(results["max_diag_deviation"].get<double>()),
                         num_str(results["max_commutator_residual"].get<double>()),
                         num_str(results["scale"].get<double>()), bool_str(results["pass"])});
        break;
    case Command::FindimScan: {
        append_row(out, {"verdict", "scan_limit", "smallest_root", "dimension", "root_n",
                         "root_residual"});
        const std::string verdict = results["verdict"].get<std::string>();
        const std::string limit = num_str(results["scan_limit"].get<double>());
        const std::string smallest = opt_int_str(results["smallest_root"]);
        const std::string dim = opt_int_str(results["dimension"]);
        if (results["roots"].empty()) {
            append_row(out, {verdict, limit, smallest, dim, "", ""});
        } else {
            for (const auto& root : results["roots"]) {
                append_row(out, {verdict, limit, smallest, dim,
                                 num_str(root["n"].get<double>()),
                                 num_str(root["scaled_residual"].get<double>())});
            }
        }
        break;
    }
    case Command::SpinForDim:
        append_row(out, {"dim", "k", "two_j_re", "two_j_im", "residual"});
        for (const auto& sol : results["solutions"]) {
            append_row(out, {num_str(results["dim"].get<double>()),
                             num_str(sol["k"].get<double>()),
                             num_str(sol["two_j"][0].get<double>()),
                             num_str(sol["two_j"][1].get<double>()),
                             num_str(sol["residual"].get<double>())});
        }
        break;
    case Command::Limits:
        append_row(out, {"epsilon", "one_param_max_rel_dev", "classical_max_rel_dev"});
        append_row(out, {num_str(results["epsilon"].get<double>()),
                         num_str(results["one_param_max_rel_dev"].get<double>()),
                         num_str(results["classical_max_rel_dev"].get<double>())});
        break;
    case Command::Unitarity: {
        append_row(out, {"n", "r_re", "r_im", "verdict", "up_to"});
        const std::string verdict = results["verdict"].get<std::string>();
        const std::string up_to = num_str(results["up_to"].get<double>());
        int n = 1;
        for (const auto& r : results["ratios"]) {
            append_row(out, {num_str(n), num_str(r[0].get<double>()),
                             num_str(r[1].get<double>()), verdict, up_to});
            ++n;
        }
        break;
    }
    case Command::Sweep:
        throw DomainError("render_csv: sweep rendered separately");
    }
    return out;
}

std::string render_sweep_csv(Command point_command, const ordered_json& rows) {
    std::string out;
    std::vector<std::string> header = {"p_re",     "p_im",   "q_re",    "q_im",
                                       "two_j_re", "two_j_im", "status", "message"};
    const std::vector<std::string> flat = sweep_flat_header(point_command);
    header.insert(header.end(), flat.begin(), flat.end());
    append_row(out, header);
    for (const auto& row : rows) {
        std::vector<std::string> fields = {
            num_str(row["point"]["p"][0].get<double>()),
            num_str(row["point"]["p"][1].get<double>()),
            num_str(row["point"]["q"][0].get<double>()),
            num_str(row["point"]["q"][1].get<double>()),
            num_str(row["point"]["two_j"][0].get<double>()),
            num_str(row["point"]["two_j"][1].get<double>()),
            row["status"].get<std::string>(),
            row["message"].get<std::string>()};
        if (row["status"].get<std::string>() == "ok") {
            const std::vector<std::string> vals =
                sweep_flat_fields(point_command, row["results"]);
            fields.insert(fields.end(), vals.begin(), vals.end());
        } else {
            fields.insert(fields.end(), flat.size(), std::string());
        }
        append_row(out, fields);
    }
    return out;
}

std::vector<double> linspace(double from, double to, int count) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        values.push_back(from);
        return values;
    }
    const double step = (to - from) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) {
        values.push_back(from + step * static_cast<double>(i));
    }
    return values;
}

std::vector<Complex> axis_values(const SweepAxis& axis) {
    std::vector<Complex> values;
    for (double re : linspace(axis.re_from, axis.re_to, axis.re_count)) {
        for (double im : linspace(axis.im_from, axis.im_to, axis.im_count)) {
            values.emplace_back(re, im);
        }
    }
    return values;
}

void set_axis_var(JobSpec& spec, const std::string& var, Complex value) {
    if (var == "p") {
        spec.p = value;
    } else if (var == "q") {
        spec.q = value;
    } else if (var == "two_j") {
        spec.two_j = value;
    } else {
        throw DomainError("sweep: axis var must be p, q or two_j");
    }
}

void validate_sweep(const SweepSpec& spec) {
    validate_jobspec(spec.base);
    if (spec.point_command == Command::Sweep) {
        throw DomainError("sweep: point command cannot be sweep");
    }
    if (spec.axes.empty() || spec.axes.size() > 2) {
        throw DomainError("sweep: need 1 or 2 axes");
    }
    if (spec.axes.size() == 2 && spec.axes[0].var == spec.axes[1].var) {
        throw DomainError("sweep: axis vars must be distinct");
    }
    for (const SweepAxis& axis : spec.axes) {
        if (axis.var != "p" && axis.var != "q" && axis.var != "two_j") {
            throw DomainError("sweep: axis var must be p, q or two_j");
        }
        if (axis.re_count < 1 || axis.im_count < 1) {
            throw DomainError("sweep: axis counts must be >= 1");
        }
        if (!std::isfinite(axis.re_from) || !std::isfinite(axis.re_to) ||
            !std::isfinite(axis.im_from) || !std::isfinite(axis.im_to)) {
            throw DomainError("sweep: axis bounds must be finite");
        }
        if ((axis.re_count > 1 && axis.re_to < axis.re_from) ||
            (axis.im_count > 1 && axis.im_to < axis.im_from)) {
            throw DomainError("sweep: axis rectangle must be well-ordered");
        }
    }
}

// Exceptions that mark a single grid point as singular rather than failing
// the whole sweep.
bool is_singular_error(const std::exception& e) {
    return dynamic_cast<const SingularDenominator*>(&e) != nullptr ||
           dynamic_cast<const ZeroParameter*>(&e) != nullptr ||
           dynamic_cast<const ZeroBase*>(&e) != nullptr ||
           dynamic_cast<const LogUndefined*>(&e) != nullptr ||
           dynamic_cast<const NonFinite*>(&e) != nullptr;
}

int exit_code_for(const std::exception& e) {
    if (is_singular_error(e)) {
        return kExitSingular;
    }
    if (dynamic_cast<const DomainError*>(&e) != nullptr ||
        dynamic_cast<const ShapeMismatch*>(&e) != nullptr) {
        return kExitValidation;
    }
    return kExitInternal;
}

} // namespace

const char* command_name(Command c) {
    for (const CommandName& entry : kCommandNames) {
        if (entry.command == c) {
            return entry.name;
        }
    }
    return "unknown";
}

Command command_from_name(const std::string& name) {
    for (const CommandName& entry : kCommandNames) {
        if (name == entry.name) {
            return entry.command;
        }
    }
    throw DomainError("unknown command '" + name + "'");
}

JobResult run_job(const JobSpec& spec) {
    JobResult result;
    try {
        validate_jobspec(spec);
        if (spec.command == Command::Sweep) {
            throw DomainError("run_job: sweep requires a sweep spec (use run_sweep)");
        }
        const PointOutcome outcome = execute(spec.command, spec);
        ordered_json flags;
        flags["p2_eq_q2"] = outcome.p2_eq_q2;
        result.report = envelope(spec.command, inputs_json(spec), flags, outcome.results);
        result.rendered = spec.format == "csv" ? render_csv(spec.command, outcome.results)
                                               : result.report.dump(2) + "\n";
    } catch (const std::exception& e) {
        result.exit_code = exit_code_for(e);
        result.error = e.what();
    }
    return result;
}

JobResult run_sweep(const SweepSpec& spec) {
    JobResult result;
    try {
        validate_sweep(spec);
        std::vector<std::vector<Complex>> grids;
        for (const SweepAxis& axis : spec.axes) {
            grids.push_back(axis_values(axis));
        }
        ordered_json rows = ordered_json::array();
        const std::size_t outer = grids[0].size();
        const std::size_t inner = grids.size() == 2 ? grids[1].size() : 1;
        for (std::size_t i = 0; i < outer; ++i) {
            for (std::size_t k = 0; k < inner; ++k) {
                JobSpec point = spec.base;
                set_axis_var(point, spec.axes[0].var, grids[0][i]);
                if (grids.size() == 2) {
                    set_axis_var(point, spec.axes[1].var, grids[1][k]);
                }
                ordered_json row;
                row["point"] = {{"p", jcx(point.p)},
                                {"q", jcx(point.q)},
                                {"two_j", jcx(point.two_j)}};
                try {
                    const PointOutcome outcome = execute(spec.point_command, point);
                    row["status"] = "ok";
                    row["message"] = "";
                    row["results"] = outcome.results;
                } catch (const std::exception& e) {
                    row["status"] = is_singular_error(e) ? "singular" : "error";
                    row["message"] = e.what();
                    row["results"] = nullptr;
                }
                rows.push_back(row);
            }
        }
        ordered_json inputs = inputs_json(spec.base);
        inputs["point_command"] = command_name(spec.point_command);
        ordered_json axes = ordered_json::array();
        for (const SweepAxis& axis : spec.axes) {
            axes.push_back(
                {{"var", axis.var},
                 {"re", ordered_json::array({axis.re_from, axis.re_to, axis.re_count})},
                 {"im", ordered_json::array({axis.im_from, axis.im_to, axis.im_count})}});
        }
        inputs["axes"] = axes;
        ordered_json results;
        results["rows"] = rows;
        result.report =
            envelope(Command::Sweep, inputs, ordered_json::object(), results);
        result.rendered = spec.base.format == "csv"
                              ? render_sweep_csv(spec.point_command, rows)
                              : result.report.dump(2) + "\n";
    } catch (const std::exception& e) {
        result.exit_code = exit_code_for(e);
        result.error = e.what();
    }
    return result;
}

namespace {

const char* kJobKeys[] = {"command", "p",   "q",       "two_j",   "trunc",  "tol",
                          "nmax",    "branches", "dim", "epsilon", "format", "out",
                          "sweep"};

void check_known_keys(const ordered_json& j) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* key : kJobKeys) {
            if (it.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw DomainError("config: unknown field '" + it.key() + "'");
        }
    }
}

} // namespace

JobSpec job_from_json(const ordered_json& j) {
    if (!j.is_object()) {
        throw DomainError("config: top level must be an object");
    }
    check_known_keys(j);
    JobSpec spec;
    try {
        if (j.contains("command")) {
            spec.command = command_from_name(j["command"].get<std::string>());
        }
        if (j.contains("p")) {
            spec.p = cx_from_json(j["p"], "p");
        }
        if (j.contains("q")) {
            spec.q = cx_from_json(j["q"], "q");
        }
        if (j.contains("two_j")) {
            spec.two_j = cx_from_json(j["two_j"], "two_j");
        }
        if (j.contains("trunc")) {
            spec.trunc = j["trunc"].get<int>();
        }
        if (j.contains("tol")) {
            spec.tol = j["tol"].get<double>();
        }
        if (j.contains("nmax")) {
            spec.n_max = j["nmax"].get<int>();
        }
        if (j.contains("branches")) {
            spec.branch_range = j["branches"].get<int>();
        }
        if (j.contains("dim")) {
            spec.dim = j["dim"].get<int>();
        }
        if (j.contains("epsilon")) {
            spec.epsilon = j["epsilon"].get<double>();
        }
        if (j.contains("format")) {
            spec.format = j["format"].get<std::string>();
        }
        if (j.contains("out")) {
            spec.out = j["out"].get<std::string>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config: ") + e.what());
    }
    return spec;
}

SweepSpec sweep_from_json(const ordered_json& j) {
    SweepSpec spec;
    spec.base = job_from_json(j);
    spec.base.command = Command::Sweep;
    if (!j.contains("sweep") || !j["sweep"].is_object()) {
        throw DomainError("config: sweep requires a 'sweep' object");
    }
    const ordered_json& sw = j["sweep"];
    try {
        if (!sw.contains("command")) {
            throw DomainError("config: sweep.command is required");
        }
        spec.point_command = command_from_name(sw["command"].get<std::string>());
        if (!sw.contains("axes") || !sw["axes"].is_array()) {
            throw DomainError("config: sweep.axes must be an array");
        }
        for (const auto& ja : sw["axes"]) {
            SweepAxis axis;
            axis.var = ja.at("var").get<std::string>();
            if (ja.contains("re")) {
                axis.re_from = ja["re"].at(0).get<double>();
                axis.re_to = ja["re"].at(1).get<double>();
                axis.re_count = ja["re"].at(2).get<int>();
            }
            if (ja.contains("im")) {
                axis.im_from = ja["im"].at(0).get<double>();
                axis.im_to = ja["im"].at(1).get<double>();
                axis.im_count = ja["im"].at(2).get<int>();
            }
            spec.axes.push_back(axis);
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config: ") + e.what());
    }
    return spec;
}

} // namespace upq
