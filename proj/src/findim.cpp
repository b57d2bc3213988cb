#include "upq/findim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace upq {

Complex f_eval(Complex x, const Spin& spin, const DeformationParams& params) {
    const Complex e = spin.two_j - x;
    return cpow(params.q, e) * q_bracket(x + 1.0, params.q) -
           cpow(params.p, -e) * q_bracket(x + 1.0, params.p);
}

double scan_residual(Complex x, const Spin& spin, const DeformationParams& params) {
    // Telescoped terms: q^{2j-x}[x+1]_q = (q^{2j+1} - q^{2j-2x-1})/(q - q^{-1})
    // and p^{-2j+x}[x+1]_p = (p^{2x+1-2j} - p^{-2j-1})/(p - p^{-1}).
    const Complex lq = std::log(params.q);
    const Complex lp = std::log(params.p);
    const Complex a1 = (spin.two_j + 1.0) * lq;
    const Complex b1 = (spin.two_j - 2.0 * x - 1.0) * lq;
    const Complex a2 = (2.0 * x + 1.0 - spin.two_j) * lp;
    const Complex b2 = -(spin.two_j + 1.0) * lp;
    // Factor e^{-shift} out of numerator and denominator so no single
    // exponential overflows; the quotient is unchanged.
    const double shift = std::max(
        0.0, std::max(std::max(a1.real(), b1.real()), std::max(a2.real(), b2.real())));
    auto scaled_exp = [shift](Complex a) {
        return std::exp(Complex(a.real() - shift, a.imag()));
    };
    const Complex t1 = (scaled_exp(a1) - scaled_exp(b1)) / (params.q - 1.0 / params.q);
    const Complex t2 = (scaled_exp(a2) - scaled_exp(b2)) / (params.p - 1.0 / params.p);
    const double denom = std::abs(t1) + std::abs(t2) + std::exp(-shift);
    return std::abs(t1 - t2) / denom;
}

FiniteDimReport scan_integer_roots(const Spin& spin, const DeformationParams& params,
                                   int n_max, double tol) {
    if (n_max < 0) {
        throw DomainError("scan_integer_roots: n_max must be >= 0");
    }
    if (tol <= 0.0) {
        throw DomainError("scan_integer_roots: tol must be positive");
    }
    FiniteDimReport report;
    report.spin = spin;
    report.params = params;
    report.scan_limit = n_max;
    for (int n = 0; n <= n_max; ++n) {
        const double r = scan_residual(static_cast<double>(n), spin, params);
        if (r < tol) {
            report.roots.push_back({n, r});
        }
    }
    if (!report.roots.empty()) {
        report.smallest_root = report.roots.front().n;
        report.dimension = *report.smallest_root + 1;
        report.verdict = FiniteDimVerdict::Finite;
    } else {
        report.verdict = FiniteDimVerdict::NoRootUpTo;
    }
    return report;
}

SpinSolutionSet spin_for_dimension(int dimension, const DeformationParams& params,
                                   int branch_range, double tol) {
    if (dimension < 1) {
        throw DomainError("spin_for_dimension: dimension must be >= 1");
    }
    if (branch_range < 0) {
        throw DomainError("spin_for_dimension: branch_range must be >= 0");
    }
    const double d = static_cast<double>(dimension);
    // [D]_p / [D]_q with a cancellation guard on both brackets.
    const Complex pd = cpow(params.p, d), pdi = cpow(params.p, -d);
    const Complex qd = cpow(params.q, d), qdi = cpow(params.q, -d);
    const Complex num_p = pd - pdi, num_q = qd - qdi;
    if (std::abs(num_p) < 1e-12 * (std::abs(pd) + std::abs(pdi)) ||
        std::abs(num_q) < 1e-12 * (std::abs(qd) + std::abs(qdi))) {
        throw LogUndefined("spin_for_dimension: [D]_p or [D]_q vanishes, log undefined");
    }
    const Complex ratio =
        (num_p / (params.p - 1.0 / params.p)) / (num_q / (params.q - 1.0 / params.q));
    const Complex log_pq = std::log(params.p * params.q);
    if (log_pq == Complex(0.0, 0.0)) {
        throw SingularDenominator(SingularLocus::LogPq,
                                  "spin_for_dimension: Log(pq) = 0");
    }
    const Complex log_ratio = std::log(ratio);

    SpinSolutionSet set;
    set.dimension = dimension;
    set.params = params;
    for (int k = -branch_range; k <= branch_range; ++k) {
        const Complex two_j =
            (log_ratio + Complex(0.0, 2.0 * std::numbers::pi * k)) / log_pq + (d - 1.0);
        if (!is_finite(two_j)) {
            continue;
        }
        const Spin spin(two_j);
        const double residual = scan_residual(d - 1.0, spin, params);
        if (std::isfinite(residual) && residual < tol) {
            set.branch_solutions.push_back({k, two_j, residual});
        }
    }
    return set;
}

RoundtripReport roundtrip_check(int dimension, const DeformationParams& params,
                                int branch_range, int n_max, double tol) {
    const SpinSolutionSet set = spin_for_dimension(dimension, params, branch_range, tol);
    RoundtripReport report;
    report.dimension = dimension;
    for (const BranchSolution& sol : set.branch_solutions) {
        const FiniteDimReport scan =
            scan_integer_roots(Spin(sol.two_j), params, n_max, tol);
        RoundtripEntry entry;
        entry.solution = sol;
        entry.smallest_root = scan.smallest_root;
        entry.d_minus_1_is_root =
            std::any_of(scan.roots.begin(), scan.roots.end(),
                        [&](const IntegerRoot& r) { return r.n == dimension - 1; });
        entry.d_minus_1_is_smallest =
            scan.smallest_root.has_value() && *scan.smallest_root == dimension - 1;
        report.entries.push_back(entry);
    }
    return report;
}

} // namespace upq
