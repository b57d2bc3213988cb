#include "upq/repmat.hpp"

#include <cmath>

namespace upq {

namespace {

double maxabs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double scaled_residual(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    return maxabs(lhs - rhs) / (1.0 + std::max(maxabs(lhs), maxabs(rhs)));
}

// Expected [E+,E-] diagonal: the deformed bracket when the spectrum carries
// params, the classical 2(j-n) otherwise.
ComplexMatrix commutator_target(const RepRealization& rep, const DeformationParams& params) {
    const int n = rep.dim();
    ComplexMatrix target = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const Complex two_h = rep.spectrum.spin.two_j - 2.0 * i;
        target(i, i) = rep.spectrum.params ? pq_bracket(two_h, params) : two_h;
    }
    return target;
}

struct CasimirParts {
    ComplexMatrix matrix;
    double term_scale; // 1 + max entry magnitude over the three summands
};

CasimirParts casimir_parts(const RepRealization& rep, const DeformationParams& params) {
    const int n = rep.dim();
    const Complex q = params.q, p = params.p;
    const Complex alpha = 1.0 / (1.0 - cpow(q, -2.0));
    const Complex beta = 1.0 / (1.0 - p * p);

    ComplexMatrix term_q = ComplexMatrix::Zero(n, n);
    ComplexMatrix term_p = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const Complex two_h = rep.spectrum.spin.two_j - 2.0 * i;
        term_q(i, i) = alpha * cpow(q, two_h);
        term_p(i, i) = beta * cpow(p, -two_h);
    }
    const ComplexMatrix term_ladder = (q - 1.0 / p) * (rep.Eminus * rep.Eplus);

    CasimirParts parts;
    parts.matrix = term_q - term_p + term_ladder;
    parts.term_scale =
        1.0 + std::max(maxabs(term_q), std::max(maxabs(term_p), maxabs(term_ladder)));
    if (!parts.matrix.allFinite()) {
        throw NonFinite("casimir_matrix: non-finite entries");
    }
    return parts;
}

} // namespace

RepRealization build_rep(const LadderSpectrum& spectrum) {
    const int n = spectrum.truncation;
    if (n < 1 || static_cast<int>(spectrum.coeffs.size()) != n) {
        throw ShapeMismatch("build_rep: coefficient count must equal truncation");
    }
    RepRealization rep;
    rep.spectrum = spectrum;
    rep.H = ComplexMatrix::Zero(n, n);
    rep.Eplus = ComplexMatrix::Zero(n, n);
    rep.Eminus = ComplexMatrix::Zero(n, n);
    const Complex j = spectrum.spin.j();
    for (int i = 0; i < n; ++i) {
        rep.H(i, i) = j - static_cast<double>(i);
    }
    for (int i = 0; i + 1 < n; ++i) {
        rep.Eplus(i, i + 1) = spectrum.coeffs[static_cast<std::size_t>(i)];
        rep.Eminus(i + 1, i) = spectrum.coeffs[static_cast<std::size_t>(i)];
    }
    return rep;
}

RelationReport check_relations(const RepRealization& rep, const DeformationParams& params,
                               double tol) {
    if (tol <= 0.0) {
        throw DomainError("check_relations: tol must be positive");
    }
    const int n = rep.dim();
    if (rep.Eplus.rows() != n || rep.Eplus.cols() != n || rep.Eminus.rows() != n ||
        rep.Eminus.cols() != n) {
        throw ShapeMismatch("check_relations: generator shapes disagree");
    }
    RelationReport report;

    const ComplexMatrix comm_hp = rep.H * rep.Eplus - rep.Eplus * rep.H;
    const ComplexMatrix comm_hm = rep.H * rep.Eminus - rep.Eminus * rep.H;
    report.max_residual_h_epm = std::max(scaled_residual(comm_hp, rep.Eplus),
                                         scaled_residual(comm_hm, -rep.Eminus));

    const ComplexMatrix comm = rep.Eplus * rep.Eminus - rep.Eminus * rep.Eplus;
    const ComplexMatrix target = commutator_target(rep, params);
    const ComplexMatrix diff = comm - target;
    report.scale_epem = 1.0 + std::max(maxabs(comm), maxabs(target));
    report.interior_count = n - 1;
    double interior = 0.0;
    if (n > 1) {
        interior = maxabs(diff.leftCols(n - 1));
    }
    report.max_residual_epem_interior = interior / report.scale_epem;
    report.boundary_defect = maxabs(diff.col(n - 1));
    const Complex last = rep.spectrum.coeffs.back();
    report.boundary_predicted = std::norm(last);

    report.pass_h_epm = report.max_residual_h_epm < tol;
    report.pass_epem_interior = report.max_residual_epem_interior < tol;
    return report;
}

ComplexMatrix casimir_matrix(const RepRealization& rep, const DeformationParams& params) {
    return casimir_parts(rep, params).matrix;
}

CasimirReport check_casimir(const RepRealization& rep, const DeformationParams& params,
                            double tol) {
    if (tol <= 0.0) {
        throw DomainError("check_casimir: tol must be positive");
    }
    const int n = rep.dim();
    const CasimirParts parts = casimir_parts(rep, params);
    const ComplexMatrix& c = parts.matrix;

    CasimirReport report;
    report.eigenvalue = c(0, 0);
    report.scale = parts.term_scale;

    double offdiag = 0.0;
    double diag_dev = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (i == k) {
                diag_dev = std::max(diag_dev, std::abs(c(i, i) - report.eigenvalue));
            } else {
                offdiag = std::max(offdiag, std::abs(c(i, k)));
            }
        }
    }
    report.max_offdiag = offdiag / report.scale;
    report.max_diag_deviation = diag_dev / report.scale;

    auto commutator_residual = [&](const ComplexMatrix& x, bool interior_only) {
        const ComplexMatrix comm = c * x - x * c;
        const int cols = interior_only ? n - 1 : n;
        const double raw = cols > 0 ? maxabs(comm.leftCols(cols)) : 0.0;
        return raw / (1.0 + parts.term_scale * (1.0 + maxabs(x)));
    };
    report.max_commutator_residual =
        std::max({commutator_residual(rep.H, false), commutator_residual(rep.Eplus, true),
                  commutator_residual(rep.Eminus, true)});

    report.pass = report.max_offdiag < tol && report.max_diag_deviation < tol &&
                  report.max_commutator_residual < tol;
    return report;
}

LimitComparison limit_compare(const Spin& spin, Complex q, int truncation, double epsilon) {
    if (epsilon <= 0.0) {
        throw DomainError("limit_compare: epsilon must be positive");
    }
    auto rel_dev = [](Complex a, Complex b) {
        const double diff = std::abs(a - b);
        return diff == 0.0 ? 0.0 : diff / std::max(std::abs(a), std::abs(b));
    };
    LimitComparison cmp;

    const DeformationParams at_q = validate_params(q, q);
    const LadderSpectrum reduced = deformed_ladder(spin, at_q, truncation);
    for (int n = 0; n < truncation; ++n) {
        const Complex c2 = reduced.coeffs[static_cast<std::size_t>(n)] *
                           reduced.coeffs[static_cast<std::size_t>(n)];
        const Complex closed =
            q_bracket(n + 1.0, q) * q_bracket(spin.two_j - static_cast<double>(n), q);
        cmp.one_param_max_rel_dev = std::max(cmp.one_param_max_rel_dev, rel_dev(c2, closed));
    }

    const DeformationParams near_one = validate_params(1.0 + epsilon, 1.0 + epsilon);
    const LadderSpectrum deformed = deformed_ladder(spin, near_one, truncation);
    const LadderSpectrum classical = classical_ladder(spin, truncation);
    for (int n = 0; n < truncation; ++n) {
        cmp.classical_max_rel_dev =
            std::max(cmp.classical_max_rel_dev,
                     rel_dev(deformed.coeffs[static_cast<std::size_t>(n)],
                             classical.coeffs[static_cast<std::size_t>(n)]));
    }
    return cmp;
}

} // namespace upq
