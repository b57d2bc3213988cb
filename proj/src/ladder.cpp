#include "upq/ladder.hpp"

#include <cmath>
#include <string>

namespace upq {

namespace {

constexpr double kIntegralTol = 1e-12;

// Squared step coefficient c_n^2 of the deformed ladder.
Complex deformed_step_squared(const Spin& spin, const DeformationParams& params, int n) {
    const Complex e = spin.two_j - static_cast<double>(n); // 2j - n
    const Complex num = cpow(params.q, e) * q_bracket(n + 1.0, params.q) -
                        cpow(params.p, -e) * q_bracket(n + 1.0, params.p);
    return num / (params.q - 1.0 / params.p);
}

} // namespace

Spin::Spin(Complex two_j_value) : two_j(two_j_value) {
    if (!is_finite(two_j_value)) {
        throw NonFinite("Spin: non-finite 2j");
    }
    const double r = std::round(two_j_value.real());
    integral_two_j = r >= 0.0 && std::abs(two_j_value.real() - r) <= kIntegralTol &&
                     std::abs(two_j_value.imag()) <= kIntegralTol;
}

int Spin::two_j_int() const {
    return static_cast<int>(std::lround(two_j.real()));
}

LadderSpectrum deformed_ladder(const Spin& spin, const DeformationParams& params,
                               int truncation) {
    if (truncation < 1) {
        throw DomainError("deformed_ladder: truncation must be >= 1");
    }
    LadderSpectrum spec;
    spec.spin = spin;
    spec.params = params;
    spec.truncation = truncation;
    spec.coeffs.reserve(static_cast<std::size_t>(truncation));
    for (int n = 0; n < truncation; ++n) {
        const Complex c = std::sqrt(deformed_step_squared(spin, params, n));
        if (!is_finite(c)) {
            throw NonFinite("deformed_ladder: coefficient overflow at n=" +
                            std::to_string(n) + "; reduce truncation");
        }
        spec.coeffs.push_back(c);
    }
    return spec;
}

LadderSpectrum classical_ladder(const Spin& spin, int truncation) {
    if (truncation < 1) {
        throw DomainError("classical_ladder: truncation must be >= 1");
    }
    LadderSpectrum spec;
    spec.spin = spin;
    spec.truncation = truncation;
    spec.coeffs.reserve(static_cast<std::size_t>(truncation));
    for (int n = 0; n < truncation; ++n) {
        const Complex sq = (n + 1.0) * (spin.two_j - static_cast<double>(n));
        const Complex c = std::sqrt(sq);
        if (!is_finite(c)) {
            throw NonFinite("classical_ladder: non-finite coefficient");
        }
        spec.coeffs.push_back(c);
    }
    return spec;
}

double classical_normalizer(int n, const Spin& spin) {
    if (!spin.integral_two_j) {
        throw DomainError("classical_normalizer: 2j must be a non-negative integer");
    }
    const int two_j = spin.two_j_int();
    if (n < 0 || n > two_j) {
        throw DomainError("classical_normalizer: need 0 <= n <= 2j");
    }
    // (2j)! n!/(2j-n)! = prod_{m=1..n} m (2j-m+1)
    double squared = 1.0;
    for (int m = 1; m <= n; ++m) {
        squared *= static_cast<double>(m) * static_cast<double>(two_j - m + 1);
    }
    return std::sqrt(squared);
}

std::vector<Complex> unitarizability_ratios(const Spin& spin,
                                            const DeformationParams& params, int count) {
    if (count < 0) {
        throw DomainError("unitarizability_ratios: count must be >= 0");
    }
    std::vector<Complex> ratios;
    ratios.reserve(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n) {
        const Complex e = spin.two_j - static_cast<double>(n) + 1.0; // 2j - n + 1
        const Complex num = cpow(params.q, e) * q_bracket(static_cast<double>(n), params.q) -
                            cpow(params.p, -e) * q_bracket(static_cast<double>(n), params.p);
        const Complex r = num / (params.q - 1.0 / params.p);
        if (!is_finite(r)) {
            throw NonFinite("unitarizability_ratios: overflow at n=" + std::to_string(n));
        }
        ratios.push_back(r);
    }
    return ratios;
}

UnitarizabilityReport unitarizability_verdict(const std::vector<Complex>& ratios,
                                              double tol) {
    if (tol <= 0.0) {
        throw DomainError("unitarizability_verdict: tol must be positive");
    }
    int good = 0;
    for (const Complex& r : ratios) {
        const bool real_positive =
            std::abs(r.imag()) / (1.0 + std::abs(r)) < tol && r.real() > tol;
        if (!real_positive) {
            break;
        }
        ++good;
    }
    UnitarizabilityReport report;
    report.up_to = good;
    report.verdict = good == 0 ? UnitarizabilityVerdict::NotUnitarizable
                               : UnitarizabilityVerdict::UnitarizableUpTo;
    return report;
}

} // namespace upq
