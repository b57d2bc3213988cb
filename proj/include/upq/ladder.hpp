#pragma once

#include "upq/qnum.hpp"

#include <optional>
#include <vector>

namespace upq {

// Highest weight ("spin") j, stored as 2j so half-integral spins stay exact.
struct Spin {
    Complex two_j{0.0, 0.0};
    bool integral_two_j = false; // 2j is a non-negative integer within 1e-12

    Spin() = default;
    explicit Spin(Complex two_j_value);

    Complex j() const { return two_j / 2.0; }
    // Rounded value of 2j; only meaningful when integral_two_j is set.
    int two_j_int() const;
};

// Ladder coefficients c_n of a truncated weight ladder.  One array serves
// both generators: c_n is the matrix element of E- for |j,j-n> -> |j,j-n-1>
// and of E+ for |j,j-n-1> -> |j,j-n>.  The two square-rooted expressions are
// equal under the index shift m -> m-1, so sharing one principal square root
// keeps the commutation relations independent of any branch choice.  Phases
// are gauge; checks downstream only consume c_n^2 or |c_n|^2.
struct LadderSpectrum {
    Spin spin;
    std::optional<DeformationParams> params; // empty for the classical ladder
    std::vector<Complex> coeffs;             // c_n, n = 0..truncation-1
    int truncation = 0;
};

// c_n^2 = (q^{2j-n} [n+1]_q - p^{-(2j-n)} [n+1]_p) / (q - p^{-1}).
// Truncation is caller-chosen; the ladder is in general infinite and is
// never auto-extended.
LadderSpectrum deformed_ladder(const Spin& spin, const DeformationParams& params,
                               int truncation);

// c_n = sqrt((n+1)(2j-n)), the non-deformed ladder.
LadderSpectrum classical_ladder(const Spin& spin, int truncation);

// sqrt((2j)! n! / (2j-n)!).  Requires an integral spin (2j a non-negative
// integer) and n <= 2j; throws DomainError otherwise.
double classical_normalizer(int n, const Spin& spin);

// r_n = (q^{2j-n+1} [n]_q - p^{-2j+n-1} [n]_p) / (q - p^{-1}) for n = 1..count:
// the value |A_{n-1}/A_n|^2 must take for the normalization coefficients of a
// unitary realization ((E+-)^dagger = E-+).
std::vector<Complex> unitarizability_ratios(const Spin& spin,
                                            const DeformationParams& params, int count);

enum class UnitarizabilityVerdict { NotUnitarizable, UnitarizableUpTo };

struct UnitarizabilityReport {
    UnitarizabilityVerdict verdict = UnitarizabilityVerdict::NotUnitarizable;
    int up_to = 0; // largest n with r_1..r_n all real-positive; 0 if r_1 fails
};

// r is accepted as real-positive when |Im r|/(1+|r|) < tol and Re r > tol.
UnitarizabilityReport unitarizability_verdict(const std::vector<Complex>& ratios,
                                              double tol);

} // namespace upq
