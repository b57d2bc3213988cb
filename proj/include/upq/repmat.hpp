#pragma once

#include "upq/ladder.hpp"

#include <Eigen/Dense>

namespace upq {

using ComplexMatrix = Eigen::MatrixXcd;

// Truncated matrix realization over the descending weight basis: row/column n
// corresponds to the state |j, j-n>, n = 0..N-1, so E- is lower triangular
// and E+ annihilates basis vector 0.
struct RepRealization {
    LadderSpectrum spectrum;
    ComplexMatrix H;      // diagonal, H(n,n) = j - n
    ComplexMatrix Eplus;  // first superdiagonal, Eplus(n, n+1) = c_n
    ComplexMatrix Eminus; // first subdiagonal, Eminus(n+1, n) = c_n

    int dim() const { return static_cast<int>(H.rows()); }
};

RepRealization build_rep(const LadderSpectrum& spectrum);

// Residuals are scaled by 1 + max entry magnitude of the two sides of the
// identity being checked, so tolerances stay meaningful when q^{2j} is
// enormous.  A truncated ladder that does not terminate naturally breaks
// [E+,E-] on the last state by exactly c_{N-1}^2 (the clipped matrix element
// of E-); that defect is reported, never failed on.
struct RelationReport {
    double max_residual_h_epm = 0.0;         // [H,E+-] -/+ E+-, all states
    double max_residual_epem_interior = 0.0; // [E+,E-] - bracket, states 0..N-2
    double boundary_defect = 0.0;            // raw defect on state N-1
    double boundary_predicted = 0.0;         // |c_{N-1}|^2
    double scale_epem = 1.0;                 // scale used for the [E+,E-] residuals
    int interior_count = 0;                  // N-1
    bool pass_h_epm = false;
    bool pass_epem_interior = false;
};

// For a deformed spectrum the commutator target is [2(j-n)]_{p,q} from the
// given params; for a classical spectrum it is 2(j-n).
RelationReport check_relations(const RepRealization& rep, const DeformationParams& params,
                               double tol);

// C = (1 - q^{-2})^{-1} q^{2H} - (1 - p^2)^{-1} p^{-2H} + (q - p^{-1}) E- E+.
// The E-E+ ordering makes C exact on the truncated space: E+ maps it into
// itself and E- brings it back, so no matrix element is clipped.
ComplexMatrix casimir_matrix(const RepRealization& rep, const DeformationParams& params);

struct CasimirReport {
    Complex eigenvalue;                   // C(0,0)
    double max_offdiag = 0.0;             // scaled
    double max_diag_deviation = 0.0;      // scaled deviation from eigenvalue
    double max_commutator_residual = 0.0; // scaled; [C,H] everywhere, [C,E+-] interior
    double scale = 1.0;                   // 1 + max entry magnitude of C's three summands
    bool pass = false;
};

// Scalarity and centrality residuals use the magnitude of C's summands as
// scale: the summands cancel to an eigenvalue that can be many orders of
// magnitude smaller than the terms that produced it.
CasimirReport check_casimir(const RepRealization& rep, const DeformationParams& params,
                            double tol);

struct LimitComparison {
    double one_param_max_rel_dev = 0.0; // c_n^2 vs [n+1]_q [2j-n]_q at p = q
    double classical_max_rel_dev = 0.0; // c_n vs classical ladder at p = q = 1+eps
};

LimitComparison limit_compare(const Spin& spin, Complex q, int truncation, double epsilon);

} // namespace upq
