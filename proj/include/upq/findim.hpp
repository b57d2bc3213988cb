#pragma once

#include "upq/ladder.hpp"

#include <optional>
#include <vector>

namespace upq {

// f(x) = q^{2j-x} [x+1]_q - p^{-2j+x} [x+1]_p, evaluated directly.  Equals
// (q - p^{-1}) c_x^2 for the ladder step coefficients, so integer roots of f
// are exactly the vanishing matrix elements of E-.
Complex f_eval(Complex x, const Spin& spin, const DeformationParams& params);

// Scaled root residual |f(x)| / (|q^{2j-x}[x+1]_q| + |p^{-2j+x}[x+1]_p| + 1).
// Both terms grow like exp(|x| log|q|) and overflow doubles long before the
// residual becomes meaningless, so the quotient is evaluated with the largest
// exponential factored out instead of forming f(x) itself.
double scan_residual(Complex x, const Spin& spin, const DeformationParams& params);

struct IntegerRoot {
    int n = 0;
    double scaled_residual = 0.0;
};

enum class FiniteDimVerdict { Finite, NoRootUpTo };

// Result of the integer root scan of f.  A FINITE verdict is a proof of a
// finite-dimensional subrepresentation of dimension smallest_root + 1; a
// NO_ROOT_UP_TO verdict is evidence (not proof) that the representation is
// infinite-dimensional.
struct FiniteDimReport {
    Spin spin;
    DeformationParams params;
    int scan_limit = 0;
    std::vector<IntegerRoot> roots; // ascending n
    std::optional<int> smallest_root;
    std::optional<int> dimension; // smallest_root + 1
    FiniteDimVerdict verdict = FiniteDimVerdict::NoRootUpTo;
};

FiniteDimReport scan_integer_roots(const Spin& spin, const DeformationParams& params,
                                   int n_max, double tol);

struct BranchSolution {
    int k = 0;          // logarithm branch index
    Complex two_j;      // (Log([D]_p/[D]_q) + 2 pi i k)/Log(pq) + D - 1
    double residual = 0.0; // scaled |f(D-1)| at this spin
};

// Every spin whose ladder closes after exactly D states, one per log branch.
// Each branch is a genuinely different complex spin with the same dimension.
struct SpinSolutionSet {
    int dimension = 0;
    DeformationParams params;
    std::vector<BranchSolution> branch_solutions; // ascending k
};

// Throws LogUndefined when [D]_p or [D]_q vanishes.  Solutions whose residual
// exceeds tol (numeric degradation at extreme branches) are dropped.
SpinSolutionSet spin_for_dimension(int dimension, const DeformationParams& params,
                                   int branch_range, double tol = 1e-9);

struct RoundtripEntry {
    BranchSolution solution;
    bool d_minus_1_is_root = false;
    bool d_minus_1_is_smallest = false; // reported, not guaranteed
    std::optional<int> smallest_root;
};

struct RoundtripReport {
    int dimension = 0;
    std::vector<RoundtripEntry> entries;
};

// For each branch spin of spin_for_dimension, rescans the integers and
// reports whether D-1 is a root and whether it is the smallest one (the
// dimension formula does not promise minimality).
RoundtripReport roundtrip_check(int dimension, const DeformationParams& params,
                                int branch_range, int n_max, double tol = 1e-9);

} // namespace upq
