#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace upq {

using Complex = std::complex<double>;

// Base class for every library error.  The CLI layer maps subclasses onto
// process exit codes (validation vs. numeric singularity), see tools/.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Which guarded denominator (or log argument) came out numerically zero.
enum class SingularLocus {
    PqOne,       // q - p^{-1} = 0, i.e. pq = 1
    QSquaredOne, // q - q^{-1} = 0, i.e. q^2 = 1
    PSquaredOne, // p - p^{-1} = 0, i.e. p^2 = 1
    BracketBase, // base - base^{-1} = 0 in a one-parameter bracket
    LogPq        // Log(pq) = 0 in the spin-for-dimension formula
};

class SingularDenominator : public Error {
  public:
    SingularDenominator(SingularLocus locus, const std::string& what)
        : Error(what), locus_(locus) {}
    SingularLocus locus() const { return locus_; }

  private:
    SingularLocus locus_;
};

class ZeroParameter : public Error {
  public:
    using Error::Error;
};

class ZeroBase : public Error {
  public:
    using Error::Error;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

class LogUndefined : public Error {
  public:
    using Error::Error;
};

class ShapeMismatch : public Error {
  public:
    using Error::Error;
};

class NonFinite : public Error {
  public:
    using Error::Error;
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Validated deformation parameter pair (p, q).  The loci pq = 1, q^2 = 1 and
// p^2 = 1 zero the bracket denominators and are rejected; p = q is a valid
// reduction point, so p^2 = q^2 is only flagged, never rejected.
struct DeformationParams {
    Complex p;
    Complex q;
    bool p2_eq_q2 = false; // metadata flag, see validate_params
    double tol = 1e-10;    // tolerance validation ran with
};

// A locus counts as hit when the corresponding denominator has modulus
// below tol * (1 + |p| + |q|).  Throws ZeroParameter, SingularDenominator
// or NonFinite.
DeformationParams validate_params(Complex p, Complex q, double tol = 1e-10);

// Principal-branch complex power z^w = exp(w Log z), with Log the principal
// logarithm (imaginary part in (-pi, pi]).  Throws ZeroBase on z = 0.
Complex cpow(Complex z, Complex w);

// Two-parametric bracket (q^x - p^{-x}) / (q - p^{-1}).
Complex pq_bracket(Complex x, const DeformationParams& params);

// Symmetric one-parameter bracket (b^x - b^{-x}) / (b - b^{-1}).  This is the
// convention under which the deformed matrix elements close the commutator
// [E+,E-] = [2H]_{p,q}; see ladder.hpp.
Complex q_bracket(Complex x, Complex base);

} // namespace upq
