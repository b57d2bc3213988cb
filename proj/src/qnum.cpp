#include "upq/qnum.hpp"

#include <cmath>
#include <sstream>

namespace upq {

namespace {

// Last-ditch guard for the one-parameter bracket denominator; validation of
// a DeformationParams pair is the real gate and runs with the caller's tol.
constexpr double kBracketGuard = 1e-14;

std::string cx_str(Complex z) {
    std::ostringstream os;
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
}

} // namespace

DeformationParams validate_params(Complex p, Complex q, double tol) {
    if (tol <= 0.0) {
        throw DomainError("validate_params: tol must be positive");
    }
    if (!is_finite(p) || !is_finite(q)) {
        throw NonFinite("validate_params: non-finite parameter");
    }
    if (std::abs(p) <= tol || std::abs(q) <= tol) {
        throw ZeroParameter("validate_params: p and q must be nonzero");
    }
    const double scale = 1.0 + std::abs(p) + std::abs(q);
    if (std::abs(q - 1.0 / p) < tol * scale) {
        throw SingularDenominator(SingularLocus::PqOne,
                                  "pq=1 singular: p=" + cx_str(p) + ", q=" + cx_str(q));
    }
    if (std::abs(q - 1.0 / q) < tol * scale) {
        throw SingularDenominator(SingularLocus::QSquaredOne,
                                  "q^2=1 singular: q=" + cx_str(q));
    }
    if (std::abs(p - 1.0 / p) < tol * scale) {
        throw SingularDenominator(SingularLocus::PSquaredOne,
                                  "p^2=1 singular: p=" + cx_str(p));
    }
    DeformationParams out;
    out.p = p;
    out.q = q;
    out.tol = tol;
    out.p2_eq_q2 = std::abs(p * p - q * q) < tol * scale * scale;
    return out;
}

namespace {

// Binary powering for integer exponents.  Integer powers are independent of
// the logarithm branch, so this agrees with exp(w Log z) exactly and avoids
// the exp/log round-off (in particular z^0 = 1 and z^1 = z hold exactly).
Complex ipow(Complex z, long long n) {
    if (n < 0) {
        return 1.0 / ipow(z, -n);
    }
    Complex acc(1.0, 0.0);
    Complex base = z;
    while (n > 0) {
        if (n & 1) {
            acc *= base;
        }
        n >>= 1;
        if (n > 0) {
            base *= base;
        }
    }
    return acc;
}

} // namespace

Complex cpow(Complex z, Complex w) {
    if (!is_finite(z) || !is_finite(w)) {
        throw NonFinite("cpow: non-finite argument");
    }
    if (z == Complex(0.0, 0.0)) {
        throw ZeroBase("cpow: zero base");
    }
    if (w.imag() == 0.0 && w.real() == std::nearbyint(w.real()) &&
        std::abs(w.real()) <= 1e9) {
        return ipow(z, std::llround(w.real()));
    }
    return std::exp(w * std::log(z));
}

Complex pq_bracket(Complex x, const DeformationParams& params) {
    return (cpow(params.q, x) - cpow(params.p, -x)) / (params.q - 1.0 / params.p);
}

Complex q_bracket(Complex x, Complex base) {
    const Complex den = base - 1.0 / base;
    const double scale = 1.0 + std::abs(base) + 1.0 / std::abs(base);
    if (std::abs(den) < kBracketGuard * scale) {
        throw SingularDenominator(SingularLocus::BracketBase,
                                  "q_bracket: base^2=1 singular, base=" + cx_str(base));
    }
    return (cpow(base, x) - cpow(base, -x)) / den;
}

} // namespace upq
