#include "upq/qnum.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using upq::Complex;

TEST_CASE("validate_params accepts generic parameters") {
    const auto params = upq::validate_params(Complex(2, 0), Complex(3, 0), 1e-12);
    CHECK(params.p == Complex(2, 0));
    CHECK(params.q == Complex(3, 0));
    CHECK_FALSE(params.p2_eq_q2);
}

TEST_CASE("validate_params rejects the singular loci") {
    CHECK_THROWS_AS(upq::validate_params(Complex(2, 0), Complex(0.5, 0), 1e-12),
                    upq::SingularDenominator);
    try {
        upq::validate_params(Complex(2, 0), Complex(0.5, 0), 1e-12);
    } catch (const upq::SingularDenominator& e) {
        CHECK(e.locus() == upq::SingularLocus::PqOne);
        CHECK(std::string(e.what()).find("pq=1") != std::string::npos);
    }
    try {
        upq::validate_params(Complex(2, 0), Complex(-1, 0), 1e-12);
    } catch (const upq::SingularDenominator& e) {
        CHECK(e.locus() == upq::SingularLocus::QSquaredOne);
    }
    try {
        upq::validate_params(Complex(1, 0), Complex(3, 0), 1e-12);
    } catch (const upq::SingularDenominator& e) {
        CHECK(e.locus() == upq::SingularLocus::PSquaredOne);
    }
    CHECK_THROWS_AS(upq::validate_params(Complex(0, 0), Complex(3, 0), 1e-12),
                    upq::ZeroParameter);
    CHECK_THROWS_AS(upq::validate_params(Complex(2, 0), Complex(3, 0), 0.0),
                    upq::DomainError);
}

TEST_CASE("validate_params permits p = q near the classical point") {
    const Complex v(1.0 + 1e-6, 0.0);
    const auto params = upq::validate_params(v, v, 1e-12);
    CHECK(params.p2_eq_q2); // flagged, not rejected
}

TEST_CASE("cpow principal branch") {
    const double e = std::exp(1.0);
    CHECK(std::abs(upq::cpow(Complex(e, 0), Complex(1, 0)) - Complex(e, 0)) < 1e-14);
    CHECK(std::abs(upq::cpow(Complex(4, 0), Complex(0.5, 0)) - Complex(2, 0)) < 1e-14);
    // (-1)^{1/2} = exp(0.5 * i pi) = i on the principal branch
    CHECK(std::abs(upq::cpow(Complex(-1, 0), Complex(0.5, 0)) - Complex(0, 1)) < 1e-14);
    CHECK(std::abs(upq::cpow(Complex(0.3, 0.4), Complex(0, 0)) - Complex(1, 0)) == 0.0);
    CHECK_THROWS_AS(upq::cpow(Complex(0, 0), Complex(1, 0)), upq::ZeroBase);
}

TEST_CASE("cpow additivity for real exponents") {
    auto rng = upqtest::make_rng(101);
    std::uniform_real_distribution<double> expo(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const Complex z = upqtest::random_annulus(rng, 0.3, 3.0);
        const double a = expo(rng), b = expo(rng);
        const Complex lhs = upq::cpow(z, Complex(a, 0)) * upq::cpow(z, Complex(b, 0));
        const Complex rhs = upq::cpow(z, Complex(a + b, 0));
        CHECK(upqtest::rel_dev(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("pq_bracket frozen values") {
    const auto params = upq::validate_params(Complex(2, 0), Complex(3, 0));
    CHECK(std::abs(upq::pq_bracket(Complex(0, 0), params)) == 0.0);
    CHECK(std::abs(upq::pq_bracket(Complex(1, 0), params) - Complex(1, 0)) < 1e-15);
    // [2]_{p,q} = q + p^{-1}
    CHECK(std::abs(upq::pq_bracket(Complex(2, 0), params) - Complex(3.5, 0)) < 1e-14);
}

TEST_CASE("pq_bracket defining identity") {
    // [x]_{p,q} (q - p^{-1}) + p^{-x} = q^x
    auto rng = upqtest::make_rng(102);
    for (int i = 0; i < 200; ++i) {
        const auto params = upqtest::random_params(rng);
        const Complex x = upqtest::random_two_j(rng, 4.0);
        const Complex p_term = upq::cpow(params.p, -x);
        const Complex lhs = upq::pq_bracket(x, params) * (params.q - 1.0 / params.p) + p_term;
        const Complex rhs = upq::cpow(params.q, x);
        // relative to the operands: either power may dwarf the other
        CHECK(std::abs(lhs - rhs) / (1.0 + std::abs(rhs) + std::abs(p_term)) < 1e-12);
    }
}

TEST_CASE("q_bracket frozen values and guards") {
    CHECK(std::abs(upq::q_bracket(Complex(1, 0), Complex(5, 0)) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(upq::q_bracket(Complex(2, 0), Complex(3, 0)) - Complex(10.0 / 3.0, 0)) <
          1e-14);
    // classical limit [3]_q -> 3 as q -> 1
    CHECK(std::abs(upq::q_bracket(Complex(3, 0), Complex(1.0 + 1e-8, 0)) - Complex(3, 0)) <
          1e-6);
    CHECK_THROWS_AS(upq::q_bracket(Complex(2, 0), Complex(1, 0)), upq::SingularDenominator);
}

TEST_CASE("q_bracket antisymmetry and p = q reduction") {
    auto rng = upqtest::make_rng(103);
    for (int i = 0; i < 200; ++i) {
        const Complex x = upqtest::random_two_j(rng, 4.0);
        Complex base;
        do {
            base = upqtest::random_annulus(rng, 0.5, 2.0);
        } while (std::abs(base * base - 1.0) < 1e-3);
        const Complex plus = upq::q_bracket(x, base);
        const Complex minus = upq::q_bracket(-x, base);
        CHECK(std::abs(plus + minus) / (1.0 + std::abs(plus)) < 1e-12);

        const auto params = upq::validate_params(base, base);
        CHECK(std::abs(upq::pq_bracket(x, params) - plus) / (1.0 + std::abs(plus)) < 1e-12);
    }
}
