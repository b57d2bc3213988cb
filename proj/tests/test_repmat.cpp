#include "upq/repmat.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using upq::Complex;
using upq::Spin;
using upqtest::TestMatrix;

namespace {

const upq::DeformationParams kP2Q3 = upq::validate_params(Complex(2, 0), Complex(3, 0));

upq::RepRealization classical_rep(double two_j, int n) {
    return upq::build_rep(upq::classical_ladder(Spin(Complex(two_j, 0)), n));
}

} // namespace

TEST_CASE("build_rep places matrix elements as specified") {
    const auto rep = classical_rep(1.0, 2);
    CHECK(rep.H(0, 0) == Complex(0.5, 0));
    CHECK(rep.H(1, 1) == Complex(-0.5, 0));
    CHECK(rep.Eplus(0, 1) == Complex(1, 0));
    CHECK(rep.Eminus(1, 0) == Complex(1, 0));
    CHECK(rep.Eplus(1, 0) == Complex(0, 0));
    // E+ annihilates the highest-weight vector: column 0 of E+ is zero
    CHECK(rep.Eplus.col(0).cwiseAbs().maxCoeff() == 0.0);

    const auto trivial = classical_rep(0.0, 1);
    CHECK(trivial.H(0, 0) == Complex(0, 0));
    CHECK(trivial.Eplus(0, 0) == Complex(0, 0));
    CHECK(trivial.Eminus(0, 0) == Complex(0, 0));

    const auto deformed = upq::build_rep(upq::deformed_ladder(Spin(Complex(3, 0)), kP2Q3, 2));
    CHECK(std::abs(deformed.Eminus(1, 0) - std::sqrt(Complex(10.75, 0))) < 1e-12);

    auto broken = upq::deformed_ladder(Spin(Complex(3, 0)), kP2Q3, 2);
    broken.truncation = 3;
    CHECK_THROWS_AS(upq::build_rep(broken), upq::ShapeMismatch);
}

TEST_CASE("check_relations on complete classical ladders") {
    const auto rep = classical_rep(1.0, 2);
    const auto report = upq::check_relations(rep, kP2Q3, 1e-12);
    CHECK(report.max_residual_h_epm == 0.0);
    CHECK(report.max_residual_epem_interior == 0.0);
    CHECK(report.boundary_defect == 0.0);
    CHECK(report.boundary_predicted == 0.0);
    CHECK(report.pass_h_epm);
    CHECK(report.pass_epem_interior);

    // brute-force 3x3 commutator for 2j = 2: diag(2, 0, -2) = 2H exactly
    const auto rep2 = classical_rep(2.0, 3);
    const TestMatrix ep = upqtest::to_test_matrix(rep2.Eplus);
    const TestMatrix em = upqtest::to_test_matrix(rep2.Eminus);
    const TestMatrix comm = upqtest::naive_sub(upqtest::naive_mult(ep, em),
                                               upqtest::naive_mult(em, ep));
    CHECK(std::abs(comm[0][0] - Complex(2, 0)) < 1e-15);
    CHECK(std::abs(comm[1][1] - Complex(0, 0)) < 1e-15);
    CHECK(std::abs(comm[2][2] - Complex(-2, 0)) < 1e-15);
    const auto report2 = upq::check_relations(rep2, kP2Q3, 1e-12);
    CHECK(report2.max_residual_epem_interior < 1e-15); // c_0 = sqrt(2) squares inexactly
    CHECK(report2.interior_count == 2);
}

TEST_CASE("check_relations reports the truncation defect separately") {
    const auto spec = upq::deformed_ladder(Spin(Complex(1, 0)), kP2Q3, 10);
    const auto rep = upq::build_rep(spec);
    const auto report = upq::check_relations(rep, kP2Q3, 1e-10);
    CHECK(report.max_residual_h_epm < 1e-12);
    CHECK(report.max_residual_epem_interior < 1e-10);
    CHECK(report.pass_epem_interior);
    const double predicted = std::norm(spec.coeffs.back());
    CHECK(predicted > 1.0); // genuinely truncated: the ladder does not close
    CHECK(std::abs(report.boundary_defect - predicted) / report.scale_epem < 1e-10);
}

TEST_CASE("defining relations over randomized parameters") {
    auto rng = upqtest::make_rng(301);
    for (int rep_i = 0; rep_i < 40; ++rep_i) {
        const auto params = upqtest::random_params(rng);
        const Spin spin(upqtest::random_two_j(rng));
        const int n = 1 + static_cast<int>(rng() % 40);
        const auto spec = upq::deformed_ladder(spin, params, n);
        const auto rep = upq::build_rep(spec);
        const auto report = upq::check_relations(rep, params, 1e-10);
        CHECK(report.max_residual_h_epm < 1e-12);
        CHECK(report.max_residual_epem_interior < 1e-10);
        CHECK(std::abs(report.boundary_defect - std::norm(spec.coeffs.back())) /
                  report.scale_epem <
              1e-10);
    }
}

TEST_CASE("natural termination at integral spin and p = q") {
    const auto params = upq::validate_params(Complex(1.6, 0), Complex(1.6, 0));
    for (int two_j = 0; two_j <= 6; ++two_j) {
        const auto spec = upq::deformed_ladder(Spin(Complex(two_j, 0)), params, two_j + 1);
        CHECK(std::abs(spec.coeffs.back()) == 0.0); // c_{2j} = 0: both Eq-style bounds hold
        const auto rep = upq::build_rep(spec);
        const auto report = upq::check_relations(rep, params, 1e-10);
        CHECK(report.boundary_defect / report.scale_epem < 1e-12);
        CHECK(report.max_residual_epem_interior < 1e-12);
    }
}

TEST_CASE("casimir matrix frozen values") {
    // 1x1 trivial representation: C = 1/(1-q^{-2}) - 1/(1-p^2)
    const auto trivial = upq::build_rep(upq::deformed_ladder(Spin(Complex(0, 0)), kP2Q3, 1));
    const auto c = upq::casimir_matrix(trivial, kP2Q3);
    const Complex expect = 1.0 / (1.0 - 1.0 / 9.0) - 1.0 / (1.0 - 4.0);
    CHECK(std::abs(c(0, 0) - expect) < 1e-14);

    // highest-weight formula C(0,0) = q^{2j}/(1-q^{-2}) - p^{-2j}/(1-p^2)
    const Complex two_j(0.7, -0.3);
    const auto rep = upq::build_rep(upq::deformed_ladder(Spin(two_j), kP2Q3, 6));
    const auto cm = upq::casimir_matrix(rep, kP2Q3);
    const Complex hw = upq::cpow(Complex(3, 0), two_j) / (1.0 - 1.0 / 9.0) -
                       upq::cpow(Complex(2, 0), -two_j) / (1.0 - 4.0);
    CHECK(std::abs(cm(0, 0) - hw) / (1.0 + std::abs(hw)) < 1e-13);
}

TEST_CASE("casimir scalarity for a generic complex spin") {
    const Spin spin(Complex(0.5, 0.5));
    const auto rep = upq::build_rep(upq::deformed_ladder(spin, kP2Q3, 8));
    const auto report = upq::check_casimir(rep, kP2Q3, 1e-10);
    CHECK(report.max_offdiag < 1e-10);
    CHECK(report.max_diag_deviation < 1e-10);
    CHECK(report.max_commutator_residual < 1e-10);
    CHECK(report.pass);

    // independent route: naive products for C E+ - E+ C on interior columns
    const auto c = upq::casimir_matrix(rep, kP2Q3);
    const TestMatrix tc = upqtest::to_test_matrix(c);
    const TestMatrix ep = upqtest::to_test_matrix(rep.Eplus);
    const TestMatrix comm = upqtest::naive_sub(upqtest::naive_mult(tc, ep),
                                               upqtest::naive_mult(ep, tc));
    double interior = 0.0;
    for (std::size_t row = 0; row < comm.size(); ++row) {
        for (std::size_t col = 0; col + 1 < comm.size(); ++col) {
            interior = std::max(interior, std::abs(comm[row][col]));
        }
    }
    CHECK(interior / report.scale < 1e-10);
}

TEST_CASE("casimir on the trivial representation is exact") {
    const auto rep = upq::build_rep(upq::deformed_ladder(Spin(Complex(0, 0)), kP2Q3, 1));
    const auto report = upq::check_casimir(rep, kP2Q3, 1e-12);
    CHECK(report.max_offdiag == 0.0);
    CHECK(report.max_diag_deviation == 0.0);
    CHECK(report.max_commutator_residual == 0.0);
}

TEST_CASE("casimir near the classical point is scalar to the limit accuracy") {
    const auto params = upq::validate_params(Complex(1.0 + 1e-6, 0), Complex(1.0 + 1e-6, 0));
    const auto rep = upq::build_rep(upq::deformed_ladder(Spin(Complex(1, 0)), params, 2));
    const auto c = upq::casimir_matrix(rep, params);
    const Complex hw = upq::cpow(params.q, Complex(1, 0)) / (1.0 - upq::cpow(params.q, Complex(-2, 0))) -
                       upq::cpow(params.p, Complex(-1, 0)) / (1.0 - params.p * params.p);
    CHECK(std::abs(c(0, 0) - hw) / (1.0 + std::abs(hw)) < 1e-4);
    CHECK(std::abs(c(1, 1) - hw) / (1.0 + std::abs(hw)) < 1e-4);
    const auto report = upq::check_casimir(rep, params, 1e-10);
    CHECK(report.pass);
}

TEST_CASE("casimir centrality over randomized parameters") {
    auto rng = upqtest::make_rng(302);
    for (int rep_i = 0; rep_i < 25; ++rep_i) {
        const auto params = upqtest::random_params(rng);
        const Spin spin(upqtest::random_two_j(rng));
        const int n = 1 + static_cast<int>(rng() % 40);
        const auto rep = upq::build_rep(upq::deformed_ladder(spin, params, n));
        const auto report = upq::check_casimir(rep, params, 1e-10);
        CHECK(report.max_offdiag < 1e-10);
        CHECK(report.max_diag_deviation < 1e-10);
        CHECK(report.max_commutator_residual < 1e-10);
    }
}

TEST_CASE("limit_compare") {
    const auto spin_half = Spin(Complex(1, 0));
    const auto cmp = upq::limit_compare(spin_half, Complex(2, 0), 2, 1e-6);
    CHECK(cmp.one_param_max_rel_dev < 1e-12);

    const auto cmp3 = upq::limit_compare(Spin(Complex(3, 0)), Complex(2, 0), 4, 1e-6);
    CHECK(cmp3.one_param_max_rel_dev < 1e-12);
    CHECK(cmp3.classical_max_rel_dev < 1e-4);

    const auto trivial = upq::limit_compare(Spin(Complex(0, 0)), Complex(2, 0), 1, 1e-6);
    CHECK(trivial.one_param_max_rel_dev == 0.0);
    CHECK(trivial.classical_max_rel_dev == 0.0);

    CHECK_THROWS_AS(upq::limit_compare(spin_half, Complex(2, 0), 2, 0.0), upq::DomainError);
}
