#include <cmath>
#include <string>

#include "diracsl/assembly.hpp"
#include "diracsl/errors.hpp"
#include "diracsl/tridiag.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace diracsl;

static const double PI = 3.14159265358979323846;

TEST_CASE("weight validation messages") {
    CHECK_THROWS_WITH_AS(DiracWeight({0.0, 0.5}, {1.0, 1.0}),
                         doctest::Contains("strictly inside"), domain_error);
    CHECK_THROWS_WITH_AS(DiracWeight({0.5, 0.3}, {1.0, 1.0}),
                         doctest::Contains("strictly increasing"), domain_error);
    CHECK_THROWS_WITH_AS(DiracWeight({0.3, 0.5}, {1.0, -1.0}),
                         doctest::Contains("positive"), domain_error);
    CHECK_THROWS_WITH_AS(DiracWeight({0.3, 0.5}, {1.0}),
                         doctest::Contains("same length"), domain_error);
}

TEST_CASE("discriminant of the linear basis") {
    auto basis = build_basis(Potential::zero(), Tolerances{});
    // phi = x, psi = 1 - x: D(eta, xi) = eta - xi
    CHECK(discriminant(basis, 0.2, 0.7) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(discriminant(basis, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(discriminant(basis, 0.7, 0.2), domain_error);
}

TEST_CASE("single node transfer matrix entries") {
    auto basis = build_basis(Potential::zero(), Tolerances{});
    auto m = transfer_matrix(basis, 0.5, 1.0);
    // omega = -1, phi = psi = 1/2 at the node:
    // M = [[1 - lambda/4, -lambda/4], [lambda/4, 1 + lambda/4]]
    CHECK(m.a11.coeff(0) == doctest::Approx(1.0));
    CHECK(m.a11.coeff(1) == doctest::Approx(-0.25).epsilon(1e-13));
    CHECK(m.a12.coeff(0) == 0.0);
    CHECK(m.a12.coeff(1) == doctest::Approx(-0.25).epsilon(1e-13));
    CHECK(m.a21.coeff(1) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(m.a22.coeff(1) == doctest::Approx(0.25).epsilon(1e-13));
    // determinant is identically one
    auto det = m.det();
    CHECK(det.coeff(0) == doctest::Approx(1.0));
    CHECK(std::abs(det.coeff(1)) < 1e-14);
    CHECK(std::abs(det.coeff(2)) < 1e-14);
}

TEST_CASE("characteristic polynomial for two equal nodes of the free problem") {
    auto basis = build_basis(Potential::zero(), Tolerances{});
    DiracWeight w({1.0 / 3.0, 2.0 / 3.0}, {1.0, 1.0});
    auto p = characteristic_polynomial(basis, w);
    CHECK(p.coeff(0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(p.coeff(1) == doctest::Approx(-4.0 / 9.0).epsilon(1e-13));
    CHECK(p.coeff(2) == doctest::Approx(1.0 / 27.0).epsilon(1e-13));
}

TEST_CASE("chain and closed form agree") {
    auto basis = build_basis(Potential::constant(-7.0), Tolerances{});
    DiracWeight w({0.15, 0.4, 0.62, 0.88}, {0.7, 1.3, 0.5, 2.2});
    auto chain = coefficient_chain(basis, w).pairs.back();
    auto closed = coefficient_pair_closed_form(basis, w, w.nodes.size());
    REQUIRE(chain.first.degree() == closed.first.degree());
    for (int k = 0; k <= chain.first.degree(); ++k) {
        CHECK(chain.first.coeff(k) ==
              doctest::Approx(closed.first.coeff(k)).epsilon(1e-11));
    }
    for (int k = 0; k <= chain.second.degree(); ++k) {
        CHECK(chain.second.coeff(k) ==
              doctest::Approx(closed.second.coeff(k)).epsilon(1e-11));
    }
}

TEST_CASE("degenerate coefficient detection for a vanishing chain") {
    // q = -9 pi^2/4, node at 2/3: phi vanishes there, the polynomial is constant
    auto basis = build_basis(Potential::constant(-9.0 * PI * PI / 4.0), Tolerances{});
    DiracWeight w({2.0 / 3.0}, {1.0});
    auto p = characteristic_polynomial(basis, w);
    auto bounds = characteristic_magnitude_bounds(basis, w);
    auto r = p.reduced_against(bounds, Tolerances{}.zero_det);
    CHECK(r.degree() == 0);
    CHECK(r.coeff(0) == doctest::Approx(-2.0 / (3.0 * PI)).epsilon(1e-12));
}

TEST_CASE("tridiagonal system for the free two-node problem") {
    auto basis = build_basis(Potential::zero(), Tolerances{});
    DiracWeight w({1.0 / 3.0, 2.0 / 3.0}, {1.0, 1.0});
    auto sys = tridiagonal_system(basis, w, Tolerances{});
    REQUIRE(sys.sym.diag.size() == 2);
    CHECK(sys.sym.diag[0] == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(sys.sym.diag[1] == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(sys.sym.offdiag[0] == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(sys.boundary_product == doctest::Approx(1.0 / 27.0).epsilon(1e-12));
}

TEST_CASE("tridiagonal matrix for the zero-eigenvalue pair") {
    auto basis = build_basis(Potential::constant(-PI * PI), Tolerances{});
    DiracWeight w({0.25, 0.5}, {1.0, 1.0});
    auto sys = tridiagonal_system(basis, w, Tolerances{});
    REQUIRE(sys.sym.diag.size() == 2);
    CHECK(sys.sym.diag[0] == doctest::Approx(2.0 * PI).epsilon(1e-10));
    CHECK(sys.sym.diag[1] == doctest::Approx(PI).epsilon(1e-10));
    CHECK(sys.sym.offdiag[0] == doctest::Approx(-std::sqrt(2.0) * PI).epsilon(1e-10));
    auto ev = tridiag_eigenvalues(sys.sym, Tolerances{});
    REQUIRE(ev.size() == 2);
    CHECK(std::abs(ev[0]) < 1e-10);
    CHECK(ev[1] == doctest::Approx(3.0 * PI).epsilon(1e-10));
}

TEST_CASE("tridiagonal route refuses a vanishing consecutive discriminant") {
    auto basis = build_basis(Potential::constant(-9.0 * PI * PI / 4.0), Tolerances{});
    DiracWeight w({0.25, 1.0 / 3.0}, {1.0, 1.0});
    CHECK_THROWS_WITH_AS(tridiagonal_system(basis, w, Tolerances{}),
                         doctest::Contains("tridiagonal route unavailable"),
                         tridiagonal_unavailable);
}

TEST_CASE("characteristic polynomial is proportional to the tridiagonal one") {
    auto basis = build_basis(Potential::zero(), Tolerances{});
    DiracWeight w({1.0 / 3.0, 2.0 / 3.0}, {1.0, 1.0});
    auto sys = tridiagonal_system(basis, w, Tolerances{});
    auto chi = tridiag_char_poly(sys.sym);
    const std::size_t n = w.nodes.size();
    double cst = ((n + 1) % 2 == 0 ? 1.0 : -1.0) / std::pow(sys.omega, double(n + 1));
    for (double m : w.masses) cst *= m;
    cst *= sys.boundary_product;
    auto p = characteristic_polynomial(basis, w);
    for (int k = 0; k <= p.degree(); ++k) {
        CHECK(p.coeff(k) == doctest::Approx(cst * chi.coeff(k)).epsilon(1e-11));
    }
}
