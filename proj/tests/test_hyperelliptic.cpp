#include <cmath>

#include "doctest.h"
#include "pluriperiod/errors.hpp"
#include "pluriperiod/hyperelliptic.hpp"

using namespace pluriperiod;

namespace {

const HyperellipticCurve& curve() {
    static const HyperellipticCurve C({0, 1, 2, 3, 4, 5});
    return C;
}

}  // namespace

TEST_CASE("constructor validates the branch points") {
    CHECK_THROWS_AS(HyperellipticCurve({0, 1, 2, 3, 4}), ConfigError);
    CHECK_THROWS_AS(HyperellipticCurve({0, 1, 1, 3, 4, 5}), ConfigError);
    CHECK_THROWS_AS(HyperellipticCurve({0, 2, 1, 3, 4, 5}), ConfigError);
    CHECK(curve().anchor().imag() > 5.0);
}

TEST_CASE("sheet values square to the defining polynomial") {
    const HyperellipticCurve& C = curve();
    for (const Complex x : {Complex(2.5, 1.0), Complex(-1.0, 0.5), Complex(6.0, -2.0)}) {
        const Complex w = C.sheet_value(x);
        Complex prod = 1.0;
        for (const double ek : C.branch_points()) prod *= (x - ek);
        CHECK(std::abs(w * w - prod) < 1e-9 * (1.0 + std::abs(prod)));
    }
    // The anchor determination is the factorwise principal root.
    const Complex wa = C.sheet_value(C.anchor());
    Complex logsum = 0.0;
    for (const double ek : C.branch_points()) logsum += std::log(C.anchor() - ek);
    CHECK(std::abs(wa - std::exp(0.5 * logsum)) < 1e-10 * std::abs(wa));
}

TEST_CASE("continuation is path independent on the cut-free region") {
    const HyperellipticCurve& C = curve();
    const Complex target(2.5, 0.3);
    const Complex direct = C.sheet_value(target);
    // Two-leg route through a far away waypoint must land on the same sheet.
    const Complex way(-4.0, 6.0);
    const Complex via = C.continue_segment(way, C.sheet_value(way), target);
    CHECK(std::abs(direct - via) < 1e-9 * std::abs(direct));
}

TEST_CASE("loop monodromy counts enclosed branch points") {
    const HyperellipticCurve& C = curve();
    CHECK(C.circle_integrals(Complex(0.5, 0), 0.95, 64).monodromy == 1);   // two points
    CHECK(C.circle_integrals(Complex(0.0, 0), 0.45, 64).monodromy == -1);  // one point
    CHECK(C.circle_integrals(Complex(2.5, 0), 4.5, 128).monodromy == 1);   // all six
    CHECK(C.circle_integrals(Complex(2.5, 8.0), 1.0, 16).monodromy == 1);  // none
    CHECK_THROWS_AS(C.circle_integrals(Complex(0.5, 0), 0.95, 4), ConfigError);
}

TEST_CASE("a loop around every branch point integrates both forms to zero") {
    // Both differentials dx/y and x dx/y decay fast enough at infinity that a
    // contour enclosing all six points is contractible through infinity.
    const HyperellipticCurve::LoopResult all6 =
        curve().circle_integrals(Complex(2.5, 0), 4.5, 512);
    CHECK(std::abs(all6.integrals[0]) < 1e-10);
    CHECK(std::abs(all6.integrals[1]) < 1e-10);
}

TEST_CASE("trapezoid refinement gains two digits per doubling here") {
    const HyperellipticCurve& C = curve();
    const Complex c(0.5, 0.0);
    const double r = 0.95;
    const Complex ref = C.circle_integrals(c, r, 4096).integrals[0];
    const double e24 = std::abs(C.circle_integrals(c, r, 24).integrals[0] - ref);
    const double e48 = std::abs(C.circle_integrals(c, r, 48).integrals[0] - ref);
    CHECK(e48 < e24 / 100.0);
}

TEST_CASE("period matrices satisfy both Riemann relations") {
    const PeriodMatrices P = hyperelliptic_periods(curve(), 512);
    const RiemannBilinearCheck rb = riemann_bilinear(P);
    CHECK(rb.relation1_residual < 1e-9);
    CHECK(rb.positive);
    CHECK(rb.min_imag_eig > 0.1);
    CHECK(rb.condition_A < 1e3);
    CHECK_FALSE(P.b_flipped);
}

TEST_CASE("the fixed chain correction agrees with the residual scan") {
    const PeriodMatrices fixed = hyperelliptic_periods(curve(), 256);
    const PeriodMatrices scanned = hyperelliptic_periods_with(curve(), 256, 99, true);
    CHECK(fixed.chain_s == scanned.chain_s);
    CHECK(fixed.chain_s == 1);
    // The scan is decisive: the wrong corrections are orders of magnitude off.
    const PeriodMatrices wrong = hyperelliptic_periods_with(curve(), 256, 0, false);
    CHECK(riemann_bilinear(wrong).relation1_residual >
          1e3 * riemann_bilinear(scanned).relation1_residual);
}

TEST_CASE("flipping the b-basis destroys positivity but not symmetry") {
    PeriodMatrices P = hyperelliptic_periods(curve(), 256);
    P.B = -P.B;
    const RiemannBilinearCheck rb = riemann_bilinear(P);
    CHECK(rb.min_imag_eig < 0.0);
    CHECK(rb.relation1_residual < 1e-9);
}

TEST_CASE("random symplectic matrices are symplectic and act invariantly") {
    const PeriodMatrices P = hyperelliptic_periods(curve(), 256);
    for (const std::uint32_t seed : {1u, 7u, 12345u}) {
        const Eigen::Matrix4i S = random_symplectic(seed);
        CHECK(is_symplectic(S));
        const RiemannBilinearCheck rb = riemann_bilinear(symplectic_transform(P, S));
        CHECK(rb.relation1_residual < 1e-8);
        CHECK(rb.positive);
    }
    // Identity transform returns the original matrices.
    const PeriodMatrices Q = symplectic_transform(P, Eigen::Matrix4i::Identity());
    CHECK((Q.A - P.A).norm() == 0.0);
    CHECK((Q.B - P.B).norm() == 0.0);
    // A non-symplectic integer matrix is detected.
    Eigen::Matrix4i bad = Eigen::Matrix4i::Identity();
    bad(0, 0) = 2;
    CHECK_FALSE(is_symplectic(bad));
}
