#include <cmath>

#include "doctest.h"
#include "pluriperiod/contour.hpp"
#include "pluriperiod/errors.hpp"

using namespace pluriperiod;

namespace {
const Complex kI(0.0, 1.0);
}

TEST_CASE("chord quadrature integrates polynomials exactly") {
    BatchFn f = lift([](Complex z) { return z * z * z - 2.0 * z + Complex(0, 1); });
    const Complex z0(0, 1), z1(2, 3);
    const QuadResult q = integrate_chord(f, z0, z1, 1e-12);
    auto F = [](Complex z) {
        return 0.25 * z * z * z * z - z * z + Complex(0, 1) * z;
    };
    CHECK(std::abs(q.value - (F(z1) - F(z0))) < 1e-12);
    CHECK(q.length == doctest::Approx(std::abs(z1 - z0)));
    CHECK(q.panels >= 1);
}

TEST_CASE("chord quadrature handles analytic non-polynomials") {
    BatchFn f = lift([](Complex z) { return std::exp(Complex(0, 1) * z); });
    const Complex z0(0, 1), z1(-1, 2);
    const QuadResult q = integrate_chord(f, z0, z1, 1e-12);
    auto F = [](Complex z) { return std::exp(Complex(0, 1) * z) / Complex(0, 1); };
    CHECK(std::abs(q.value - (F(z1) - F(z0))) < 1e-11);
    CHECK(q.err_est < 1e-10);
    CHECK(q.max_abs_f > 0.0);
}

TEST_CASE("degenerate chord integrates to exactly zero") {
    BatchFn f = lift([](Complex z) { return std::exp(z); });
    const QuadResult q = integrate_chord(f, Complex(0, 1), Complex(0, 1), 1e-10);
    CHECK(q.value == Complex(0.0, 0.0));
}

TEST_CASE("path integral over chord pair equals single-chord sum") {
    BatchFn f = lift([](Complex z) { return 1.0 / z; });
    const Complex a(1, 1), b(0, 2), c(-1, 1);
    PathInH path({Segment::chord(a, b), Segment::chord(b, c)});
    const QuadResult whole = integrate(f, path, 1e-12);
    const Complex expect = std::log(c) - std::log(a);  // branch stays in H
    CHECK(std::abs(whole.value - expect) < 1e-11);
    const QuadResult back = integrate(f, path.reversed(), 1e-12);
    CHECK(std::abs(back.value + whole.value) < 1e-11);
}

TEST_CASE("arc segments integrate dz/z to i times the angle") {
    PathInH path({Segment::arc(Complex(0, 0), 2.0, kPi / 6.0, 5.0 * kPi / 6.0)});
    BatchFn f = lift([](Complex z) { return 1.0 / z; });
    const QuadResult q = integrate(f, path, 1e-12);
    CHECK(std::abs(q.value - Complex(0, 4.0 * kPi / 6.0)) < 1e-11);
}

TEST_CASE("paths must be continuous and stay in the upper half-plane") {
    CHECK_THROWS_AS(PathInH({Segment::chord(Complex(0, 1), Complex(1, 1)),
                             Segment::chord(Complex(2, 1), Complex(3, 1))}),
                    DomainViolation);
    CHECK_THROWS_AS(PathInH({Segment::chord(Complex(0, 1), Complex(0, -1))}),
                    DomainViolation);
}

TEST_CASE("quadrature reports failure when the tolerance is unreachable") {
    // 1/(z - i) along a chord passing within 1e-14 of the pole.
    BatchFn f = lift([](Complex z) { return 1.0 / (z - Complex(0, 1.0)); });
    CHECK_THROWS_AS(
        integrate_chord(f, Complex(-1.0, 1.0 + 1e-14), Complex(1.0, 1.0 + 1e-14), 1e-12),
        ToleranceNotMet);
}

TEST_CASE("cauchy_derivative recovers derivatives of entire functions") {
    PointFn f = [](Complex z) { return std::exp(Complex(0, 1) * z); };
    const Complex z(0.3, 1.5);
    for (int n : {1, 2, 3, 5}) {
        const Complex expect = ipow(Complex(0, 1), n) * f(z);
        CHECK(std::abs(cauchy_derivative(f, z, n, 0.6) - expect) <
              1e-9 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("cauchy_derivative records the circle maximum and guards the axis") {
    PointFn f = [](Complex z) { return z * z; };
    double mx = 0.0;
    const Complex d2 = cauchy_derivative(f, Complex(0, 2), 2, 0.5, &mx);
    CHECK(std::abs(d2 - 2.0) < 1e-10);
    CHECK(mx == doctest::Approx(std::norm(Complex(0, 2.5))).epsilon(1e-6));
    CHECK_THROWS_AS(cauchy_derivative(f, Complex(0, 0.3), 1, 0.4), DomainViolation);
}
