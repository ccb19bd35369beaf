#include <cmath>

#include "doctest.h"
#include "pluriperiod/eichler.hpp"
#include "pluriperiod/errors.hpp"

using namespace pluriperiod;

namespace {

const Complex kI(0.0, 1.0);

EichlerIntegral make_phi_one() {
    return EichlerIntegral(
        plain_function(cyclic_group(2.0), -1, [](Complex) { return Complex(1, 0); }),
        kI, 1e-12);
}

}  // namespace

TEST_CASE("triple antiderivative of 1 is (tau - i)^3 / 6") {
    const EichlerIntegral Phi = make_phi_one();
    for (const Complex tau : {Complex(0, 2), Complex(1.5, 0.4), Complex(-2, 3)}) {
        const Complex expect = ipow(tau - kI, 3) / 6.0;
        CHECK(std::abs(Phi.eval(tau) - expect) < 1e-10 * (1.0 + std::abs(expect)));
    }
    CHECK(Phi.eval(kI) == Complex(0.0, 0.0));
    CHECK_THROWS_AS(Phi.eval(Complex(0, -1)), DomainViolation);
}

TEST_CASE("cache returns identical values and batch matches pointwise") {
    const EichlerIntegral Phi = make_phi_one();
    const Complex tau(0.7, 1.9);
    const Complex first = Phi.eval(tau);
    CHECK(Phi.eval(tau) == first);  // bitwise: second lookup is cached
    std::vector<Complex> taus = {tau, Complex(0, 2)};
    std::vector<Complex> out(2);
    Phi.eval_batch(taus, out);
    CHECK(out[0] == first);
}

TEST_CASE("moment_polynomial matches the closed antiderivative difference") {
    // With phi = 1 the connecting polynomial i -> 2i is
    // ((tau - i)^3 - (tau - 2i)^3) / 6 = (3 i tau^2 + 9 tau - 7i) / 6.
    const AutomorphicForm one =
        plain_function(cyclic_group(2.0), -1, [](Complex) { return Complex(1, 0); });
    const BoundedPoly P = moment_polynomial(one, kI, 2.0 * kI, 1e-12);
    CHECK(std::abs(P.coeff(2) - Complex(0, 0.5)) < 1e-11);
    CHECK(std::abs(P.coeff(1) - Complex(1.5, 0)) < 1e-11);
    CHECK(std::abs(P.coeff(0) - Complex(0, -7.0 / 6.0)) < 1e-11);
}

TEST_CASE("connecting polynomial equals the difference of the two normalizations") {
    const AutomorphicForm phi = cyclic_form(conjugated_cyclic_group(2.0), -1);
    const EichlerIntegral Phi1(phi, kI, 1e-11);
    const Complex tau2(0.5, 2.0);
    const EichlerIntegral Phi2(phi, tau2, 1e-11);
    const BoundedPoly P = connecting_polynomial(Phi1, tau2);
    for (const Complex tau : {Complex(1, 1), Complex(-0.3, 2.4)}) {
        const Complex diff = Phi1.eval(tau) - Phi2.eval(tau);
        CHECK(std::abs(P.eval(tau) - diff) < 1e-9 * (1.0 + std::abs(diff)));
    }
}

TEST_CASE("period polynomial of the diagonal model matches the closed form") {
    const auto G = cyclic_group(2.0);
    const EichlerIntegral Phi(cyclic_form(G, -1), kI, 1e-11);
    BoundedPoly frozen(2);
    frozen.set_coeff(0, Complex(0.0, 0.375));
    frozen.set_coeff(1, Complex(-std::log(4.0), 0.0));
    frozen.set_coeff(2, Complex(0.0, -1.5));
    const PeriodPoly fit = period_polynomial(Phi, G->gens[0]);
    CHECK(coeff_distance(fit.poly, frozen) < 1e-8);
    CHECK(fit.residual <= fit.threshold);
    const BoundedPoly direct = period_via_integral(Phi, G->gens[0]);
    CHECK(coeff_distance(direct, frozen) < 1e-9);
}

TEST_CASE("period of the identity is exactly zero") {
    const EichlerIntegral Phi(cyclic_form(cyclic_group(2.0), -1), kI, 1e-11);
    CHECK(period_via_integral(Phi, MoebiusMap::identity()).max_abs_coeff() == 0.0);
}

TEST_CASE("cocycle relation holds along the cyclic subgroup") {
    const auto G = conjugated_cyclic_group(2.0);
    const EichlerIntegral Phi(cyclic_form(G, -1), kI, 1e-11);
    const MoebiusMap A = G->gens[0];
    const CocycleCheck c = verify_cocycle(Phi, A, compose(A, A));
    CHECK(c.distance < 1e-7);
    const CocycleCheck cinv = verify_cocycle(Phi, A, A.inverse());
    CHECK(cinv.distance < 1e-7);
}

TEST_CASE("non-automorphic integrands are rejected as period sources") {
    const EichlerIntegral Phi(
        plain_function(cyclic_group(2.0), -1,
                       [](Complex z) { return std::exp(Complex(0, 1) * z); }),
        kI, 1e-10);
    CHECK_THROWS_AS(period_polynomial(Phi, cyclic_group(2.0)->gens[0]), NotPolynomial);
}

TEST_CASE("bol_check accepts exactly the distinguished order") {
    const auto G = conjugated_cyclic_group(2.0);
    const MoebiusMap A = G->gens[0];
    // Weight -2 eigenfunction of the conjugated generator: with
    // Im(s) = pi / log(lambda) the multiplier lambda^{2s} is exactly
    // lambda^{2 Re(s)} since lambda^{2i Im(s)} = e^{2 pi i} = 1.
    const Complex s(1.0, kPi / std::log(2.0));
    const PointFn g = [s](Complex z) {
        return std::pow(z / (z + 1.0), s) * ipow(z + 1.0, 2);
    };
    // g transforms with weight 2m = -2 (m = -1); order 1 - 2m = 3 and output
    // weight 2 - 2m = 4 satisfy the law, other orders fail.
    const BolCheck ok = bol_check(g, A, Complex(0, 1), 3, 4, 0.45);
    CHECK(ok.residual < 1e-8);
    const BolCheck wrong = bol_check(g, A, Complex(0, 1), 2, 4, 0.45);
    CHECK(wrong.residual > 1e-3);
}

TEST_CASE("constructor validates its inputs") {
    const AutomorphicForm phi = cyclic_form(cyclic_group(2.0), -1);
    CHECK_THROWS_AS(EichlerIntegral(phi, Complex(1, -1), 1e-10), DomainViolation);
    CHECK_THROWS_AS(EichlerIntegral(phi, kI, 0.0), ConfigError);
}
