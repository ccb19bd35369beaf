#include <cmath>
#include <limits>

#include "doctest.h"
#include "pluriperiod/errors.hpp"
#include "pluriperiod/forms.hpp"
#include "pluriperiod/orbit_kernel.hpp"

using namespace pluriperiod;

namespace {

const std::vector<Complex> kSample = {Complex(0, 1), Complex(0.4, 1.6),
                                      Complex(-1.2, 2.3), Complex(2.0, 0.7)};

}  // namespace

TEST_CASE("cyclic forms satisfy their transformation law to rounding") {
    for (const bool conjugated : {false, true}) {
        const auto G = conjugated ? conjugated_cyclic_group(2.0) : cyclic_group(2.0);
        for (const int m : {-1, -2, -3}) {
            const AutomorphicForm f = cyclic_form(G, m);
            CHECK(f.weight == 2 - 2 * m);
            CHECK(f.defect_estimate == 0.0);
            for (const Complex z : kSample) {
                CHECK(automorphy_defect(f, G->gens[0], z) < 1e-12);
                CHECK(automorphy_defect(f, G->gens[0].inverse(), z) < 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(cyclic_form(octagon_group().group, -1), UnsupportedGroup);
}

TEST_CASE("plain functions carry no automorphy and say so") {
    const auto G = conjugated_cyclic_group(2.0);
    const AutomorphicForm f =
        plain_function(G, -1, [](Complex z) { return std::exp(Complex(0, 1) * z); });
    CHECK(f.defect_estimate == 0.0);
    double worst = 0.0;
    for (const Complex z : kSample)
        worst = std::max(worst, automorphy_defect(f, G->gens[0], z));
    CHECK(worst > 1e-2);
}

TEST_CASE("poincare_form rejects non-convergent weights") {
    const OctagonGroup og = octagon_group();
    CHECK_THROWS_AS(poincare_form(og, 0, 0, 4.0), ConfigError);
    CHECK_THROWS_AS(poincare_form(og, -1, -1, 4.0), ConfigError);
}

TEST_CASE("poincare_form defect shrinks as the orbit radius grows") {
    const OctagonGroup og = octagon_group();
    const AutomorphicForm f5 = poincare_form(og, -1, 0, 5.0);
    const AutomorphicForm f7 = poincare_form(og, -1, 0, 7.0);
    CHECK(f5.defect_estimate > 0.0);
    CHECK(f7.defect_estimate > 0.0);
    CHECK(f7.defect_estimate < 0.5 * f5.defect_estimate);
    // The stored estimate really bounds the law failure on the configurations
    // it claims to cover: side points under the side's own pairing letter.
    double worst = 0.0;
    const auto& oct = og.octagon;
    for (const OctagonEdge& e : oct.edges) {
        const int letter = e.inverted ? -e.pairing_letter : e.pairing_letter;
        const MoebiusMap A = og.group->letter_matrix(letter);
        const Complex z0 = oct.vertices[static_cast<std::size_t>(e.from)];
        const Complex z1 = oct.vertices[static_cast<std::size_t>(e.to)];
        for (int s = 0; s <= 5; ++s) {
            const Complex z = z0 + (z1 - z0) * (s / 5.0);
            const Complex fail = f7.eval(A.apply(z)) -
                                 f7.eval(z) * ipow(A.automorphy_factor(z), f7.weight);
            worst = std::max(worst, std::abs(fail));
        }
    }
    CHECK(worst <= f7.defect_estimate);  // safety factor 10 dominates the sample max
}

TEST_CASE("serial and parallel orbit sums agree bitwise") {
    const OctagonGroup og = octagon_group();
    const OrbitSet orbit = enumerate_ball(*og.group, 6.0);
    std::vector<Complex> pts;
    for (int i = 0; i < 37; ++i)
        pts.emplace_back(-2.0 + 0.11 * i, 0.6 + 0.05 * i);
    std::vector<Complex> serial(pts.size()), parallel(pts.size());
    orbit_sum_serial(orbit, pts, 2, 4, serial);
    orbit_sum_parallel(orbit, pts, 2, 4, parallel);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(serial[i].real() == parallel[i].real());
        CHECK(serial[i].imag() == parallel[i].imag());
    }
}

TEST_CASE("orbit kernel rejects points outside the half-plane before summing") {
    const OctagonGroup og = octagon_group();
    const OrbitSet orbit = enumerate_ball(*og.group, 4.0);
    std::vector<Complex> pts = {Complex(0, 1), Complex(0, -1)};
    std::vector<Complex> out(2);
    CHECK_THROWS_AS(orbit_sum(orbit, pts, 0, 4, out, true), DomainViolation);
}

TEST_CASE("form eval, eval_batch and as_pointfn agree") {
    const OctagonGroup og = octagon_group();
    const AutomorphicForm f = poincare_form(og, -1, 1, 5.0);
    std::vector<Complex> batch(kSample.size());
    f.eval_batch(kSample, batch);
    const PointFn fp = f.as_pointfn();
    for (std::size_t i = 0; i < kSample.size(); ++i) {
        CHECK(batch[i] == f.eval(kSample[i]));
        CHECK(batch[i] == fp(kSample[i]));
    }
}

TEST_CASE("poincare seed power changes the form") {
    const OctagonGroup og = octagon_group();
    const AutomorphicForm f0 = poincare_form(og, -1, 0, 5.0);
    const AutomorphicForm f2 = poincare_form(og, -1, 2, 5.0);
    CHECK(std::abs(f0.eval(Complex(0, 2)) - f2.eval(Complex(0, 2))) > 1e-6);
}

TEST_CASE("pair gram condition separates independent pairs from repeats") {
    const OctagonGroup og = octagon_group();
    const AutomorphicForm f0 = poincare_form(og, -1, 0, 5.0);
    const AutomorphicForm f2 = poincare_form(og, -1, 2, 5.0);
    const double good = pair_gram_condition(f0, f2, og);
    CHECK(good < 1e6);
    const double bad = pair_gram_condition(f0, f0, og);
    CHECK((std::isinf(bad) || bad > 1e10));
}
