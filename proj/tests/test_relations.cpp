#include <cmath>

#include "doctest.h"
#include "pluriperiod/errors.hpp"
#include "pluriperiod/relations.hpp"

using namespace pluriperiod;

namespace {

// One octagon + one truncated form shared across the cases in this file;
// building the orbit ball repeatedly would dominate the test time.  Radius 8
// puts the truncation error two orders of magnitude under the integrals being
// compared, so the agreement checks below are relative, not just budgeted.
struct Fixture {
    OctagonGroup og = octagon_group();
    AutomorphicForm psi = poincare_form(og, -1, 0, 8.0);
};

Fixture& fixture() {
    static Fixture f;
    return f;
}

}  // namespace

TEST_CASE("twist_expand multiplies by the automorphy factor polynomial") {
    const MoebiusMap A(2.0, 1.0, 1.0, 1.0);
    BoundedPoly P(1);
    P.set_coeff(0, Complex(1, -1));
    P.set_coeff(1, Complex(0, 2));
    const BoundedPoly T = twist_expand(P, A, 2);
    CHECK(T.degree_bound() == 3);
    for (const Complex tau : {Complex(0, 1), Complex(1.5, 2.0)}) {
        const Complex expect = P.eval(tau) * ipow(A.automorphy_factor(tau), 2);
        CHECK(std::abs(T.eval(tau) - expect) < 1e-12 * (1.0 + std::abs(expect)));
    }
    CHECK(coeff_distance(twist_expand(P, A, 0), P) == 0.0);
    CHECK_THROWS_AS(twist_expand(P, A, -1), DegreeOverflow);
}

TEST_CASE("edge pair reduction holds exactly on the cyclic model") {
    const auto G = conjugated_cyclic_group(2.0);
    const AutomorphicForm phi = cyclic_form(G, -1);
    const EichlerIntegral Phi(phi, Complex(0, 1), 1e-10);
    const PairedIntegralCheck c = edge_pair_reduction(Phi, phi, Complex(0, 1),
                                                      Complex(0.4, 1.3), G->gens[0], 1e-8);
    CHECK(c.abs_err <= c.budget);
    // Exact forms: the only slack is the quadrature floor, so the two sides
    // agree far better than the generic budget.
    CHECK(c.abs_err < 1e-6);
    CHECK(std::abs(c.lhs) > 1e-4);  // the comparison is not vacuous
}

TEST_CASE("edge pair reduction on an octagon side stays within its defect budget") {
    Fixture& F = fixture();
    const EichlerIntegral Phi(F.psi, F.og.octagon.tau1(), 1e-10);
    const OctagonEdge& e = F.og.octagon.edges[0];
    const PairedIntegralCheck c = edge_pair_reduction(
        Phi, F.psi, F.og.octagon.vertices[static_cast<std::size_t>(e.from)],
        F.og.octagon.vertices[static_cast<std::size_t>(e.to)],
        F.og.group->letter_matrix(e.pairing_letter), 1e-8);
    CHECK(c.abs_err <= c.budget);
    CHECK(c.budget < 10.0);  // the budget itself must stay meaningful
    // Teeth: the two sides agree to a few percent of their common size, so a
    // flipped sign or misassigned pairing letter cannot slip under the budget.
    CHECK(std::abs(c.lhs) > 1e-3);
    CHECK(c.abs_err < 0.1 * std::max(std::abs(c.lhs), std::abs(c.rhs)));
}

TEST_CASE("boundary reduced sum vanishes within the truncation budget") {
    Fixture& F = fixture();
    const EichlerIntegral Phi(F.psi, F.og.octagon.tau1(), 1e-10);
    const IntegralAccum red = boundary_reduced_sum(F.og, Phi, F.psi, 1e-8);
    CHECK(std::abs(red.value) <= red.budget);
    CHECK(red.length > 0.0);
    CHECK(red.budget < 20.0);
    // The four side integrals each have macroscopic magnitude; their sum
    // collapses by the pairing identity down to the truncation floor.
    CHECK(std::abs(red.value) < 1e-2);
}

TEST_CASE("edge moments: quadrature equals the cocycle route on every side") {
    Fixture& F = fixture();
    const EdgeMomentReport rep = edge_moment_checks(F.og, F.psi, 1e-8);
    CHECK(rep.items.size() == 8 * 3);  // 8 sides, moments 0..2
    double biggest = 0.0;
    for (const MomentItem& it : rep.items) {
        CAPTURE(it.edge);
        CAPTURE(it.mu);
        CHECK(it.abs_err <= it.budget);
        biggest = std::max(biggest, std::abs(it.quadrature));
    }
    CHECK(rep.max_budget_ratio <= 1.0);
    CHECK(biggest > 1e-2);  // the moments under test are macroscopic
    // The telescope sums close the full polygon, so they vanish to quadrature
    // accuracy independent of truncation; any orientation slip breaks this at
    // the size of a whole side integral.
    for (const Complex& t : rep.telescope_sums)
        CHECK(std::abs(t) <= rep.telescope_budget);
}

TEST_CASE("cross-weight relation between m = -1 and n = -2 forms") {
    Fixture& F = fixture();
    const AutomorphicForm psi2 = poincare_form(F.og, -2, 0, 8.0);
    const EichlerIntegral Phi(F.psi, F.og.octagon.tau1(), 1e-10);
    const std::vector<CrossWeightCheck> checks =
        cross_weight_relation(F.og, Phi, psi2, 1e-8);
    CHECK(checks.size() == 4);  // one per side pair
    for (const CrossWeightCheck& c : checks) {
        CAPTURE(c.pair_index);
        CHECK(c.abs_err <= c.budget);
        CHECK(c.route_gap <= c.budget);
        CHECK(std::abs(c.lhs) + std::abs(c.rhs) > 1e-4);
        // The twisted identity is algebraically exact; only quadrature and the
        // inversion-lemma route keep truncation-sized residue.
        CHECK(c.abs_err < 1e-4);
        CHECK(c.route_gap < 0.05);
    }
}

TEST_CASE("cross-weight relation rejects non-decreasing index pairs") {
    Fixture& F = fixture();
    const EichlerIntegral Phi(F.psi, F.og.octagon.tau1(), 1e-10);
    CHECK_THROWS_AS(cross_weight_relation(F.og, Phi, F.psi, 1e-8), ConfigError);
}
