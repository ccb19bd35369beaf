#include "pluriperiod/relations.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "pluriperiod/cohomology.hpp"
#include "pluriperiod/errors.hpp"

namespace pluriperiod {

namespace {

BatchFn product_integrand(const EichlerIntegral& Phi, const AutomorphicForm& psi) {
    EichlerIntegral phi = Phi;
    AutomorphicForm ps = psi;
    return [phi, ps](std::span<const Complex> s, std::span<Complex> out) {
        ps.eval_batch(s, out);
        for (std::size_t i = 0; i < s.size(); ++i) out[i] *= phi.eval(s[i]);
    };
}

BatchFn poly_integrand(BoundedPoly P, const AutomorphicForm& psi) {
    AutomorphicForm ps = psi;
    return [P = std::move(P), ps](std::span<const Complex> s, std::span<Complex> out) {
        ps.eval_batch(s, out);
        for (std::size_t i = 0; i < s.size(); ++i) out[i] *= P.eval(s[i]);
    };
}

BatchFn moment_integrand(int mu, const AutomorphicForm& psi) {
    AutomorphicForm ps = psi;
    return [mu, ps](std::span<const Complex> s, std::span<Complex> out) {
        ps.eval_batch(s, out);
        for (std::size_t i = 0; i < s.size(); ++i) out[i] *= ipow(s[i], mu);
    };
}

void fold(IntegralAccum& acc, const QuadResult& q, double sign) {
    acc.value += sign * q.value;
    acc.quad_err += q.err_est;
    acc.max_abs_integrand = std::max(acc.max_abs_integrand, q.max_abs_f);
    acc.length += q.length;
}

}  // namespace

IntegralAccum bilinear_literal(const OctagonGroup& og, const EichlerIntegral& Phi,
                               const AutomorphicForm& psi, double tol) {
    const auto& oct = og.octagon;
    const double edge_tol = tol / static_cast<double>(oct.edges.size());
    const BatchFn f = product_integrand(Phi, psi);
    IntegralAccum acc;
    for (const OctagonEdge& e : oct.edges) {
        const QuadResult q = integrate_chord(
            f, oct.vertices[static_cast<std::size_t>(e.from)],
            oct.vertices[static_cast<std::size_t>(e.to)], edge_tol);
        fold(acc, q, 1.0);
    }
    // Holomorphy alone makes this vanish: only quadrature noise is budgeted.
    acc.budget = 100.0 * (acc.quad_err + tol) + 100.0 * Phi.tol() * acc.length;
    return acc;
}

IntegralAccum boundary_reduced_sum(const OctagonGroup& og, const EichlerIntegral& Phi,
                                   const AutomorphicForm& psi, double tol) {
    const auto& oct = og.octagon;
    IntegralAccum acc;
    int pairs = 0;
    for (const OctagonEdge& e : oct.edges) {
        if (e.inverted) continue;
        ++pairs;
        const MoebiusMap A = og.group->letter_matrix(e.pairing_letter);
        const BoundedPoly omega = period_via_integral(Phi, A);
        const QuadResult q = integrate_chord(
            poly_integrand(omega, psi), oct.vertices[static_cast<std::size_t>(e.from)],
            oct.vertices[static_cast<std::size_t>(e.to)], tol / 4.0);
        fold(acc, q, -1.0);
    }
    if (pairs == 0) throw ConstructionFailure("boundary_reduced_sum: no pair representatives");
    const double defect =
        std::max(Phi.form().defect_estimate, psi.defect_estimate);
    acc.budget = 50.0 * defect * acc.length * std::max(1.0, acc.max_abs_integrand) +
                 100.0 * (acc.quad_err + tol);
    return acc;
}

PairedIntegralCheck edge_pair_reduction(const EichlerIntegral& Phi,
                                        const AutomorphicForm& psi, Complex p0, Complex p1,
                                        const MoebiusMap& A, double tol) {
    const BatchFn f = product_integrand(Phi, psi);
    IntegralAccum acc;
    const QuadResult q_direct = integrate_chord(f, p0, p1, tol / 3.0);
    const QuadResult q_image = integrate_chord(f, A.apply(p0), A.apply(p1), tol / 3.0);
    const BoundedPoly omega = period_via_integral(Phi, A);
    const QuadResult q_reduced =
        integrate_chord(poly_integrand(omega, psi), p0, p1, tol / 3.0);
    fold(acc, q_direct, 1.0);
    fold(acc, q_image, -1.0);
    fold(acc, q_reduced, 0.0);  // bookkeeping only

    PairedIntegralCheck out;
    out.lhs = q_direct.value - q_image.value;
    out.rhs = -q_reduced.value;
    out.abs_err = std::abs(out.lhs - out.rhs);
    const double defect = std::max(Phi.form().defect_estimate, psi.defect_estimate);
    out.quad_err = acc.quad_err;
    out.max_abs_integrand = acc.max_abs_integrand;
    out.length = acc.length;
    out.budget = 10.0 * defect * acc.length * std::max(1.0, acc.max_abs_integrand) +
                 100.0 * (acc.quad_err + tol) + 100.0 * Phi.tol() * acc.length;
    return out;
}

EdgeMomentReport edge_moment_checks(const OctagonGroup& og, const AutomorphicForm& psi,
                                    double tol) {
    const GroupModel& G = *og.group;
    const auto& oct = og.octagon;
    const int n = -2 * psi.m;
    const int ng = G.num_generators();

    const EichlerIntegral Phi(psi, oct.tau1(), tol);
    std::vector<BoundedPoly> gen_periods;
    gen_periods.reserve(static_cast<std::size_t>(ng));
    for (int s = 0; s < ng; ++s)
        gen_periods.push_back(period_via_integral(Phi, G.gens[static_cast<std::size_t>(s)]));

    // Period polynomial of every vertex word, by the cocycle expansion.
    std::vector<BoundedPoly> omega_v;
    for (std::size_t v = 0; v < oct.vertices.size(); ++v)
        omega_v.push_back(
            cocycle_on_word(G, gen_periods, vertex_word(G.genus, static_cast<int>(v)), n));

    EdgeMomentReport rep;
    rep.telescope_sums.assign(static_cast<std::size_t>(n) + 1, Complex(0.0, 0.0));
    double telescope_err = 0.0;
    int fail_canonical = 0, fail_fixed_by_swap = 0;

    for (std::size_t j = 0; j < oct.edges.size(); ++j) {
        const OctagonEdge& e = oct.edges[j];
        const Complex z0 = oct.vertices[static_cast<std::size_t>(e.from)];
        const Complex z1 = oct.vertices[static_cast<std::size_t>(e.to)];
        const BoundedPoly& om_f = omega_v[static_cast<std::size_t>(e.from)];
        const BoundedPoly& om_t = omega_v[static_cast<std::size_t>(e.to)];
        // The cocycle route differences whole-word coefficients, so its error
        // scales with the larger coefficients seen on the word, not with the
        // (possibly cancelled) difference itself.
        const double amp = 1.0 + std::max(om_f.max_abs_coeff(), om_t.max_abs_coeff());
        for (int mu = 0; mu <= n; ++mu) {
            const QuadResult q = integrate_chord(moment_integrand(mu, psi), z0, z1, tol);
            const double sign = (mu % 2 == 0) ? 1.0 : -1.0;
            const double fact = factorial(mu) * factorial(n - mu);
            const Complex croute = sign * fact * (om_f.coeff(n - mu) - om_t.coeff(n - mu));
            MomentItem item;
            item.edge = static_cast<int>(j);
            item.mu = mu;
            item.quadrature = q.value;
            item.cocycle_route = croute;
            item.abs_err = std::abs(q.value - croute);
            item.budget = 1000.0 * psi.defect_estimate * fact * amp +
                          100.0 * (q.err_est + tol);
            if (item.abs_err > item.budget) {
                ++fail_canonical;
                if (std::abs(q.value + croute) <= item.budget) ++fail_fixed_by_swap;
            }
            rep.telescope_sums[static_cast<std::size_t>(mu)] += q.value;
            telescope_err += q.err_est;
            rep.items.push_back(item);
        }
    }
    if (fail_canonical >= 4 && fail_fixed_by_swap == fail_canonical)
        throw SignConventionMismatch(
            "edge_moment_checks: all violations vanish with the vertex difference "
            "reversed; orientation conventions disagree");
    rep.max_budget_ratio = 0.0;
    for (const MomentItem& it : rep.items)
        rep.max_budget_ratio = std::max(rep.max_budget_ratio, it.abs_err / it.budget);
    rep.telescope_budget = 100.0 * (telescope_err + tol);
    return rep;
}

BoundedPoly twist_expand(const BoundedPoly& P, const MoebiusMap& A, int power) {
    if (power < 0) throw DegreeOverflow("twist_expand: negative power");
    // Coefficients of (c tau + d)^power by the binomial expansion.
    std::vector<Complex> twist(static_cast<std::size_t>(power) + 1);
    for (int i = 0; i <= power; ++i)
        twist[static_cast<std::size_t>(i)] =
            binomial(power, i) * std::pow(A.c, i) * std::pow(A.d, power - i);
    BoundedPoly out(P.degree_bound() + power);
    for (int k = 0; k <= P.degree_bound(); ++k)
        for (int i = 0; i <= power; ++i)
            out.set_coeff(k + i, out.coeff(k + i) + P.coeff(k) * twist[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<CrossWeightCheck> cross_weight_relation(const OctagonGroup& og,
                                                    const EichlerIntegral& Phi_m,
                                                    const AutomorphicForm& psi_n,
                                                    double tol) {
    const int m = Phi_m.m();
    const int n_idx = psi_n.m;
    if (!(n_idx < m))
        throw ConfigError("cross_weight_relation: needs n < m (psi of lower index)");
    const int nm = -2 * m;
    const int power = 2 * m - 2 * n_idx;
    const auto& oct = og.octagon;
    const double defect =
        std::max(Phi_m.form().defect_estimate, psi_n.defect_estimate);

    std::vector<CrossWeightCheck> out;
    int pair_index = 0;
    for (const OctagonEdge& e : oct.edges) {
        if (e.inverted) continue;
        const MoebiusMap A = og.group->letter_matrix(e.pairing_letter);
        const MoebiusMap Ainv = A.inverse();
        const BoundedPoly omega = period_via_integral(Phi_m, A);

        // lhs over the gamma side, with the twist carrying weight 2m to 2n.
        const BoundedPoly twisted = twist_expand(omega, A, power);
        const QuadResult q_lhs = integrate_chord(
            poly_integrand(twisted, psi_n), oct.vertices[static_cast<std::size_t>(e.from)],
            oct.vertices[static_cast<std::size_t>(e.to)], tol);

        // rhs over the gamma^{-1} side, Omega_{A^{-1}} by the inversion lemma
        // and independently by the integral route.
        BoundedPoly om_inv_alg = poly_slash(omega, Ainv, nm);
        om_inv_alg *= Complex(-1.0, 0.0);
        const BoundedPoly om_inv_int = period_via_integral(Phi_m, Ainv);
        const OctagonEdge& einv = oct.edge_gamma(e.gamma_index, true);
        const Complex w0 = oct.vertices[static_cast<std::size_t>(einv.from)];
        const Complex w1 = oct.vertices[static_cast<std::size_t>(einv.to)];
        const QuadResult q_rhs_alg =
            integrate_chord(poly_integrand(om_inv_alg, psi_n), w0, w1, tol);
        const QuadResult q_rhs_int =
            integrate_chord(poly_integrand(om_inv_int, psi_n), w0, w1, tol);

        CrossWeightCheck chk;
        chk.pair_index = pair_index++;
        chk.lhs = q_lhs.value;
        chk.rhs = q_rhs_alg.value;
        chk.abs_err = std::abs(chk.lhs - chk.rhs);
        chk.route_gap = std::abs(q_rhs_alg.value - q_rhs_int.value);
        const double length = q_lhs.length + q_rhs_alg.length;
        const double max_abs = std::max(q_lhs.max_abs_f, q_rhs_alg.max_abs_f);
        chk.budget = 10.0 * defect * length * std::max(1.0, max_abs) +
                     100.0 * (q_lhs.err_est + q_rhs_alg.err_est + q_rhs_int.err_est + tol);
        out.push_back(chk);
    }
    return out;
}

}  // namespace pluriperiod
