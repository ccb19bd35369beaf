#include "pluriperiod/forms.hpp"

#include <cmath>
#include <limits>

#include "pluriperiod/errors.hpp"

namespace pluriperiod {

Complex AutomorphicForm::eval(Complex z) const {
    if (backend == Backend::poincare) {
        Complex out;
        orbit_sum(*orbit, std::span<const Complex>(&z, 1), seed_power, weight,
                  std::span<Complex>(&out, 1), parallel);
        return out;
    }
    return fn(z);
}

void AutomorphicForm::eval_batch(std::span<const Complex> zs,
                                 std::span<Complex> out) const {
    if (backend == Backend::poincare) {
        orbit_sum(*orbit, zs, seed_power, weight, out, parallel);
        return;
    }
    if (zs.size() != out.size())
        throw DomainViolation("eval_batch: output span size mismatch");
    for (std::size_t i = 0; i < zs.size(); ++i) out[i] = fn(zs[i]);
}

PointFn AutomorphicForm::as_pointfn() const {
    AutomorphicForm copy = *this;
    return [copy](Complex z) { return copy.eval(z); };
}

double automorphy_defect(const AutomorphicForm& f, const MoebiusMap& A, Complex z) {
    const Complex fz = f.eval(z);
    const Complex faz = f.eval(A.apply(z));
    const Complex j = A.automorphy_factor(z);
    return std::abs(faz - fz * ipow(j, f.weight)) / (1.0 + std::abs(fz));
}

std::vector<Complex> defect_panel(const OctagonGroup& og) {
    std::vector<Complex> pts;
    const auto& v = og.octagon.vertices;
    const std::size_t n = v.size();
    for (std::size_t k = 0; k < n; ++k) {
        pts.push_back(v[k]);
        pts.push_back(0.5 * (v[k] + v[(k + 1) % n]));
    }
    for (int j = 0; j < 8; ++j) {
        const double th = 2.0 * kPi * j / 8.0;
        pts.push_back(Complex(0.0, 2.0) + 0.5 * Complex(std::cos(th), std::sin(th)));
    }
    pts.push_back(Complex(0.0, 1.0));
    pts.push_back(Complex(0.0, 2.0));
    return pts;
}

AutomorphicForm poincare_form(const OctagonGroup& og, int m, int nu, double R,
                              std::size_t cap, bool parallel) {
    if (m > -1)
        throw ConfigError("poincare_form: requires m <= -1 (weight k >= 4) for "
                          "absolute convergence");
    if (nu < 0) throw ConfigError("poincare_form: seed power nu must be >= 0");

    AutomorphicForm f;
    f.backend = AutomorphicForm::Backend::poincare;
    f.group = og.group;
    f.m = m;
    f.weight = 2 - 2 * m;
    f.seed_power = nu;
    f.orbit = std::make_shared<const OrbitSet>(enumerate_ball(*og.group, R, cap));
    f.parallel = parallel;

    // Measured truncation defect: absolute law failure along each side under
    // that side's own pairing letter, the only configurations the reduction
    // identities ever evaluate the law at.
    double worst = 0.0;
    const auto& oct = og.octagon;
    for (const OctagonEdge& e : oct.edges) {
        const int letter = e.inverted ? -e.pairing_letter : e.pairing_letter;
        const MoebiusMap A = og.group->letter_matrix(letter);
        const Complex z0 = oct.vertices[static_cast<std::size_t>(e.from)];
        const Complex z1 = oct.vertices[static_cast<std::size_t>(e.to)];
        constexpr int kSamples = 8;
        for (int s = 0; s <= kSamples; ++s) {
            const Complex z = z0 + (z1 - z0) * (static_cast<double>(s) / kSamples);
            const Complex fail =
                f.eval(A.apply(z)) - f.eval(z) * ipow(A.automorphy_factor(z), f.weight);
            worst = std::max(worst, std::abs(fail));
        }
    }
    constexpr double kSafety = 10.0;
    f.defect_estimate = kSafety * worst;
    return f;
}

AutomorphicForm cyclic_form(std::shared_ptr<const GroupModel> G, int m) {
    if (!G || G->kind != GroupModel::Kind::cyclic)
        throw UnsupportedGroup("cyclic_form: needs a cyclic model");
    AutomorphicForm f;
    f.backend = AutomorphicForm::Backend::exact;
    f.group = G;
    f.m = m;
    f.weight = 2 - 2 * m;
    const int zpow = m - 1;  // z^{-k/2}
    const MoebiusMap& gen = G->gens.at(0);
    if (std::abs(gen.b) < 1e-14 && std::abs(gen.c) < 1e-14) {
        f.fn = [zpow](Complex z) { return ipow(z, zpow); };
    } else {
        // Expect the U-conjugated model, U = [[1,0],[1,1]].
        const MoebiusMap U(1, 0, 1, 1);
        const MoebiusMap expected =
            compose(compose(U.inverse(), MoebiusMap(G->lambda, 0, 0, 1.0 / G->lambda)), U);
        if (expected.distance_to(gen) > 1e-12)
            throw UnsupportedGroup("cyclic_form: unrecognized cyclic model");
        const int jpow = 2 * m - 2;  // j_U(z)^{-k}
        f.fn = [zpow, jpow](Complex z) {
            return ipow(z / (z + 1.0), zpow) * ipow(z + 1.0, jpow);
        };
    }
    return f;
}

AutomorphicForm plain_function(std::shared_ptr<const GroupModel> G, int m, PointFn fn) {
    AutomorphicForm f;
    f.backend = AutomorphicForm::Backend::plain;
    f.group = std::move(G);
    f.m = m;
    f.weight = 2 - 2 * m;
    f.fn = std::move(fn);
    return f;
}

double pair_gram_condition(const AutomorphicForm& f, const AutomorphicForm& g,
                           const OctagonGroup& og) {
    const std::vector<Complex> panel = defect_panel(og);
    std::vector<Complex> fv(panel.size()), gv(panel.size());
    f.eval_batch(panel, fv);
    g.eval_batch(panel, gv);
    double g00 = 0.0, g11 = 0.0;
    Complex g01 = 0.0;
    for (std::size_t i = 0; i < panel.size(); ++i) {
        g00 += std::norm(fv[i]);
        g11 += std::norm(gv[i]);
        g01 += fv[i] * std::conj(gv[i]);
    }
    const double tr = g00 + g11;
    const double det = g00 * g11 - std::norm(g01);
    const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
    const double lo = 0.5 * tr - disc, hi = 0.5 * tr + disc;
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

}  // namespace pluriperiod
