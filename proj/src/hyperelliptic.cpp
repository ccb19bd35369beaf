#include "pluriperiod/hyperelliptic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "pluriperiod/errors.hpp"

namespace pluriperiod {

namespace {

Complex product_poly(const std::vector<double>& e, Complex x) {
    Complex p = 1.0;
    for (const double ek : e) p *= (x - ek);
    return p;
}

// Factorwise principal determination, continuous on the upper half-plane;
// used once to seed the anchor sheet.
Complex principal_sqrt_product(const std::vector<double>& e, Complex x) {
    Complex s = 0.0;
    for (const double ek : e) s += std::log(x - ek);
    return std::exp(0.5 * s);
}

Eigen::Matrix4i symplectic_J() {
    Eigen::Matrix4i J = Eigen::Matrix4i::Zero();
    J(0, 2) = 1;
    J(1, 3) = 1;
    J(2, 0) = -1;
    J(3, 1) = -1;
    return J;
}

double relation1_residual_of(const Eigen::Matrix2cd& A, const Eigen::Matrix2cd& B) {
    const Eigen::Matrix2cd AB = A * B.transpose();
    const Eigen::Matrix2cd M = AB - B * A.transpose();
    return M.norm() / std::max(1.0, AB.norm());
}

double min_imag_eig_of(const Eigen::Matrix2cd& A, const Eigen::Matrix2cd& B) {
    const Eigen::Matrix2cd tau = A.inverse() * B;
    const Eigen::Matrix2cd H = (tau - tau.adjoint()) / Complex(0.0, 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(H);
    return es.eigenvalues().minCoeff();
}

}  // namespace

HyperellipticCurve::HyperellipticCurve(std::vector<double> branch_points)
    : e_(std::move(branch_points)) {
    if (e_.size() != 6)
        throw ConfigError("HyperellipticCurve: exactly six branch points required");
    for (std::size_t i = 0; i + 1 < e_.size(); ++i)
        if (!(e_[i + 1] - e_[i] > 1e-6))
            throw ConfigError("HyperellipticCurve: branch points must increase with gap > 1e-6");
    const double span = e_.back() - e_.front();
    anchor_ = Complex(0.5 * (e_.front() + e_.back()), 1.5 * span + 1.0);
    anchor_value_ = principal_sqrt_product(e_, anchor_);
}

Complex HyperellipticCurve::continue_segment(Complex x0, Complex w0, Complex x1) const {
    Complex cur_x = x0;
    Complex cur_w = w0;
    std::vector<Complex> pending{x1};
    int guard = 0;
    while (!pending.empty()) {
        if (++guard > 200000)
            throw BranchTrackingFailure("continue_segment: subdivision budget exhausted");
        const Complex tgt = pending.back();
        const Complex f0 = cur_w * cur_w;
        const Complex f1 = product_poly(e_, tgt);
        if (std::abs(f1 - f0) < 0.8 * std::abs(f0)) {
            for (const double ek : e_)
                if (std::abs(tgt - ek) < 1e-9)
                    throw NearPole("continue_segment: point collides with a branch point");
            const Complex c = std::sqrt(f1);
            cur_w = (std::abs(c - cur_w) <= std::abs(c + cur_w)) ? c : -c;
            cur_x = tgt;
            pending.pop_back();
        } else {
            if (std::abs(tgt - cur_x) < 1e-13)
                throw BranchTrackingFailure(
                    "continue_segment: stalled next to a branch point");
            pending.push_back(0.5 * (cur_x + tgt));
        }
    }
    return cur_w;
}

Complex HyperellipticCurve::sheet_value(Complex x) const {
    return continue_segment(anchor_, anchor_value_, x);
}

HyperellipticCurve::LoopResult HyperellipticCurve::circle_integrals(Complex center,
                                                                    double radius,
                                                                    int nodes) const {
    if (nodes < 8) throw ConfigError("circle_integrals: at least 8 nodes");
    const std::size_t n = static_cast<std::size_t>(nodes);
    std::vector<Complex> xs(n), ws(n), dx(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double th = 0.5 * kPi + 2.0 * kPi * static_cast<double>(j) / nodes;
        const Complex dir(std::cos(th), std::sin(th));
        xs[j] = center + radius * dir;
        dx[j] = Complex(0.0, 1.0) * radius * dir;  // dx/dtheta
    }
    ws[0] = sheet_value(xs[0]);
    for (std::size_t j = 1; j < n; ++j) ws[j] = continue_segment(xs[j - 1], ws[j - 1], xs[j]);
    const Complex back = continue_segment(xs[n - 1], ws[n - 1], xs[0]);
    const Complex ratio = back / ws[0];
    int monodromy = 0;
    if (std::abs(ratio - 1.0) < 0.1)
        monodromy = 1;
    else if (std::abs(ratio + 1.0) < 0.1)
        monodromy = -1;
    else
        throw BranchTrackingFailure("circle_integrals: monodromy ratio " +
                                    std::to_string(std::abs(ratio)) + " is not +-1");

    LoopResult out;
    out.monodromy = monodromy;
    std::vector<Complex> terms(n);
    for (int p = 0; p < 2; ++p) {
        for (std::size_t j = 0; j < n; ++j) terms[j] = ipow(xs[j], p) / ws[j] * dx[j];
        out.integrals[static_cast<std::size_t>(p)] =
            pairwise_sum(terms) * (2.0 * kPi / nodes);
    }
    return out;
}

PeriodMatrices hyperelliptic_periods_with(const HyperellipticCurve& C, int nodes,
                                          int chain_s, bool allow_flip) {
    const std::vector<double>& e = C.branch_points();
    // Circle around [e[l], e[r]]: radius covers the cut and stays clear of
    // the neighbouring branch points.
    const auto cut_circle = [&](int l, int r) {
        const Complex center(0.5 * (e[static_cast<std::size_t>(l)] + e[static_cast<std::size_t>(r)]), 0.0);
        const double half = 0.5 * (e[static_cast<std::size_t>(r)] - e[static_cast<std::size_t>(l)]);
        double clearance = 1e30;
        if (l > 0) clearance = std::min(clearance, e[static_cast<std::size_t>(l)] - e[static_cast<std::size_t>(l - 1)]);
        if (r + 1 < static_cast<int>(e.size()))
            clearance = std::min(clearance, e[static_cast<std::size_t>(r + 1)] - e[static_cast<std::size_t>(r)]);
        const double radius = half + 0.45 * clearance;
        return C.circle_integrals(center, radius, nodes);
    };

    const HyperellipticCurve::LoopResult a1 = cut_circle(0, 1);
    const HyperellipticCurve::LoopResult a2 = cut_circle(2, 3);
    const HyperellipticCurve::LoopResult g1 = cut_circle(1, 2);
    const HyperellipticCurve::LoopResult g2 = cut_circle(3, 4);
    for (const auto& loop : {a1, a2, g1, g2})
        if (loop.monodromy != 1)
            throw BranchTrackingFailure(
                "hyperelliptic_periods: a two-point loop failed to close");

    PeriodMatrices P;
    P.nodes = nodes;
    for (int i = 0; i < 2; ++i) {
        P.A(i, 0) = a1.integrals[static_cast<std::size_t>(i)];
        P.A(i, 1) = a2.integrals[static_cast<std::size_t>(i)];
        P.raw_gap(i, 0) = g1.integrals[static_cast<std::size_t>(i)];
        P.raw_gap(i, 1) = g2.integrals[static_cast<std::size_t>(i)];
    }

    const auto candidate = [&](int s) {
        Eigen::Matrix2cd B;
        B.col(0) = P.raw_gap.col(0) + static_cast<double>(s) * P.raw_gap.col(1);
        B.col(1) = P.raw_gap.col(1);
        return B;
    };
    if (chain_s == 99) {
        double best = 1e300;
        for (const int s : {-1, 0, 1}) {
            const double r = relation1_residual_of(P.A, candidate(s));
            if (r < best) {
                best = r;
                chain_s = s;
            }
        }
    }
    P.chain_s = chain_s;
    P.B = candidate(chain_s);
    P.b_flipped = false;
    if (allow_flip && min_imag_eig_of(P.A, P.B) < 0.0) {
        P.B = -P.B;
        P.b_flipped = true;
    }
    return P;
}

PeriodMatrices hyperelliptic_periods(const HyperellipticCurve& C, int nodes) {
    // Chain correction for collinear cuts: the first gap loop meets both
    // a-cycles with opposite signs, so the symplectic b1 adds the second gap
    // loop.  Verified against the s-scan in the test suite.
    constexpr int kChainS = 1;
    return hyperelliptic_periods_with(C, nodes, kChainS, true);
}

RiemannBilinearCheck riemann_bilinear(const PeriodMatrices& P) {
    RiemannBilinearCheck out;
    out.relation1_residual = relation1_residual_of(P.A, P.B);
    out.min_imag_eig = min_imag_eig_of(P.A, P.B);
    out.positive = out.min_imag_eig > 0.0;
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(P.A);
    const Eigen::Vector2d sv = svd.singularValues();
    out.condition_A = sv(1) > 0.0 ? sv(0) / sv(1) : 1e300;
    return out;
}

PeriodMatrices symplectic_transform(const PeriodMatrices& P, const Eigen::Matrix4i& S) {
    Eigen::Matrix<Complex, 4, 2> stack;
    stack.topRows(2) = P.A.transpose();
    stack.bottomRows(2) = P.B.transpose();
    const Eigen::Matrix<Complex, 4, 2> moved = S.cast<Complex>() * stack;
    PeriodMatrices out = P;
    out.A = moved.topRows(2).transpose();
    out.B = moved.bottomRows(2).transpose();
    return out;
}

bool is_symplectic(const Eigen::Matrix4i& S) {
    const Eigen::Matrix4i J = symplectic_J();
    return (S * J * S.transpose()) == J;
}

Eigen::Matrix4i random_symplectic(std::uint32_t seed, int factors) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick_kind(0, 2);
    std::uniform_int_distribution<int> pm(-1, 1);
    std::uniform_int_distribution<int> pick_u(0, 2);

    Eigen::Matrix4i S = Eigen::Matrix4i::Identity();
    for (int f = 0; f < factors; ++f) {
        Eigen::Matrix4i T = Eigen::Matrix4i::Identity();
        switch (pick_kind(rng)) {
            case 0: {  // shear by a symmetric integer block
                const int p = pm(rng), q = pm(rng), r = pm(rng);
                T(0, 2) = p;
                T(0, 3) = q;
                T(1, 2) = q;
                T(1, 3) = r;
                break;
            }
            case 1: {  // GL(2,Z) block and its inverse transpose
                Eigen::Matrix2i U;
                switch (pick_u(rng)) {
                    case 0: U << 1, 1, 0, 1; break;
                    case 1: U << 1, 0, 1, 1; break;
                    default: U << 0, -1, 1, 0; break;
                }
                const int det = U(0, 0) * U(1, 1) - U(0, 1) * U(1, 0);
                Eigen::Matrix2i Uinv;
                Uinv << U(1, 1), -U(0, 1), -U(1, 0), U(0, 0);
                Uinv *= det;  // det is +-1
                T.block<2, 2>(0, 0) = U;
                T.block<2, 2>(2, 2) = Uinv.transpose();
                break;
            }
            default: {  // the standard J
                T = symplectic_J();
                break;
            }
        }
        S = S * T;
    }
    if (!is_symplectic(S))
        throw ConstructionFailure("random_symplectic: generator product left Sp(4,Z)");
    return S;
}

}  // namespace pluriperiod
