#include "pluriperiod/contour.hpp"

#include <algorithm>
#include <cmath>

#include "pluriperiod/errors.hpp"

namespace pluriperiod {

namespace {

struct GaussRule {
    std::vector<double> x, w;  // nodes/weights on [-1, 1]
};

// Newton iteration on Legendre polynomials; standard construction, cached.
GaussRule make_rule(int n) {
    GaussRule r;
    r.x.resize(static_cast<std::size_t>(n));
    r.w.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[static_cast<std::size_t>(n - 1 - i)] = x;
        r.w[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

// The base rule has an odd node count on purpose: it samples the panel
// center, so a singularity sitting symmetrically at the center cannot cancel
// out of both rules and silently pass the error test.
const GaussRule& rule_lo() { static const GaussRule r = make_rule(31); return r; }
const GaussRule& rule_hi() { static const GaussRule r = make_rule(48); return r; }

struct PanelEval {
    Complex i_lo, i_hi;
    double max_abs;
};

// One straight panel [t0,t1] of the chord z(t) = z0 + t (z1 - z0); both rules
// evaluated from a single batch so expensive integrands pay once.
PanelEval eval_panel(const BatchFn& f, Complex z0, Complex dz, double t0, double t1) {
    const GaussRule& lo = rule_lo();
    const GaussRule& hi = rule_hi();
    const std::size_t nlo = lo.x.size(), nhi = hi.x.size();
    const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
    std::vector<Complex> zs(nlo + nhi);
    for (std::size_t i = 0; i < nlo; ++i) zs[i] = z0 + (mid + half * lo.x[i]) * dz;
    for (std::size_t i = 0; i < nhi; ++i) zs[nlo + i] = z0 + (mid + half * hi.x[i]) * dz;
    std::vector<Complex> fs(nlo + nhi);
    f(zs, fs);
    PanelEval pe{0.0, 0.0, 0.0};
    std::vector<Complex> terms(nhi);
    for (std::size_t i = 0; i < nlo; ++i) terms[i] = lo.w[i] * fs[i];
    pe.i_lo = pairwise_sum(std::span<const Complex>(terms.data(), nlo)) * (half * dz);
    for (std::size_t i = 0; i < nhi; ++i) terms[i] = hi.w[i] * fs[nlo + i];
    pe.i_hi = pairwise_sum(std::span<const Complex>(terms.data(), nhi)) * (half * dz);
    for (const Complex& v : fs) pe.max_abs = std::max(pe.max_abs, std::abs(v));
    return pe;
}

void integrate_rec(const BatchFn& f, Complex z0, Complex dz, double t0, double t1,
                   double tol_share, int depth, QuadResult& out) {
    const PanelEval pe = eval_panel(f, z0, dz, t0, t1);
    const double err = std::abs(pe.i_hi - pe.i_lo);
    // Demanding less than the rounding noise of summing ~80 values of size
    // max_abs over this panel is not achievable in doubles; the floor keeps
    // large-magnitude integrands from bisecting forever while err_est still
    // reports the honest estimate.
    const double attainable =
        tol_share + 32.0 * 2.2e-16 * pe.max_abs * std::abs(dz) * (t1 - t0);
    if (err <= attainable || depth >= 20) {
        if (err > attainable)
            throw ToleranceNotMet("integrate_chord: tolerance unreachable at max depth");
        out.value += pe.i_hi;
        out.err_est += err;
        out.max_abs_f = std::max(out.max_abs_f, pe.max_abs);
        out.panels += 1;
        return;
    }
    const double mid = 0.5 * (t0 + t1);
    integrate_rec(f, z0, dz, t0, mid, 0.5 * tol_share, depth + 1, out);
    integrate_rec(f, z0, dz, mid, t1, 0.5 * tol_share, depth + 1, out);
}

}  // namespace

BatchFn lift(PointFn f) {
    return [f = std::move(f)](std::span<const Complex> zs, std::span<Complex> out) {
        for (std::size_t i = 0; i < zs.size(); ++i) out[i] = f(zs[i]);
    };
}

QuadResult integrate_chord(const BatchFn& f, Complex z0, Complex z1, double tol) {
    QuadResult out;
    out.length = std::abs(z1 - z0);
    if (out.length == 0.0) return out;
    integrate_rec(f, z0, z1 - z0, 0.0, 1.0, tol, 0, out);
    return out;
}

Segment Segment::chord(Complex a, Complex b) {
    Segment s;
    s.kind = Kind::chord;
    s.z0 = a;
    s.z1 = b;
    return s;
}

Segment Segment::arc(Complex center, double radius, double theta0, double theta1) {
    Segment s;
    s.kind = Kind::arc;
    s.center = center;
    s.radius = radius;
    s.theta0 = theta0;
    s.theta1 = theta1;
    return s;
}

Complex Segment::start() const {
    if (kind == Kind::chord) return z0;
    return center + radius * Complex(std::cos(theta0), std::sin(theta0));
}

Complex Segment::end() const {
    if (kind == Kind::chord) return z1;
    return center + radius * Complex(std::cos(theta1), std::sin(theta1));
}

namespace {

double min_imag(const Segment& s) {
    if (s.kind == Segment::Kind::chord) return std::min(s.z0.imag(), s.z1.imag());
    // Minimum of Im(c) + r sin(theta) over the traversed angle range: -1 if
    // the range contains a critical angle -pi/2 (mod 2pi), else an endpoint.
    const double lo = std::min(s.theta0, s.theta1), hi = std::max(s.theta0, s.theta1);
    const double k = std::ceil((lo + kPi / 2.0) / (2.0 * kPi));
    const double crit = -kPi / 2.0 + 2.0 * kPi * k;
    const double m = crit <= hi ? -1.0 : std::min(std::sin(lo), std::sin(hi));
    return s.center.imag() + s.radius * m;
}

}  // namespace

PathInH::PathInH(std::vector<Segment> segments) : segs_(std::move(segments)) {
    for (std::size_t i = 0; i < segs_.size(); ++i) {
        if (min_imag(segs_[i]) <= 0.0)
            throw DomainViolation("PathInH: segment leaves the upper half-plane");
        if (i > 0 && std::abs(segs_[i].start() - segs_[i - 1].end()) > 1e-9)
            throw DomainViolation("PathInH: consecutive segments do not share endpoints");
    }
}

PathInH PathInH::reversed() const {
    std::vector<Segment> rev;
    rev.reserve(segs_.size());
    for (std::size_t i = segs_.size(); i-- > 0;) {
        Segment s = segs_[i];
        if (s.kind == Segment::Kind::chord) std::swap(s.z0, s.z1);
        else std::swap(s.theta0, s.theta1);
        rev.push_back(s);
    }
    return PathInH(std::move(rev));
}

QuadResult integrate(const BatchFn& f, const PathInH& path, double tol) {
    QuadResult total;
    const std::size_t n = path.segments().size();
    if (n == 0) return total;
    const double tol_share = tol / static_cast<double>(n);
    for (const Segment& s : path.segments()) {
        if (s.kind == Segment::Kind::chord) {
            QuadResult q = integrate_chord(f, s.z0, s.z1, tol_share);
            total.value += q.value;
            total.err_est += q.err_est;
            total.max_abs_f = std::max(total.max_abs_f, q.max_abs_f);
            total.length += q.length;
            total.panels += q.panels;
        } else {
            // Arc reduced to a chord integral in the angle parameter.
            const Complex c = s.center;
            const double r = s.radius;
            BatchFn g = [&f, c, r](std::span<const Complex> ts, std::span<Complex> out) {
                std::vector<Complex> zs(ts.size());
                for (std::size_t i = 0; i < ts.size(); ++i) {
                    const Complex e(std::cos(ts[i].real()), std::sin(ts[i].real()));
                    zs[i] = c + r * e;
                }
                f(zs, out);
                for (std::size_t i = 0; i < ts.size(); ++i) {
                    const Complex e(std::cos(ts[i].real()), std::sin(ts[i].real()));
                    out[i] *= Complex(0.0, 1.0) * r * e;
                }
            };
            QuadResult q = integrate_chord(g, Complex(s.theta0, 0.0), Complex(s.theta1, 0.0), tol_share);
            total.value += q.value;
            total.err_est += q.err_est;
            total.max_abs_f = std::max(total.max_abs_f, q.max_abs_f);
            total.length += r * std::abs(s.theta1 - s.theta0);
            total.panels += q.panels;
        }
    }
    return total;
}

Complex cauchy_derivative(const PointFn& f, Complex z, int n, double r,
                          double* max_abs_f) {
    if (n < 0) throw DomainViolation("cauchy_derivative: negative order");
    if (z.imag() - r <= 0.0)
        throw DomainViolation("cauchy_derivative: evaluation disk touches the real axis");
    const int N = std::max(64, 8 * (n + 1));
    std::vector<Complex> terms(static_cast<std::size_t>(N));
    double worst = 0.0;
    for (int j = 0; j < N; ++j) {
        const double th = 2.0 * kPi * j / N;
        const Complex e(std::cos(th), std::sin(th));
        const Complex fv = f(z + r * e);
        worst = std::max(worst, std::abs(fv));
        terms[static_cast<std::size_t>(j)] = fv * std::polar(1.0, -n * th);
    }
    if (max_abs_f) *max_abs_f = worst;
    const Complex s = pairwise_sum(terms);
    return s * (factorial(n) / (static_cast<double>(N) * std::pow(r, n)));
}

}  // namespace pluriperiod
