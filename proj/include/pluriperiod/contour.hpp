#pragma once

#include <functional>
#include <vector>

#include "pluriperiod/types.hpp"

namespace pluriperiod {

/// Batched integrand evaluation: fills out[i] = f(zs[i]).  Expensive
/// integrands (orbit sums, nested integrals) parallelize inside the batch.
using BatchFn = std::function<void(std::span<const Complex>, std::span<Complex>)>;

/// Lift a pointwise function to the batch interface.
BatchFn lift(PointFn f);

struct QuadResult {
    Complex value = 0.0;
    double err_est = 0.0;      // accumulated |GL31 - GL48| over accepted panels
    double max_abs_f = 0.0;    // largest sampled |f| (budget bookkeeping)
    double length = 0.0;       // Euclidean path length
    int panels = 0;
};

/// Adaptive Gauss-Legendre integration along the straight chord z0 -> z1.
/// Base rule 31 nodes (odd, so the panel center is always sampled); error
/// estimated against 48 nodes; panels bisect until the local estimate fits
/// the proportional share of `tol` (absolute) plus the double-precision
/// floor for the sampled magnitudes.  Throws ToleranceNotMet past depth 20.
QuadResult integrate_chord(const BatchFn& f, Complex z0, Complex z1, double tol);

/// Segment of a piecewise path in the upper half-plane.
struct Segment {
    enum class Kind { chord, arc } kind = Kind::chord;
    Complex z0, z1;             // chord endpoints
    Complex center;             // arc data
    double radius = 0.0, theta0 = 0.0, theta1 = 0.0;

    static Segment chord(Complex a, Complex b);
    static Segment arc(Complex center, double radius, double theta0, double theta1);
    Complex start() const;
    Complex end() const;
};

/// Piecewise path; construction checks continuity and Im > 0.
class PathInH {
  public:
    explicit PathInH(std::vector<Segment> segments);
    const std::vector<Segment>& segments() const { return segs_; }
    PathInH reversed() const;

  private:
    std::vector<Segment> segs_;
};

QuadResult integrate(const BatchFn& f, const PathInH& path, double tol);

/// n-th derivative by the Cauchy integral over |zeta - z| = r, trapezoidal
/// rule with max(64, 8(n+1)) nodes.  Throws DomainViolation if the disk
/// touches the real axis.
Complex cauchy_derivative(const PointFn& f, Complex z, int n, double r,
                          double* max_abs_f = nullptr);

}  // namespace pluriperiod
