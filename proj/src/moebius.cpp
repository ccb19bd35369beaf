#include "pluriperiod/moebius.hpp"

#include <cmath>
#include <sstream>

#include "pluriperiod/errors.hpp"

namespace pluriperiod {

MoebiusMap::MoebiusMap(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    const double det = a * d - b * c;
    if (!(det > 0.0) || !std::isfinite(det))
        throw ConstructionFailure("MoebiusMap: determinant must be positive, got " +
                                  std::to_string(det));
    const double s = std::sqrt(det);
    a /= s; b /= s; c /= s; d /= s;
}

Complex MoebiusMap::apply(Complex z) const {
    const Complex den = c * z + d;
    if (std::abs(den) < 1e-300)
        throw NearPole("MoebiusMap::apply: evaluation at the pole of the map");
    return (a * z + b) / den;
}

MoebiusMap MoebiusMap::inverse() const {
    MoebiusMap r;
    r.a = d; r.b = -b; r.c = -c; r.d = a;
    return r;
}

double MoebiusMap::displacement() const {
    const Complex zi(0.0, 1.0);
    const Complex w = apply(zi);
    const double q = std::norm(w - zi) / (2.0 * w.imag());
    return std::acosh(1.0 + q);
}

double MoebiusMap::distance_to(const MoebiusMap& o) const {
    auto entry_dist = [&](double s) {
        double m = std::abs(a - s * o.a);
        m = std::max(m, std::abs(b - s * o.b));
        m = std::max(m, std::abs(c - s * o.c));
        m = std::max(m, std::abs(d - s * o.d));
        return m;
    };
    return std::min(entry_dist(1.0), entry_dist(-1.0));
}

bool MoebiusMap::is_identity(double tol) const {
    return distance_to(MoebiusMap::identity()) < tol;
}

MoebiusMap MoebiusMap::sign_normalized() const {
    const double v[4] = {a, b, c, d};
    double s = 1.0;
    for (double x : v) {
        if (std::abs(x) > 1e-12) { s = x > 0.0 ? 1.0 : -1.0; break; }
    }
    MoebiusMap r;
    r.a = s * a; r.b = s * b; r.c = s * c; r.d = s * d;
    return r;
}

MoebiusMap compose(const MoebiusMap& A, const MoebiusMap& B) {
    MoebiusMap r;
    r.a = A.a * B.a + A.b * B.c;
    r.b = A.a * B.b + A.b * B.d;
    r.c = A.c * B.a + A.d * B.c;
    r.d = A.c * B.b + A.d * B.d;
    return r;
}

MapClass classify(const MoebiusMap& A, double tol) {
    if (A.is_identity(tol)) return MapClass::identity;
    const double t = std::abs(A.trace());
    if (t < 2.0 - tol) return MapClass::elliptic;
    if (t > 2.0 + tol) return MapClass::hyperbolic;
    return MapClass::parabolic;
}

std::string to_string(const MoebiusMap& A) {
    std::ostringstream os;
    os << "[[" << A.a << ", " << A.b << "], [" << A.c << ", " << A.d << "]]";
    return os.str();
}

PointFn slash(PointFn f, const MoebiusMap& A, int n) {
    return [f = std::move(f), A, n](Complex z) {
        return f(A.apply(z)) * ipow(A.automorphy_factor(z), -n);
    };
}

}  // namespace pluriperiod
