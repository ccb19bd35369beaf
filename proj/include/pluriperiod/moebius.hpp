#pragma once

#include <functional>
#include <string>

#include "pluriperiod/types.hpp"

namespace pluriperiod {

/// Element of SL(2,R) acting on the upper half-plane H by z -> (az+b)/(cz+d).
/// The constructor rescales to det = +1; the overall sign of (a,b,c,d) is not
/// canonicalized (all weights in this library are even, so it never matters).
struct MoebiusMap {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    MoebiusMap() = default;
    MoebiusMap(double a_, double b_, double c_, double d_);

    static MoebiusMap identity() { return MoebiusMap(); }

    Complex apply(Complex z) const;
    Complex automorphy_factor(Complex z) const { return c * z + d; }

    MoebiusMap inverse() const;

    /// Translation distance of i: arccosh(1 + |Ai - i|^2 / (2 Im Ai)).
    double displacement() const;

    double trace() const { return a + d; }

    /// Entrywise distance min over the +-A sign ambiguity.
    double distance_to(const MoebiusMap& o) const;

    bool is_identity(double tol = 1e-9) const;

    /// Flip sign so the first entry with |x| > 1e-12 is positive (dedup key).
    MoebiusMap sign_normalized() const;
};

MoebiusMap compose(const MoebiusMap& A, const MoebiusMap& B);

enum class MapClass { identity, elliptic, parabolic, hyperbolic };

/// Classify by |trace| (validity check utility; the library itself only ever
/// wants hyperbolic elements and the identity).
MapClass classify(const MoebiusMap& A, double tol = 1e-9);

std::string to_string(const MoebiusMap& A);

/// Weight action (f[A]^{-n})(z) = f(Az) (cz+d)^{-n}.  This is a right action:
/// slash(slash(f,A,n),B,n) = slash(f,AB,n).  For weight-k automorphic f,
/// slash(f,A,k) = f.
PointFn slash(PointFn f, const MoebiusMap& A, int n);

}  // namespace pluriperiod
