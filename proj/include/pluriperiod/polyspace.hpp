#pragma once

#include <vector>

#include "pluriperiod/moebius.hpp"
#include "pluriperiod/types.hpp"

namespace pluriperiod {

/// Polynomial with a hard degree bound; coefficient k multiplies tau^k.
/// Arithmetic that would exceed the bound throws DegreeOverflow.
class BoundedPoly {
  public:
    explicit BoundedPoly(int degree_bound);
    BoundedPoly(int degree_bound, std::vector<Complex> coeffs);

    int degree_bound() const { return degree_bound_; }
    const std::vector<Complex>& coeffs() const { return c_; }
    Complex coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    void set_coeff(int k, Complex v);

    Complex eval(Complex tau) const;

    BoundedPoly& operator+=(const BoundedPoly& o);
    BoundedPoly& operator-=(const BoundedPoly& o);
    BoundedPoly& operator*=(Complex s);

    friend BoundedPoly operator+(BoundedPoly l, const BoundedPoly& r) { return l += r; }
    friend BoundedPoly operator-(BoundedPoly l, const BoundedPoly& r) { return l -= r; }
    friend BoundedPoly operator*(Complex s, BoundedPoly p) { return p *= s; }

    double max_abs_coeff() const;

  private:
    int degree_bound_;
    std::vector<Complex> c_;  // size degree_bound_ + 1
};

/// Exact coefficient expansion of (P[A])(tau) = sum_k c_k (a tau + b)^k (c tau + d)^{d_bound - k},
/// i.e. the polynomial-space realization of the weight action with exponent
/// d_bound = -2m >= 0.  Right action: poly_slash(poly_slash(P,A,d),B,d) =
/// poly_slash(P, compose(A,B), d).
BoundedPoly poly_slash(const BoundedPoly& P, const MoebiusMap& A, int degree_bound);

/// max_k |c_k(P) - c_k(Q)| / (1 + |c_k(P)|): scale-aware coefficient metric.
double coeff_distance(const BoundedPoly& P, const BoundedPoly& Q);

struct PolyFit {
    BoundedPoly poly;
    double residual;    // max |poly(node) - sample| over the fit nodes
    double condition;   // sigma_max / sigma_min of the node Vandermonde
};

/// Least-squares fit of degree <= d through >= d+2 samples (value at node).
/// Throws IllConditioned if the Vandermonde condition estimate exceeds 1e8.
PolyFit fit_poly(const std::vector<std::pair<Complex, Complex>>& samples, int d);

/// The standard fit nodes: d+3 points equally spaced on |tau - 2i| = 1/2.
std::vector<Complex> fit_nodes(int d);

}  // namespace pluriperiod
