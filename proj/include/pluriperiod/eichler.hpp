#pragma once

#include <memory>
#include <span>

#include "pluriperiod/contour.hpp"
#include "pluriperiod/forms.hpp"
#include "pluriperiod/polyspace.hpp"
#include "pluriperiod/types.hpp"

namespace pluriperiod {

/// The (1-2m)-fold antiderivative of a weight-(2-2m) form phi, normalized to
/// vanish at the base point:
///
///   Phi(tau) = (1/(-2m)!) * Int_{tau1}^{tau} (tau - sigma)^{-2m} phi(sigma) dsigma.
///
/// Evaluation integrates along the straight chord from tau1, which must stay
/// in the upper half-plane.  Values are cached per target point, so repeated
/// fits against the same node set pay for the quadrature once.
class EichlerIntegral {
public:
    EichlerIntegral(AutomorphicForm phi, Complex tau1, double tol = 1e-10);

    Complex eval(Complex tau) const;
    void eval_batch(std::span<const Complex> taus, std::span<Complex> out) const;
    PointFn as_pointfn() const;

    const AutomorphicForm& form() const { return phi_; }
    Complex base_point() const { return tau1_; }
    int m() const { return phi_.m; }
    double tol() const { return tol_; }

private:
    AutomorphicForm phi_;
    Complex tau1_;
    double tol_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// (1/(-2m)!) * Int_{from}^{to} (tau - sigma)^{-2m} phi(sigma) dsigma expanded
/// as a polynomial in tau (degree bound -2m) via the moment integrals of phi.
BoundedPoly moment_polynomial(const AutomorphicForm& phi, Complex from, Complex to,
                              double tol);

struct PeriodPoly {
    BoundedPoly poly;
    double residual;   // fit residual at the nodes
    double threshold;  // acceptance threshold actually applied
    double condition;  // Vandermonde condition estimate
};

/// Omega_A = Phi[A] - Phi as a degree <= -2m polynomial, obtained by fitting
/// (Phi[A] - Phi) at the standard nodes.  Throws NotPolynomial if the fit
/// residual exceeds max(1e-8, 50 * defect_estimate of the underlying form).
PeriodPoly period_polynomial(const EichlerIntegral& Phi, const MoebiusMap& A);

/// Same polynomial by the closed route: the moment expansion of the integral
/// from A^{-1} tau1 to tau1.  Exact up to quadrature error; no automorphy of
/// phi is used, so this is the reference the fit is compared against.
BoundedPoly period_via_integral(const EichlerIntegral& Phi, const MoebiusMap& A);

struct CocycleCheck {
    BoundedPoly lhs;   // Omega_{AB}
    BoundedPoly rhs;   // Omega_A[B] + Omega_B
    double distance;   // coeff_distance(lhs, rhs)
};

/// Cocycle relation Omega_{AB} = Omega_A[B] + Omega_B, all three sides built
/// independently from the integral route.
CocycleCheck verify_cocycle(const EichlerIntegral& Phi, const MoebiusMap& A,
                            const MoebiusMap& B);

/// Polynomial P with Omega^{tau2}_A = Omega^{tau1}_A + (P[A] - P): the
/// coboundary witnessing that a base-point change shifts the cocycle class
/// by an exact coboundary.
BoundedPoly connecting_polynomial(const EichlerIntegral& Phi, Complex tau2);

struct BolCheck {
    Complex lhs;         // f^(order)(Az)
    Complex rhs;         // f^(order)(z) * j(A,z)^{weight_out}
    double residual;     // |lhs-rhs| / max(|lhs|, |rhs|)
    double noise_floor;  // differentiation noise scale at this order
};

/// Differentiate f `order` times with the Cauchy integral on circles of
/// radius r and test f^(order)(Az) = f^(order)(z) j^{weight_out}.  For f of
/// weight 2m the relation is exact precisely when order = 1-2m and
/// weight_out = 2-2m.
BolCheck bol_check(const PointFn& f, const MoebiusMap& A, Complex z, int order,
                   int weight_out, double radius);

}  // namespace pluriperiod
