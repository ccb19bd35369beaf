#pragma once

#include <vector>

#include "pluriperiod/eichler.hpp"
#include "pluriperiod/forms.hpp"
#include "pluriperiod/types.hpp"

namespace pluriperiod {

/// A boundary-type integral together with its accumulated quadrature
/// bookkeeping; `budget` is the tolerance the value is entitled to, from the
/// truncation defects of the forms involved plus a quadrature floor.
struct IntegralAccum {
    Complex value = 0.0;
    double quad_err = 0.0;
    double max_abs_integrand = 0.0;
    double length = 0.0;
    double budget = 0.0;
};

/// Literal boundary sum over all 4g octagon sides of Phi(tau) psi(tau) dtau,
/// counter-clockwise.  Zero by holomorphy alone; its budget carries only
/// quadrature noise, independent of the truncation radius.
IntegralAccum bilinear_literal(const OctagonGroup& og, const EichlerIntegral& Phi,
                               const AutomorphicForm& psi, double tol);

/// The same quantity after folding paired sides:
///   - sum over pair representatives gamma_j of Int_{gamma_j} Omega_{A_j} psi,
/// with A_j the side-pairing map.  Equal to the literal sum in exact
/// arithmetic, but the folding uses the transformation law of both forms, so
/// this value is sensitive to the truncation defect and shrinks as the orbit
/// radius grows.
IntegralAccum boundary_reduced_sum(const OctagonGroup& og, const EichlerIntegral& Phi,
                                   const AutomorphicForm& psi, double tol);

/// Single-pair reduction on an arbitrary chord p0 -> p1 and group element A:
///   lhs = Int_p Phi psi - Int_{A p} Phi psi,   rhs = -Int_p Omega_A psi.
/// Works for octagon sides and for cyclic-model segments alike.
struct PairedIntegralCheck {
    Complex lhs, rhs;
    double abs_err;
    double budget;
    double quad_err, max_abs_integrand, length;
};
PairedIntegralCheck edge_pair_reduction(const EichlerIntegral& Phi,
                                        const AutomorphicForm& psi, Complex p0, Complex p1,
                                        const MoebiusMap& A, double tol);

/// One edge-moment comparison: the straight quadrature of sigma^mu psi along
/// an octagon side against the closed route through period-polynomial
/// coefficients of the vertex words.
struct MomentItem {
    int edge;
    int mu;
    Complex quadrature;
    Complex cocycle_route;
    double abs_err;
    double budget;
};

struct EdgeMomentReport {
    std::vector<MomentItem> items;
    double max_budget_ratio;             // max abs_err / budget
    std::vector<Complex> telescope_sums; // per mu: boundary sum of quadrature moments
    double telescope_budget;
};

/// All moments mu = 0..-2m on all 4g sides.  Throws SignConventionMismatch
/// if the comparisons only fit with the vertex difference reversed, which
/// indicates an orientation bug rather than noise.
EdgeMomentReport edge_moment_checks(const OctagonGroup& og, const AutomorphicForm& psi,
                                    double tol);

/// Multiply P by (c_A tau + d_A)^power; the degree bound grows by power.
/// With power = 2m - 2n this carries the weight-2m module into the
/// weight-2n module.
BoundedPoly twist_expand(const BoundedPoly& P, const MoebiusMap& A, int power);

/// Cross-weight side relation for indices n < m <= 0: on each pair
/// representative gamma_j with pairing A_j,
///   Int_{gamma_j} Omega_{A_j}(tau) j_{A_j}(tau)^{2m-2n} psi(tau) dtau
///     = Int_{gamma_j^{-1}} Omega_{A_j^{-1}}(tau) psi(tau) dtau,
/// where Omega is the weight-2m cocycle of Phi_m and psi has weight 2 - 2n.
/// route_gap compares Omega_{A^{-1}} built algebraically (-Omega_A[A^{-1}])
/// against the independent integral route.
struct CrossWeightCheck {
    int pair_index;  // 0-based over pair representatives
    Complex lhs, rhs;
    double abs_err;
    double budget;
    double route_gap;
};
std::vector<CrossWeightCheck> cross_weight_relation(const OctagonGroup& og,
                                                    const EichlerIntegral& Phi_m,
                                                    const AutomorphicForm& psi_n,
                                                    double tol);

}  // namespace pluriperiod
