#pragma once

#include <memory>
#include <span>
#include <vector>

#include "pluriperiod/fuchsian.hpp"
#include "pluriperiod/orbit_kernel.hpp"
#include "pluriperiod/types.hpp"

namespace pluriperiod {

/// A weight-k automorphic form handle, k = 2 - 2m with integer m <= 0.
///
/// Backends:
///  * poincare -- truncated series sum_A w(Az)^nu jC(A,z)^{-k} over an orbit
///    ball (see poincare_term); automorphic only up to a truncation defect,
///    which is measured on the domain sides and stored in `defect_estimate`.
///  * exact    -- closed-form function that satisfies the transformation law
///    to rounding error (cyclic models); defect_estimate = 0.
///  * plain    -- arbitrary test function with no automorphy claim;
///    defect_estimate = 0 so downstream fits apply strict thresholds.
struct AutomorphicForm {
    enum class Backend { poincare, exact, plain };

    Backend backend = Backend::plain;
    std::shared_ptr<const GroupModel> group;
    int m = -1;         ///< weight parameter; k = 2 - 2m
    int weight = 4;     ///< k
    int seed_power = 0; ///< nu, poincare backend only
    std::shared_ptr<const OrbitSet> orbit;  ///< poincare backend only
    bool parallel = true;
    PointFn fn;         ///< exact / plain backends
    double defect_estimate = 0.0;

    Complex eval(Complex z) const;
    void eval_batch(std::span<const Complex> zs, std::span<Complex> out) const;
    PointFn as_pointfn() const;
};

/// |f(Az) - f(z) j(A,z)^k| / (1 + |f(z)|): pointwise failure of the weight-k
/// transformation law.
double automorphy_defect(const AutomorphicForm& f, const MoebiusMap& A, Complex z);

/// Deterministic panel used to measure truncation defects: octagon vertices,
/// edge midpoints, eight points on the polynomial-fit circle |tau - 2i| = 1/2,
/// and two interior points.
std::vector<Complex> defect_panel(const OctagonGroup& og);

/// Truncated Poincare series of seed w^nu at weight k = 2 - 2m (m <= -1) over
/// the ball of radius R.  defect_estimate is a safety factor times the largest
/// *absolute* law failure |f(Az) - f(z) j^k| sampled along each octagon side
/// with that side's own pairing letter.  These are exactly the configurations
/// every boundary reduction uses (point and image both stay on the compact
/// domain closure); letters that throw a sample point far down toward the
/// limit set are excluded on purpose, since no identity in the library ever
/// evaluates the law there and the |j|^k amplification at such points says
/// nothing about the quality of the truncation where it is used.
AutomorphicForm poincare_form(const OctagonGroup& og, int m, int nu, double R,
                              std::size_t cap = 1000000, bool parallel = true);

/// Exact weight-k form for the cyclic models: ipow(z, m-1) in the diagonal
/// model, and its conjugate under U = [[1,0],[1,1]] in the conjugated model.
AutomorphicForm cyclic_form(std::shared_ptr<const GroupModel> G, int m);

/// Wraps an arbitrary function as a weight-k "form" with no automorphy claim.
AutomorphicForm plain_function(std::shared_ptr<const GroupModel> G, int m, PointFn f);

/// Condition number of the 2x2 Gram matrix of two forms sampled over the
/// defect panel; large values flag near-linear-dependence of the pair.
double pair_gram_condition(const AutomorphicForm& f, const AutomorphicForm& g,
                           const OctagonGroup& og);

}  // namespace pluriperiod
