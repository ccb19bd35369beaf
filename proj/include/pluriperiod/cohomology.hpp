#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pluriperiod/fuchsian.hpp"
#include "pluriperiod/polyspace.hpp"

namespace pluriperiod {

/// Matrix of P |-> P[B] on coefficient vectors of the module M of polynomials
/// of degree <= degree_bound (dim = degree_bound + 1).
Eigen::MatrixXcd slash_matrix(const MoebiusMap& B, int degree_bound);

/// Flatten generator values (one polynomial per generator) into one vector,
/// slot i holding the coefficients of values[i]; and back.
Eigen::VectorXcd stack_cocycle(const std::vector<BoundedPoly>& values);
std::vector<BoundedPoly> unstack_cocycle(const Eigen::VectorXcd& v, int degree_bound,
                                         int parts);

/// Value of a generator-indexed cocycle on an arbitrary word via the cocycle
/// expansion Omega_{uv} = Omega_u[v] + Omega_v and Omega_{x^{-1}} =
/// -Omega_x[x^{-1}].
BoundedPoly cocycle_on_word(const GroupModel& G, const std::vector<BoundedPoly>& gen_values,
                            const GroupWord& w, int degree_bound);

/// T : M^{2g} -> M sending generator values to the value on the defining
/// relator; its kernel is the space of cocycles of the surface group.
Eigen::MatrixXcd relator_condition_matrix(const GroupModel& G, int degree_bound);

/// D : M -> M^{2g}, P |-> (P[x_i] - P)_i; its image is the coboundaries and
/// its kernel the invariants M^Gamma.
Eigen::MatrixXcd coboundary_matrix(const GroupModel& G, int degree_bound);

struct RankResult {
    int rank;
    double gap;  // smallest kept / largest dropped singular value
};

/// Numerical rank at relative threshold 1e-8.  Demands a clean spectral gap
/// (>= 1e4) between kept and dropped singular values, else RankAmbiguous.
/// When nothing is dropped the gap is reported as the sentinel 1e12.
RankResult svd_rank(const Eigen::MatrixXcd& M);

struct CohomologyDimensions {
    int genus;
    int m;
    int dim_module;        // n + 1, n = -2m
    int dim_cocycles;      // dim Z^1
    int dim_coboundaries;  // dim B^1
    int dim_h1;            // dim Z^1 - dim B^1
    int dim_invariants;    // dim M^Gamma = dim ker D
    double sv_gap;         // min of the two rank gaps
};

/// Full dimension count for the surface group at weight parameter m <= 0.
CohomologyDimensions h1_dimension(const GroupModel& G, int m);

struct CoboundaryTest {
    bool is_coboundary;
    BoundedPoly witness;
    double residual;  // least-squares residual relative to the data scale
};

/// Least-squares solve of D P = values; residual below 1e-6 of the data scale
/// certifies the cocycle as a coboundary with the given witness.
CoboundaryTest solve_coboundary(const GroupModel& G, const std::vector<BoundedPoly>& values);

}  // namespace pluriperiod
