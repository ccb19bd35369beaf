#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "pluriperiod/types.hpp"

namespace pluriperiod {

/// Genus-2 hyperelliptic curve y^2 = prod (x - e_k) over six increasing real
/// branch points.  The square-root sheet is fixed once at a reference anchor
/// high in the upper half x-plane and carried everywhere by analytic
/// continuation along straight segments, so all integrals share one global
/// determination.
class HyperellipticCurve {
  public:
    explicit HyperellipticCurve(std::vector<double> branch_points);

    int genus() const { return 2; }
    const std::vector<double>& branch_points() const { return e_; }
    Complex anchor() const { return anchor_; }

    /// y(x) on the anchor sheet (continuation anchor -> x along a segment).
    Complex sheet_value(Complex x) const;

    /// Continue a known determination w0 = y(x0) along the segment x0 -> x1;
    /// subdivides until each step moves the squared value by < 80%.
    Complex continue_segment(Complex x0, Complex w0, Complex x1) const;

    struct LoopResult {
        std::array<Complex, 2> integrals;  // of dx/y and x dx/y
        int monodromy;                     // +1 closed sheet, -1 flipped
    };

    /// Trapezoid integration around |x - center| = radius with node count
    /// `nodes`, starting at the top point; the sheet is tracked node to node
    /// with adaptive insertion, independent of the quadrature resolution.
    LoopResult circle_integrals(Complex center, double radius, int nodes) const;

  private:
    std::vector<double> e_;
    Complex anchor_;
    Complex anchor_value_;
};

struct PeriodMatrices {
    Eigen::Matrix2cd A;       // A(i,j) = integral of omega_i over a_j
    Eigen::Matrix2cd B;       // after the chain correction and sign fix
    Eigen::Matrix2cd raw_gap; // uncorrected gap-loop periods
    int chain_s;              // b1 = gap1 + chain_s * gap2
    bool b_flipped;           // global b sign applied for positivity
    int nodes;
};

/// Periods of (dx/y, x dx/y) over the a-cycles (circles around the cut
/// [e_{2i}, e_{2i+1}]) and the corrected b-cycles built from the gap loops.
PeriodMatrices hyperelliptic_periods(const HyperellipticCurve& C, int nodes = 512);

/// As above but with an explicit chain correction (control use); s99 = 99
/// means scan s in {-1,0,1} for the smallest symmetry residual.
PeriodMatrices hyperelliptic_periods_with(const HyperellipticCurve& C, int nodes,
                                          int chain_s, bool allow_flip);

struct RiemannBilinearCheck {
    double relation1_residual;  // ||A B^T - B A^T|| / ||A B^T||
    double min_imag_eig;        // least eigenvalue of Im(A^{-1} B)
    bool positive;
    double condition_A;         // conditioning of the a-period matrix
};
RiemannBilinearCheck riemann_bilinear(const PeriodMatrices& P);

/// Integer symplectic action on the stacked cycle basis (a1,a2,b1,b2).
PeriodMatrices symplectic_transform(const PeriodMatrices& P, const Eigen::Matrix4i& S);
bool is_symplectic(const Eigen::Matrix4i& S);
Eigen::Matrix4i random_symplectic(std::uint32_t seed, int factors = 6);

}  // namespace pluriperiod
