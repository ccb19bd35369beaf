#pragma once

#include <span>

#include "pluriperiod/fuchsian.hpp"
#include "pluriperiod/types.hpp"

namespace pluriperiod {

/// One orbit term w(Az)^nu * jC(A,z)^{-k} where w(z) = (z-i)/(z+i) is the
/// Cayley coordinate and jC(A,z) = (a+ic)z + (b+id) the automorphy factor of
/// the Cayley-composed matrix.  Relative to the naive j(A,z) = cz + d this
/// carries the extra decay (Az+i)^{-k}, which is what makes the sum converge
/// for a cocompact group: the limit set is the whole boundary circle, so a
/// merely bounded seed times j^{-k} picks up unbounded contributions from
/// elements that push z toward infinity.  In the disk model the same term is
/// h(Bu) B'(u)^{k/2} with h(u) = u^nu bounded, and sum |B'|^{k/2} converges
/// whenever k/2 exceeds the critical exponent 1.  Algebraically the term is a
/// ratio of two linear factors,
///     [(a-ic)z + (b-id)]^nu * [(a+ic)z + (b+id)]^{-k-nu},
/// whose only pole sits at Im = -1/(a^2+c^2) < 0, so every truncation is
/// holomorphic on the entire upper half-plane.
Complex poincare_term(double a, double b, double c, double d, Complex z, int nu, int k);

/// Serial reference path: for each point the orbit terms are evaluated in
/// canonical orbit order and combined with a fixed-order pairwise tree
/// reduction.
void orbit_sum_serial(const OrbitSet& orbit, std::span<const Complex> zs,
                      int nu, int k, std::span<Complex> out);

/// OpenMP path, parallel over evaluation points.  Every point uses the same
/// term order and reduction tree as the serial path, so the two paths agree
/// bitwise for any thread count.
void orbit_sum_parallel(const OrbitSet& orbit, std::span<const Complex> zs,
                        int nu, int k, std::span<Complex> out);

/// Dispatcher used by the rest of the library.
void orbit_sum(const OrbitSet& orbit, std::span<const Complex> zs,
               int nu, int k, std::span<Complex> out, bool parallel = true);

}  // namespace pluriperiod
