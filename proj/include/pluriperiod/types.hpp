#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pluriperiod {

using Complex = std::complex<double>;
using PointFn = std::function<Complex(Complex)>;

inline constexpr double kPi = 3.14159265358979323846;

/// z^n for integer n by binary exponentiation.  Branch-free (no log), so the
/// result is exact up to rounding for the integer weights used throughout.
inline Complex ipow(Complex z, int n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    Complex r = 1.0, b = z;
    unsigned e = static_cast<unsigned>(n);
    while (e != 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

/// n! as a double (exact for n <= 20 within double rounding).
inline double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

/// Binomial coefficient for small non-negative arguments.
inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

/// Fixed-order pairwise (tree) summation.  Used everywhere a reduction must be
/// reproducible bit-for-bit independently of thread count.
inline Complex pairwise_sum(std::span<const Complex> v) {
    if (v.size() <= 8) {
        Complex s = 0.0;
        for (const Complex& x : v) s += x;
        return s;
    }
    const std::size_t h = v.size() / 2;
    return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

}  // namespace pluriperiod
