#include "pluriperiod/orbit_kernel.hpp"

#include <vector>

#include "pluriperiod/errors.hpp"

namespace pluriperiod {

Complex poincare_term(double a, double b, double c, double d, Complex z, int nu, int k) {
    // w(Az)^nu * jC^{-k} written as lo^nu * hi^{-k-nu}: w(Az) = lo / hi.
    const Complex lo = Complex(a, -c) * z + Complex(b, -d);
    const Complex hi = Complex(a, c) * z + Complex(b, d);
    return ipow(lo, nu) * ipow(hi, -k - nu);
}

namespace {

void check_points(std::span<const Complex> zs, std::span<Complex> out) {
    if (zs.size() != out.size())
        throw DomainViolation("orbit_sum: output span size mismatch");
    for (const Complex z : zs)
        if (!(z.imag() > 0.0))
            throw DomainViolation("orbit_sum: evaluation point off the upper half-plane");
}

Complex point_sum(const OrbitSet& orbit, Complex z, int nu, int k,
                  std::vector<Complex>& scratch) {
    const std::size_t n = orbit.size();
    scratch.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        scratch[i] = poincare_term(orbit.a[i], orbit.b[i], orbit.c[i], orbit.d[i], z, nu, k);
    return pairwise_sum(scratch);
}

}  // namespace

void orbit_sum_serial(const OrbitSet& orbit, std::span<const Complex> zs,
                      int nu, int k, std::span<Complex> out) {
    check_points(zs, out);
    std::vector<Complex> scratch;
    for (std::size_t p = 0; p < zs.size(); ++p)
        out[p] = point_sum(orbit, zs[p], nu, k, scratch);
}

void orbit_sum_parallel(const OrbitSet& orbit, std::span<const Complex> zs,
                        int nu, int k, std::span<Complex> out) {
    check_points(zs, out);
    const std::int64_t n = static_cast<std::int64_t>(zs.size());
#pragma omp parallel
    {
        std::vector<Complex> scratch;
#pragma omp for schedule(static)
        for (std::int64_t p = 0; p < n; ++p)
            out[p] = point_sum(orbit, zs[static_cast<std::size_t>(p)], nu, k,
                               scratch);
    }
}

void orbit_sum(const OrbitSet& orbit, std::span<const Complex> zs,
               int nu, int k, std::span<Complex> out, bool parallel) {
    if (parallel)
        orbit_sum_parallel(orbit, zs, nu, k, out);
    else
        orbit_sum_serial(orbit, zs, nu, k, out);
}

}  // namespace pluriperiod
